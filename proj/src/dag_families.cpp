#include "ifam/dag_families.hpp"

#include <algorithm>

namespace ifam {

namespace {

std::vector<int> topological_order(const Dag& d) {
    std::vector<std::vector<int>> out(d.n + 1);
    std::vector<int> indeg(d.n + 1, 0);
    for (auto [u, v] : d.arcs) {
        out[u].push_back(v);
        ++indeg[v];
    }
    std::vector<int> order;
    order.reserve(d.n);
    for (int v = 1; v <= d.n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int w : out[order[head]])
            if (--indeg[w] == 0) order.push_back(w);
    detail::check((int)order.size() == d.n, "reach_extrema: arc relation has a cycle");
    return order;
}

// A vertex with a smaller label below it is not a potential beginning even
// of itself; the sweep must not store it (its singleton stays in the family
// through the generator bounds).
class ClosedOracle final : public SweepOracle {
public:
    explicit ClosedOracle(std::vector<int> min_below) : mb_(std::move(min_below)) {}
    StoreBehaviour behaviour() const override { return StoreBehaviour::stack; }
    bool dead_on_arrival(int y) const override { return mb_[y] < y; }
    bool evict_back(int x, int y) const override { return mb_[y] < x; }

private:
    std::vector<int> mb_;
};

}  // namespace

ReachExtrema reach_extrema(const Dag& d) {
    std::vector<std::vector<int>> out(d.n + 1);
    for (auto [u, v] : d.arcs) out[u].push_back(v);
    std::vector<int> order = topological_order(d);
    ReachExtrema re{std::vector<int>(d.n + 1, 0), std::vector<int>(d.n + 1, 0)};
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        re.min_below[v] = v;
        re.max_below[v] = v;
        for (int w : out[v]) {
            re.min_below[v] = std::min(re.min_below[v], re.min_below[w]);
            re.max_below[v] = std::max(re.max_below[v], re.max_below[w]);
        }
    }
    return re;
}

Dag reflect_labels(const Dag& d) {
    Dag out{d.n, d.arcs};
    for (auto& [u, v] : out.arcs) {
        u = d.n + 1 - u;
        v = d.n + 1 - v;
    }
    return out;
}

Generator closed_interval_generator(const Dag& d, SweepStats* stats) {
    ClosedOracle right(reach_extrema(d).min_below);
    std::vector<int> rs = sweep_right_splitters(d.n, right, stats);
    ClosedOracle left(reach_extrema(reflect_labels(d)).min_below);
    std::vector<int> ls = sweep_left_splitters(d.n, left, stats);
    return splitters_to_generator({d.n, std::move(rs), std::move(ls)});
}

std::int64_t enumerate_closed_intervals(const Dag& d, const IntervalSink& sink,
                                        SweepStats* stats) {
    ClosedOracle left(reach_extrema(reflect_labels(d)).min_below);
    std::vector<int> ls = sweep_left_splitters(d.n, left, stats);
    ClosedOracle right(reach_extrema(d).min_below);
    return sweep_enumerate(d.n, right, ls, sink, stats);
}

}  // namespace ifam
