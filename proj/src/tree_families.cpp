#include "ifam/tree_families.hpp"

#include <algorithm>
#include <map>

namespace ifam {

namespace detail {

RangeMinTable::RangeMinTable(std::vector<int> values) : values_(std::move(values)) {
    const int m = (int)values_.size();
    floor_log_.assign(m + 1, 0);
    for (int i = 2; i <= m; ++i) floor_log_[i] = floor_log_[i / 2] + 1;
    const int levels = m >= 1 ? floor_log_[m] + 1 : 0;
    rows_.resize(levels);
    if (levels == 0) return;
    rows_[0].resize(m);
    for (int i = 0; i < m; ++i) rows_[0][i] = i;
    for (int k = 1; k < levels; ++k) {
        const int len = 1 << k;
        rows_[k].resize(m - len + 1);
        for (int i = 0; i + len <= m; ++i) {
            int a = rows_[k - 1][i];
            int b = rows_[k - 1][i + len / 2];
            rows_[k][i] = values_[a] <= values_[b] ? a : b;
        }
    }
}

int RangeMinTable::argmin(int lo, int hi) const {
    check(0 <= lo && lo <= hi && hi < (int)values_.size(), "RangeMinTable: bad range");
    const int k = floor_log_[hi - lo + 1];
    int a = rows_[k][lo];
    int b = rows_[k][hi - (1 << k) + 1];
    return values_[a] <= values_[b] ? a : b;
}

LcaIndex::LcaIndex(const std::vector<std::vector<int>>& adj, int root) {
    const int n = (int)adj.size() - 1;
    first_.assign(n + 1, -1);
    depth_.assign(n + 1, 0);
    euler_vertex_.reserve(2 * n);
    std::vector<int> euler_depth;
    euler_depth.reserve(2 * n);
    // Iterative DFS; (vertex, next child slot) frames.
    std::vector<std::pair<int, std::size_t>> stack;
    stack.emplace_back(root, 0);
    first_[root] = 0;
    euler_vertex_.push_back(root);
    euler_depth.push_back(0);
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot < adj[v].size()) {
            int w = adj[v][slot++];
            if (first_[w] != -1) continue;  // already visited (the parent edge)
            depth_[w] = depth_[v] + 1;
            first_[w] = (int)euler_vertex_.size();
            euler_vertex_.push_back(w);
            euler_depth.push_back(depth_[w]);
            stack.emplace_back(w, 0);
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                euler_vertex_.push_back(stack.back().first);
                euler_depth.push_back(depth_[stack.back().first]);
            }
        }
    }
    rmq_ = RangeMinTable(std::move(euler_depth));
}

int LcaIndex::lca(int u, int v) const {
    int a = first_[u], b = first_[v];
    check(a >= 0 && b >= 0, "LcaIndex: vertex not covered by the tour");
    if (a > b) std::swap(a, b);
    return euler_vertex_[rmq_.argmin(a, b)];
}

int LcaIndex::depth(int u) const { return depth_[u]; }

}  // namespace detail

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Parent relation of the topological Cartesian tree: remove labels in
// decreasing order; each removed vertex adopts the current root (= minimum)
// of every already-removed neighbor component. Vertex 1 ends up as root and
// the LCA of x and y carries the minimum label on their tree path.
std::vector<std::vector<int>> cartesian_adjacency(const LabeledTree& t) {
    const int n = t.n;
    auto adj = adjacency(t);
    std::vector<int> uf(n + 1), comp_root(n + 1);
    for (int v = 1; v <= n; ++v) uf[v] = comp_root[v] = v;
    auto find = [&](int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    };
    std::vector<std::vector<int>> cart(n + 1);
    for (int v = n; v >= 1; --v) {
        for (int w : adj[v]) {
            if (w < v) continue;
            int rep = find(w);
            int root = comp_root[rep];
            cart[v].push_back(root);  // v becomes the parent of that component
            uf[rep] = v;
            comp_root[find(v)] = v;
        }
    }
    return cart;
}

// Class E: x stays a potential beginning of y while the x..y path carries
// no label below x.
class ConnectedOracle final : public SweepOracle {
public:
    explicit ConnectedOracle(const MinPathIndex& idx) : idx_(idx) {}
    StoreBehaviour behaviour() const override { return StoreBehaviour::stack; }
    bool evict_back(int x, int y) const override { return idx_.min_on_path(x, y) < x; }

private:
    const MinPathIndex& idx_;
};

// Class F: the stored vertices {lo..y-1} always lie on one path; they are
// mirrored in a map ordered by position along that path (64-bit coordinates,
// front/back = the covering path's ends). A new y evicts a prefix of labels
// while the three-point alignment test fails, then joins the map at the end
// it extends or at its interior position.
class InPathOracle final : public SweepOracle {
public:
    explicit InPathOracle(const MinPathIndex& idx)
        : idx_(idx), coord_of_(idx.size() + 1, 0) {}

    StoreBehaviour behaviour() const override { return StoreBehaviour::deque; }
    bool evict_back(int, int) const override { return false; }

    bool evict_front(int, int y) const override {
        if (by_coord_.size() < 2) return false;
        const int a = by_coord_.begin()->second;
        const int b = by_coord_.rbegin()->second;
        return !(idx_.on_path(a, y, b) || idx_.on_path(y, a, b) || idx_.on_path(a, b, y));
    }

    void on_push(int y) override {
        std::int64_t coord = 0;
        if (!by_coord_.empty()) {
            const auto front = *by_coord_.begin();
            const auto back = *by_coord_.rbegin();
            if (by_coord_.size() == 1 || idx_.on_path(front.second, back.second, y)) {
                coord = back.first + idx_.dist(back.second, y);   // extends past the back
            } else if (idx_.on_path(y, front.second, back.second)) {
                coord = front.first - idx_.dist(front.second, y);  // extends past the front
            } else {
                coord = front.first + idx_.dist(front.second, y);  // interior position
            }
        }
        auto [it, inserted] = by_coord_.emplace(coord, y);
        detail::check(inserted, "in-path store: duplicate path coordinate");
        coord_of_[y] = coord;
    }

    void on_evict(int x) override { by_coord_.erase(coord_of_[x]); }

private:
    const MinPathIndex& idx_;
    std::map<std::int64_t, int> by_coord_;
    std::vector<std::int64_t> coord_of_;
};

template <class Oracle>
Generator two_sweep_generator(const LabeledTree& t, SweepStats* stats) {
    MinPathIndex idx(t);
    Oracle right(idx);
    std::vector<int> rs = sweep_right_splitters(t.n, right, stats);
    LabeledTree rt = reflect_labels(t);
    MinPathIndex ridx(rt);
    Oracle left(ridx);
    std::vector<int> ls = sweep_left_splitters(t.n, left, stats);
    return splitters_to_generator({t.n, std::move(rs), std::move(ls)});
}

}  // namespace

MinPathIndex::MinPathIndex(const LabeledTree& t) : n_(t.n) {
    cartesian_ = detail::LcaIndex(cartesian_adjacency(t), 1);
    original_ = detail::LcaIndex(adjacency(t), 1);
}

int MinPathIndex::min_on_path(int x, int y) const {
    require(1 <= x && x <= n_ && 1 <= y && y <= n_, "min_on_path: vertex out of range");
    return cartesian_.lca(x, y);
}

int MinPathIndex::dist(int x, int y) const {
    return original_.depth(x) + original_.depth(y) - 2 * original_.depth(original_.lca(x, y));
}

bool MinPathIndex::on_path(int a, int mid, int b) const {
    return dist(a, mid) + dist(mid, b) == dist(a, b);
}

MinPathIndex build_min_path_index(const LabeledTree& t) { return MinPathIndex(t); }

int min_on_path(const MinPathIndex& idx, int x, int y) { return idx.min_on_path(x, y); }

LabeledTree reflect_labels(const LabeledTree& t) {
    LabeledTree out{t.n, t.edges};
    for (auto& [u, v] : out.edges) {
        u = t.n + 1 - u;
        v = t.n + 1 - v;
    }
    return out;
}

Generator connected_interval_generator(const LabeledTree& t, SweepStats* stats) {
    return two_sweep_generator<ConnectedOracle>(t, stats);
}

std::int64_t enumerate_connected_intervals(const LabeledTree& t, const IntervalSink& sink,
                                           SweepStats* stats) {
    MinPathIndex idx(t);
    LabeledTree rt = reflect_labels(t);
    MinPathIndex ridx(rt);
    ConnectedOracle left(ridx);
    std::vector<int> ls = sweep_left_splitters(t.n, left, stats);
    ConnectedOracle right(idx);
    return sweep_enumerate(t.n, right, ls, sink, stats);
}

Generator in_path_generator(const LabeledTree& t, SweepStats* stats) {
    return two_sweep_generator<InPathOracle>(t, stats);
}

std::int64_t enumerate_in_path_intervals(const LabeledTree& t, const IntervalSink& sink,
                                         SweepStats* stats) {
    LabeledTree rt = reflect_labels(t);
    MinPathIndex ridx(rt);
    InPathOracle left(ridx);
    std::vector<int> ls = sweep_left_splitters(t.n, left, stats);
    MinPathIndex idx(t);
    InPathOracle right(idx);
    return sweep_enumerate(t.n, right, ls, sink, stats);
}

Generator path_interval_generator(const LabeledTree& t, SweepStats* stats) {
    return generator_intersect(connected_interval_generator(t, stats),
                               in_path_generator(t, stats));
}

}  // namespace ifam
