#include "ifam/perm_families.hpp"

#include <algorithm>

namespace ifam {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Values 1..n kept in a sorted doubly-linked list with sentinels 0 and n+1;
// unlinking P(x) leaves its neighbors pointing at the nearest remaining
// values, which are exactly the side extrema at position x.
void fill_side_pair(const Permutation& p, bool from_right, std::vector<int>& min_greater,
                    std::vector<int>& max_smaller) {
    const int n = p.n;
    std::vector<int> nxt(n + 2), prv(n + 2);
    for (int v = 0; v <= n + 1; ++v) {
        nxt[v] = v + 1;
        prv[v] = v - 1;
    }
    min_greater.assign(n + 1, 0);
    max_smaller.assign(n + 1, 0);
    auto visit = [&](int x) {
        int v = p.at[x];
        nxt[prv[v]] = nxt[v];
        prv[nxt[v]] = prv[v];
        min_greater[x] = nxt[v];  // n+1 sentinel falls out naturally
        max_smaller[x] = prv[v];  // 0 sentinel likewise
    };
    if (from_right) {
        for (int x = n; x >= 1; --x) visit(x);
    } else {
        for (int x = 1; x <= n; ++x) visit(x);
    }
}

// Class A: x stays a potential beginning while no value strictly between
// P(x) and P(y) occurred left of x.
class CommonOracle final : public SweepOracle {
public:
    explicit CommonOracle(const Permutation& p) : val_(&p.at) {
        detail::side_extrema_left(p, mgl_, msl_);
    }
    StoreBehaviour behaviour() const override { return StoreBehaviour::stack; }
    bool evict_back(int x, int y) const override {
        return mgl_[x] < (*val_)[y] || msl_[x] > (*val_)[y];
    }

private:
    const std::vector<int>* val_;
    std::vector<int> mgl_, msl_;
};

// Class B: x stays while min P([x,y]) >= x.
class FixedOracle final : public SweepOracle {
public:
    explicit FixedOracle(const Permutation& p) : val_(&p.at) {}
    StoreBehaviour behaviour() const override { return StoreBehaviour::stack; }
    bool dead_on_arrival(int y) const override { return (*val_)[y] < y; }
    bool evict_back(int x, int y) const override { return (*val_)[y] < x; }

private:
    const std::vector<int>* val_;
};

// Class C: x stays while min P([x,y]) >= P(x).
class FrameOracle final : public SweepOracle {
public:
    explicit FrameOracle(const Permutation& p) : val_(&p.at) {}
    StoreBehaviour behaviour() const override { return StoreBehaviour::stack; }
    bool evict_back(int x, int y) const override { return (*val_)[y] < (*val_)[x]; }

private:
    const std::vector<int>* val_;
};

template <class Oracle>
Generator two_sweep_generator(const Permutation& p, SweepStats* stats) {
    Oracle right(p);
    std::vector<int> rs = sweep_right_splitters(p.n, right, stats);
    Permutation q = reverse_complement(p);
    Oracle left(q);
    std::vector<int> ls = sweep_left_splitters(p.n, left, stats);
    return splitters_to_generator({p.n, std::move(rs), std::move(ls)});
}

template <class Oracle>
std::int64_t oracle_enumerate(const Permutation& p, const IntervalSink& sink,
                              SweepStats* stats) {
    Permutation q = reverse_complement(p);
    Oracle left(q);
    std::vector<int> ls = sweep_left_splitters(p.n, left, stats);
    Oracle right(p);
    return sweep_enumerate(p.n, right, ls, sink, stats);
}

// Shared state of the simplicity test and the class-A enumerator: the stack
// of potential beginnings plus, per entry, the min/max of P over the gap
// down to (and excluding) the entry below.
struct BeginningsStack {
    const std::vector<int>& val;
    std::vector<int> mgl, msl;
    std::vector<int> xs, gap_min, gap_max;

    explicit BeginningsStack(const Permutation& p) : val(p.at) {
        detail::side_extrema_left(p, mgl, msl);
        xs.reserve(p.n);
        gap_min.reserve(p.n);
        gap_max.reserve(p.n);
    }

    // Arrival of y: evict dead beginnings, then store y with the merged gap.
    void step(int y) {
        int mini = val[y], maxi = val[y];
        while (!xs.empty() && (mgl[xs.back()] < val[y] || msl[xs.back()] > val[y])) {
            mini = std::min(mini, gap_min.back());
            maxi = std::max(maxi, gap_max.back());
            xs.pop_back();
            gap_min.pop_back();
            gap_max.pop_back();
        }
        xs.push_back(y);
        gap_min.push_back(mini);
        gap_max.push_back(maxi);
    }
};

}  // namespace

SideExtrema side_extrema(const Permutation& p) {
    SideExtrema se;
    fill_side_pair(p, /*from_right=*/true, se.min_greater_left, se.max_smaller_left);
    fill_side_pair(p, /*from_right=*/false, se.min_greater_right, se.max_smaller_right);
    return se;
}

namespace detail {
void side_extrema_left(const Permutation& p, std::vector<int>& min_greater,
                       std::vector<int>& max_smaller) {
    fill_side_pair(p, /*from_right=*/true, min_greater, max_smaller);
}
}  // namespace detail

Permutation inverse(const Permutation& p) {
    Permutation q{p.n, std::vector<int>(p.n + 1, 0)};
    for (int k = 1; k <= p.n; ++k) q.at[p.at[k]] = k;
    return q;
}

Permutation reverse_complement(const Permutation& p) {
    Permutation q{p.n, std::vector<int>(p.n + 1, 0)};
    for (int k = 1; k <= p.n; ++k) q.at[k] = p.n + 1 - p.at[p.n + 1 - k];
    return q;
}

Generator common_interval_generator(const Permutation& p, SweepStats* stats) {
    return two_sweep_generator<CommonOracle>(p, stats);
}

Generator fixed_interval_generator(const Permutation& p, SweepStats* stats) {
    return two_sweep_generator<FixedOracle>(p, stats);
}

Generator frame_interval_generator(const Permutation& p, SweepStats* stats) {
    return two_sweep_generator<FrameOracle>(p, stats);
}

Generator hurdle_generator(const Permutation& p, SweepStats* stats) {
    return generator_intersect(common_interval_generator(p, stats),
                               frame_interval_generator(p, stats));
}

Permutation reduce_two_permutations(const Permutation& p1, const Permutation& p2) {
    require(p1.n == p2.n, "reduce_two_permutations: size mismatch");
    Permutation pos2 = inverse(p2);
    Permutation q{p1.n, std::vector<int>(p1.n + 1, 0)};
    for (int k = 1; k <= p1.n; ++k) q.at[k] = pos2.at[p1.at[k]];
    return q;
}

std::optional<Interval> find_nontrivial_common_interval(const Permutation& p) {
    BeginningsStack st(p);
    for (int y = 1; y <= p.n; ++y) {
        st.step(y);
        if (st.xs.size() < 2) continue;
        int x = st.xs[st.xs.size() - 2];
        if (y - x + 1 >= p.n) continue;
        int lo = std::min(st.gap_min.back(), st.val[x]);
        int hi = std::max(st.gap_max.back(), st.val[x]);
        if (hi - lo == y - x) return Interval{x, y};
    }
    return std::nullopt;
}

bool is_simple(const Permutation& p) {
    return !find_nontrivial_common_interval(p).has_value();
}

std::int64_t enumerate_common_intervals(const Permutation& p, const IntervalSink& sink,
                                        SweepStats* stats) {
    BeginningsStack st(p);
    SweepStats local;
    std::int64_t count = 0;
    for (int y = 1; y <= p.n; ++y) {
        std::size_t before = st.xs.size();
        st.step(y);
        ++local.pushes;
        local.removals += before + 1 - st.xs.size();
        // Walk the suffix of stored beginnings; the span test doubles as
        // both the membership check and the stop condition.
        int lo = p.n + 1, hi = 0;
        for (std::size_t i = st.xs.size(); i-- > 0;) {
            int x = st.xs[i];
            int smin = std::min(lo, st.val[x]);
            int smax = std::max(hi, st.val[x]);
            if (smax - smin != y - x) break;
            sink({x, y});
            ++count;
            lo = std::min(lo, st.gap_min[i]);
            hi = std::max(hi, st.gap_max[i]);
        }
    }
    if (stats) {
        stats->pushes += local.pushes;
        stats->removals += local.removals;
    }
    return count;
}

std::int64_t enumerate_fixed_intervals(const Permutation& p, const IntervalSink& sink,
                                       SweepStats* stats) {
    return oracle_enumerate<FixedOracle>(p, sink, stats);
}

std::int64_t enumerate_frame_intervals(const Permutation& p, const IntervalSink& sink,
                                       SweepStats* stats) {
    return oracle_enumerate<FrameOracle>(p, sink, stats);
}

}  // namespace ifam
