#include "ifam/sweep.hpp"

namespace ifam {

std::vector<int> sweep_right_splitters(int n, SweepOracle& oracle, SweepStats* stats) {
    detail::check(n >= 1, "sweep: n must be positive");
    std::vector<int> rs(n + 1, n + 1);
    std::vector<int> store;
    store.reserve(n);
    std::size_t front = 0;
    const bool deque = oracle.behaviour() == StoreBehaviour::deque;
    SweepStats local;
    for (int y = 1; y <= n; ++y) {
        while (store.size() > front && oracle.evict_back(store.back(), y)) {
            rs[store.back()] = y;
            oracle.on_evict(store.back());
            store.pop_back();
            ++local.removals;
        }
        if (deque) {
            while (store.size() > front && oracle.evict_front(store[front], y)) {
                rs[store[front]] = y;
                oracle.on_evict(store[front]);
                ++front;
                ++local.removals;
            }
        }
        ++local.pushes;
        if (oracle.dead_on_arrival(y)) {
            rs[y] = y + 1;
            ++local.removals;
        } else {
            store.push_back(y);
            oracle.on_push(y);
        }
    }
    if (stats) {
        stats->pushes += local.pushes;
        stats->removals += local.removals;
    }
    return rs;
}

std::vector<int> sweep_left_splitters(int n, SweepOracle& reflected_oracle,
                                      SweepStats* stats) {
    std::vector<int> rs = sweep_right_splitters(n, reflected_oracle, stats);
    std::vector<int> ls(n + 1, 0);
    for (int y = 1; y <= n; ++y) ls[y] = n + 1 - rs[n + 1 - y];
    return ls;
}

Generator splitters_to_generator(const SplitterVectors& s) {
    detail::check(s.n >= 1 && (int)s.rsplitter.size() == s.n + 1 &&
                      (int)s.lsplitter.size() == s.n + 1,
                  "splitters_to_generator: vectors must be indexed 1..n");
    Generator g{s.n, std::vector<int>(s.n + 1, 0), std::vector<int>(s.n + 1, 0)};
    for (int x = 1; x <= s.n; ++x) {
        detail::check(s.rsplitter[x] > x && s.rsplitter[x] <= s.n + 1,
                      "splitters_to_generator: rsplitter out of range");
        g.r[x] = s.rsplitter[x] - 1;
    }
    for (int y = 1; y <= s.n; ++y) {
        detail::check(s.lsplitter[y] >= 0 && s.lsplitter[y] < y,
                      "splitters_to_generator: lsplitter out of range");
        g.l[y] = s.lsplitter[y] + 1;
    }
    return g;
}

std::int64_t sweep_enumerate(int n, SweepOracle& oracle,
                             const std::vector<int>& lsplitter,
                             const IntervalSink& sink, SweepStats* stats) {
    detail::check((int)lsplitter.size() == n + 1, "sweep_enumerate: bad lsplitter size");
    std::vector<int> store;
    store.reserve(n);
    std::size_t front = 0;
    const bool deque = oracle.behaviour() == StoreBehaviour::deque;
    SweepStats local;
    std::int64_t count = 0;
    for (int y = 1; y <= n; ++y) {
        while (store.size() > front && oracle.evict_back(store.back(), y)) {
            oracle.on_evict(store.back());
            store.pop_back();
            ++local.removals;
        }
        if (deque) {
            while (store.size() > front && oracle.evict_front(store[front], y)) {
                oracle.on_evict(store[front]);
                ++front;
                ++local.removals;
            }
        }
        ++local.pushes;
        if (oracle.dead_on_arrival(y)) {
            ++local.removals;
            sink({y, y});  // forced singleton; y itself is never stored
            ++count;
        } else {
            store.push_back(y);
            oracle.on_push(y);
        }
        // Beginnings ending at y form a suffix of the store.
        for (std::size_t i = store.size(); i-- > front;) {
            int x = store[i];
            if (x <= lsplitter[y]) break;
            sink({x, y});
            ++count;
        }
    }
    if (stats) {
        stats->pushes += local.pushes;
        stats->removals += local.removals;
    }
    return count;
}

}  // namespace ifam
