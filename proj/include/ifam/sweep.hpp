#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ifam/core.hpp"

namespace ifam {

enum class StoreBehaviour { stack, deque };

/// Instrumentation counters for one or more sweeps. A vertex that is dead
/// on arrival counts as one push and one removal, matching the accounting
/// of the unguarded loop it replaces.
struct SweepStats {
    std::int64_t pushes = 0;
    std::int64_t removals = 0;
};

/// Family-specific eviction rules plugged into the generic splitter sweep.
///
/// The engine stores candidate beginnings in increasing order and consults
/// the oracle when a new vertex y arrives: rear elements are dropped while
/// evict_back holds, then (deque behaviour only) front elements while
/// evict_front holds, then y itself is stored unless dead_on_arrival(y).
/// Stateful oracles mirror the store through on_push/on_evict; one oracle
/// instance drives exactly one pass.
class SweepOracle {
public:
    virtual ~SweepOracle() = default;

    virtual StoreBehaviour behaviour() const = 0;

    /// True when y is not a potential beginning even of itself; such a
    /// vertex is never stored and gets splitter y+1.
    virtual bool dead_on_arrival(int) const { return false; }

    /// Must the rear (largest) stored element x be removed when y arrives?
    virtual bool evict_back(int x, int y) const = 0;

    /// Must the front (smallest) stored element x be removed when y arrives?
    /// Consulted for deque behaviour only.
    virtual bool evict_front(int, int) const { return false; }

    virtual void on_push(int) {}
    virtual void on_evict(int) {}
};

/// rsplitter[x] = smallest y > x at which x stops being a potential
/// beginning, n+1 if never. Vector is indexed 1..n, slot 0 unused.
std::vector<int> sweep_right_splitters(int n, SweepOracle& oracle,
                                       SweepStats* stats = nullptr);

/// Mirror sweep. `reflected_oracle` must describe the family of the
/// label-reflected structure (v -> n+1-v); the result is re-expressed in
/// original indexing: lsplitter[y] = largest x < y at which y stops being
/// a potential end, 0 if never.
std::vector<int> sweep_left_splitters(int n, SweepOracle& reflected_oracle,
                                      SweepStats* stats = nullptr);

struct SplitterVectors {
    int n = 0;
    std::vector<int> rsplitter;  // indexed 1..n, values in [x+1, n+1]
    std::vector<int> lsplitter;  // indexed 1..n, values in [0, y-1]
};

/// (lsplitter+1, rsplitter-1) is a generator of the swept family.
Generator splitters_to_generator(const SplitterVectors& s);

using IntervalSink = std::function<void(Interval)>;

/// Emits every member once, grouped by end y in increasing order and by
/// begin x in decreasing order within one y; O(n + K) oracle evaluations.
/// `lsplitter` must have been computed for the same family.
std::int64_t sweep_enumerate(int n, SweepOracle& oracle,
                             const std::vector<int>& lsplitter,
                             const IntervalSink& sink,
                             SweepStats* stats = nullptr);

}  // namespace ifam
