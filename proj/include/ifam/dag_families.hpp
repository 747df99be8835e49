#pragma once

#include "ifam/core.hpp"
#include "ifam/sweep.hpp"

namespace ifam {

/// Reachability extrema: min_below[v] / max_below[v] are the smallest and
/// largest labels reachable from v, v itself included.
struct ReachExtrema {
    std::vector<int> min_below;
    std::vector<int> max_below;
};

ReachExtrema reach_extrema(const Dag& d);

/// Same arcs with every label v replaced by n+1-v (directions kept).
Dag reflect_labels(const Dag& d);

/// Class H: all singletons plus the intervals equal to their reachability
/// closure. O(n+m).
Generator closed_interval_generator(const Dag& d, SweepStats* stats = nullptr);
std::int64_t enumerate_closed_intervals(const Dag& d, const IntervalSink& sink,
                                        SweepStats* stats = nullptr);

}  // namespace ifam
