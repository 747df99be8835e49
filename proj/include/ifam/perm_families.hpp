#pragma once

#include <optional>

#include "ifam/core.hpp"
#include "ifam/sweep.hpp"

namespace ifam {

/// Nearest-value side extrema of a permutation, all indexed by position
/// 1..n. min_greater_left[x] = min { P(z) : z < x, P(z) > P(x) } with
/// sentinel n+1 when the set is empty; max_smaller_left[x] is the mirror
/// with sentinel 0. The *_right arrays scan positions z > x.
struct SideExtrema {
    std::vector<int> min_greater_left;
    std::vector<int> max_smaller_left;
    std::vector<int> min_greater_right;
    std::vector<int> max_smaller_right;
};

SideExtrema side_extrema(const Permutation& p);

namespace detail {
/// Left pair only; the mirrored sweeps recompute it on the reflected
/// permutation, so the right pair is never touched on the hot paths.
void side_extrema_left(const Permutation& p, std::vector<int>& min_greater,
                       std::vector<int>& max_smaller);
}  // namespace detail

Permutation inverse(const Permutation& p);

/// q(k) = n+1 - p(n+1-k); reflects both positions and values, so each
/// permutation family class of q is the index-reflection of p's.
Permutation reverse_complement(const Permutation& p);

// The four permutation families. Each returns a generator built from two
// splitter sweeps in O(n).
Generator common_interval_generator(const Permutation& p, SweepStats* stats = nullptr);  // A
Generator fixed_interval_generator(const Permutation& p, SweepStats* stats = nullptr);   // B
Generator frame_interval_generator(const Permutation& p, SweepStats* stats = nullptr);   // C
Generator hurdle_generator(const Permutation& p, SweepStats* stats = nullptr);           // D

/// q = p2^{-1} o p1. The common intervals of the pair (p1,p2) are exactly
/// the class-A intervals of q, read as position windows of p1.
Permutation reduce_two_permutations(const Permutation& p1, const Permutation& p2);

/// Some interval [x,y] with 1 < y-x+1 < n whose image is an integer
/// interval, if one exists; the witness is whichever the sweep meets first.
std::optional<Interval> find_nontrivial_common_interval(const Permutation& p);

bool is_simple(const Permutation& p);

/// All K class-A intervals in O(n + K), emission order (y asc, x desc).
std::int64_t enumerate_common_intervals(const Permutation& p, const IntervalSink& sink,
                                        SweepStats* stats = nullptr);

std::int64_t enumerate_fixed_intervals(const Permutation& p, const IntervalSink& sink,
                                       SweepStats* stats = nullptr);
std::int64_t enumerate_frame_intervals(const Permutation& p, const IntervalSink& sink,
                                       SweepStats* stats = nullptr);

}  // namespace ifam
