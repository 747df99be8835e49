#pragma once

#include "ifam/core.hpp"
#include "ifam/sweep.hpp"

namespace ifam {

namespace detail {

/// Sparse table answering arg-min over a fixed int array, O(n log n) build,
/// O(1) query on closed ranges.
class RangeMinTable {
public:
    RangeMinTable() = default;
    explicit RangeMinTable(std::vector<int> values);
    int argmin(int lo, int hi) const;  // inclusive; index of the minimum value

private:
    std::vector<int> values_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> floor_log_;
};

/// Constant-time LCA over a rooted tree via Euler tour + RangeMinTable.
class LcaIndex {
public:
    LcaIndex() = default;
    LcaIndex(const std::vector<std::vector<int>>& adj, int root);
    int lca(int u, int v) const;
    int depth(int u) const;

private:
    std::vector<int> first_, depth_, euler_vertex_;
    RangeMinTable rmq_;
};

}  // namespace detail

/// Answers minimum-label-on-path and lies-on-path queries in O(1) after an
/// O(n log n) build: an LCA index over the topological Cartesian tree of
/// the labeled tree (LCA label = path minimum) plus depths and an LCA index
/// over the tree itself for distance tests.
class MinPathIndex {
public:
    explicit MinPathIndex(const LabeledTree& t);

    int size() const { return n_; }
    int min_on_path(int x, int y) const;
    int dist(int x, int y) const;
    /// True when mid lies on the path from a to b (endpoints included).
    bool on_path(int a, int mid, int b) const;

private:
    int n_ = 0;
    detail::LcaIndex cartesian_;
    detail::LcaIndex original_;
};

MinPathIndex build_min_path_index(const LabeledTree& t);
int min_on_path(const MinPathIndex& idx, int x, int y);

/// Same tree with every label v replaced by n+1-v.
LabeledTree reflect_labels(const LabeledTree& t);

Generator connected_interval_generator(const LabeledTree& t, SweepStats* stats = nullptr);  // E
std::int64_t enumerate_connected_intervals(const LabeledTree& t, const IntervalSink& sink,
                                           SweepStats* stats = nullptr);
Generator in_path_generator(const LabeledTree& t, SweepStats* stats = nullptr);     // F
std::int64_t enumerate_in_path_intervals(const LabeledTree& t, const IntervalSink& sink,
                                         SweepStats* stats = nullptr);
Generator path_interval_generator(const LabeledTree& t, SweepStats* stats = nullptr);  // G

}  // namespace ifam
