#pragma once

#include "ifam/core.hpp"
#include "ifam/sweep.hpp"

namespace ifam {

enum class NodeLabel { leaf, increasing, decreasing, prime };

const char* node_label_name(NodeLabel l);

/// Node of the decomposition tree of a permutation's class-A family.
/// pos is the position range spanned, [val_min, val_max] the value range;
/// every node satisfies val_max - val_min == pos.end - pos.begin. Children
/// partition pos left to right; a leaf has none.
struct DecompositionNode {
    NodeLabel label = NodeLabel::leaf;
    Interval pos;
    int val_min = 0;
    int val_max = 0;
    std::vector<DecompositionNode> children;

    DecompositionNode() = default;
    DecompositionNode(NodeLabel l, Interval p, int vmin, int vmax)
        : label(l), pos(p), val_min(vmin), val_max(vmax) {}
    DecompositionNode(const DecompositionNode&) = default;
    DecompositionNode(DecompositionNode&&) noexcept = default;
    DecompositionNode& operator=(const DecompositionNode&) = default;
    DecompositionNode& operator=(DecompositionNode&&) noexcept = default;
    // Iterative teardown; nested chains can reach depth n and must not
    // exhaust the call stack.
    ~DecompositionNode();

    friend bool operator==(const DecompositionNode&, const DecompositionNode&) = default;
};

/// Ordered labeled tree whose node set is exactly the overlap-free members
/// of the family; leaves read left to right are positions 1..n.
struct DecompositionTree {
    int n = 0;
    DecompositionNode root;

    friend bool operator==(const DecompositionTree&, const DecompositionTree&) = default;
};

struct BuildStats {
    std::int64_t extensions = 0;
    std::int64_t prime_creations = 0;
};

/// Single-pass O(n) construction.
DecompositionTree build_decomposition_tree(const Permutation& p, BuildStats* stats = nullptr);

/// Emits the whole family the tree represents: every node's position range
/// plus, per linear node, every union of >= 2 consecutive children short of
/// the full child list. Emission order (y asc, x desc).
std::int64_t expand_family(const DecompositionTree& t, const IntervalSink& sink);

/// The permutation induced by the value-order of an internal node's
/// children; identity for increasing nodes, reversal for decreasing ones,
/// simple with >= 3 elements for prime ones. Throws on a leaf.
Permutation node_quotient(const DecompositionNode& node);

}  // namespace ifam
