#include "ifam/decomposition.hpp"

#include <algorithm>

#include "ifam/perm_families.hpp"

namespace ifam {

namespace {

using detail::check;

struct Builder {
    const std::vector<int>& val;
    const int n;
    std::vector<int> mgl, msl;
    // Stack of potential beginnings with per-entry gap extrema (min/max of
    // P over the positions strictly above the entry below, entry included).
    std::vector<int> xs, gap_min, gap_max;
    std::vector<DecompositionNode> forest;
    BuildStats stats;

    explicit Builder(const Permutation& p) : val(p.at), n(p.n) {
        ifam::detail::side_extrema_left(p, mgl, msl);
        xs.reserve(n);
        forest.reserve(n);
        gap_min.reserve(n);
        gap_max.reserve(n);
    }

    void arrive(int y) {
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

    // Monotonic extension between the rear committed tree and a. Fresh
    // two-child nodes seed the linear chains; when either root already
    // carries the matching label the other tree folds into its child list,
    // keeping linear nodes flat.
    bool try_extension(DecompositionNode& a) {
        if (forest.empty()) return false;
        DecompositionNode& rear = forest.back();
        const bool asc = rear.val_max + 1 == a.val_min;
        const bool desc = rear.val_min - 1 == a.val_max;
        if (!asc && !desc) return false;
        const NodeLabel lin = asc ? NodeLabel::increasing : NodeLabel::decreasing;
        check(!(rear.label == lin && a.label == lin),
              "decomposition: rear tree and current tree both carry the extension label");
        const int vmin = std::min(rear.val_min, a.val_min);
        const int vmax = std::max(rear.val_max, a.val_max);
        if (rear.label == lin) {
            DecompositionNode t = std::move(rear);
            forest.pop_back();
            t.pos.end = a.pos.end;
            t.val_min = vmin;
            t.val_max = vmax;
            t.children.push_back(std::move(a));
            a = std::move(t);
        } else if (a.label == lin) {
            DecompositionNode r = std::move(rear);
            forest.pop_back();
            a.pos.begin = r.pos.begin;
            a.val_min = vmin;
            a.val_max = vmax;
            a.children.insert(a.children.begin(), std::move(r));
        } else {
            DecompositionNode node(lin, {rear.pos.begin, a.pos.end}, vmin, vmax);
            node.children.push_back(std::move(rear));
            forest.pop_back();
            node.children.push_back(std::move(a));
            a = std::move(node);
        }
        ++stats.extensions;
        return true;
    }

    // Prime super-node over the rear trees spanning [x, y]; the candidate x
    // and the span extrema come from the walker over the beginnings stack.
    void create_prime(DecompositionNode& a, int x, int y, int vmin, int vmax) {
        std::size_t cut = forest.size();
        while (cut > 0 && forest[cut - 1].pos.begin >= x) --cut;
        check(cut < forest.size() && forest[cut].pos.begin == x,
              "decomposition: prime support does not start at a tree boundary");
        check(forest.size() - cut >= 2, "decomposition: prime node needs >= 3 children");
        DecompositionNode node(NodeLabel::prime, {x, y}, vmin, vmax);
        if (cut == 0) {
            node.children = std::move(forest);  // the usual one-shot final merge
            forest.clear();
        } else {
            node.children.reserve(forest.size() - cut + 1);
            for (std::size_t i = cut; i < forest.size(); ++i)
                node.children.push_back(std::move(forest[i]));
            forest.erase(forest.begin() + (std::ptrdiff_t)cut, forest.end());
        }
        node.children.push_back(std::move(a));
        a = std::move(node);
        ++stats.prime_creations;
    }

    void process(int y) {
        arrive(y);
        DecompositionNode a(NodeLabel::leaf, {y, y}, val[y], val[y]);
        // Walker over the beginnings stack: acc covers (xs[widx], y].
        int widx = (int)xs.size() - 1;
        int acc_min = n + 1, acc_max = 0;
        auto advance = [&] {
            acc_min = std::min(acc_min, gap_min[widx]);
            acc_max = std::max(acc_max, gap_max[widx]);
            --widx;
        };
        advance();
        for (;;) {
            if (try_extension(a)) continue;
            while (widx >= 0 && xs[widx] >= a.pos.begin) advance();
            if (widx >= 0) {
                const int x = xs[widx];
                const int smin = std::min(acc_min, val[x]);
                const int smax = std::max(acc_max, val[x]);
                if (smax - smin == y - x) {
                    create_prime(a, x, y, smin, smax);
                    continue;
                }
            }
            break;
        }
        forest.push_back(std::move(a));
    }
};

void expand_node(const DecompositionNode& root, std::vector<Interval>& out) {
    std::vector<const DecompositionNode*> stack{&root};
    while (!stack.empty()) {
        const DecompositionNode& node = *stack.back();
        stack.pop_back();
        out.push_back(node.pos);
        if (node.label == NodeLabel::increasing || node.label == NodeLabel::decreasing) {
            const int k = (int)node.children.size();
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    if (i == 0 && j == k - 1) continue;  // that union is the node itself
                    out.push_back({node.children[i].pos.begin, node.children[j].pos.end});
                }
        }
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
            stack.push_back(&*it);
    }
}

}  // namespace

DecompositionNode::~DecompositionNode() {
    if (children.empty()) return;
    std::vector<DecompositionNode> pending = std::move(children);
    while (!pending.empty()) {
        DecompositionNode nd = std::move(pending.back());
        pending.pop_back();
        if (nd.children.empty()) continue;
        if (pending.empty()) {
            pending = std::move(nd.children);
        } else {
            pending.insert(pending.end(), std::make_move_iterator(nd.children.begin()),
                           std::make_move_iterator(nd.children.end()));
            nd.children.clear();
        }
    }
}

const char* node_label_name(NodeLabel l) {
    switch (l) {
        case NodeLabel::leaf: return "Leaf";
        case NodeLabel::increasing: return "Increasing";
        case NodeLabel::decreasing: return "Decreasing";
        case NodeLabel::prime: return "Prime";
    }
    detail::fail("node_label_name: bad label");
}

DecompositionTree build_decomposition_tree(const Permutation& p, BuildStats* stats) {
    check(p.n >= 1, "decomposition: n must be positive");
    Builder b(p);
    for (int y = 1; y <= p.n; ++y) b.process(y);
    check(b.forest.size() == 1, "decomposition: construction left a forest");
    check(b.stats.extensions + b.stats.prime_creations <= p.n - 1,
          "decomposition: more than n-1 structural updates");
    if (stats) {
        stats->extensions += b.stats.extensions;
        stats->prime_creations += b.stats.prime_creations;
    }
    return DecompositionTree{p.n, std::move(b.forest.front())};
}

std::int64_t expand_family(const DecompositionTree& t, const IntervalSink& sink) {
    std::vector<Interval> out;
    expand_node(t.root, out);
    std::sort(out.begin(), out.end(), emission_less);
    for (const Interval& iv : out) sink(iv);
    return (std::int64_t)out.size();
}

Permutation node_quotient(const DecompositionNode& node) {
    if (node.children.empty())
        throw std::invalid_argument("node_quotient: leaf has no quotient");
    const int k = (int)node.children.size();
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return node.children[a].val_min < node.children[b].val_min;
    });
    std::vector<int> values(k);
    for (int rank = 0; rank < k; ++rank) values[order[rank]] = rank + 1;
    return make_permutation(std::move(values));
}

}  // namespace ifam
