#include "ifam/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace ifam {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

std::vector<Interval> sorted(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), emission_less);
    return v;
}

std::vector<Interval> perm_family(FamilyKind kind, const Permutation& p) {
    const auto& val = p.at;
    std::vector<Interval> out;
    for (int x = 1; x <= p.n; ++x) {
        int mn = val[x], mx = val[x];
        for (int y = x; y <= p.n; ++y) {
            mn = std::min(mn, val[y]);
            mx = std::max(mx, val[y]);
            bool in = false;
            if (y == x) {
                in = true;  // singleton convention, every class
            } else {
                switch (kind) {
                    case FamilyKind::common: in = mx - mn == y - x; break;
                    case FamilyKind::fixed: in = mn == x && mx == y; break;
                    case FamilyKind::frame: in = mn >= val[x] && mx <= val[y]; break;
                    case FamilyKind::hurdle:
                        in = mn == val[x] && mx == val[y] && mx - mn == y - x;
                        break;
                    default: detail::fail("perm_family: bad kind");
                }
            }
            if (in) out.push_back({x, y});
        }
    }
    return sorted(std::move(out));
}

struct TreeScratch {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<int>> dist;  // BFS distances from every vertex

    explicit TreeScratch(const LabeledTree& t) : n(t.n), adj(adjacency(t)) {
        dist.assign(n + 1, std::vector<int>(n + 1, -1));
        std::vector<int> queue;
        for (int s = 1; s <= n; ++s) {
            auto& d = dist[s];
            d[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                int v = queue[head];
                for (int w : adj[v])
                    if (d[w] == -1) {
                        d[w] = d[v] + 1;
                        queue.push_back(w);
                    }
            }
        }
    }

    bool connected(int x, int y) const {
        std::vector<char> seen(n + 1, 0);
        std::vector<int> queue{x};
        seen[x] = 1;
        int reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (int w : adj[queue[head]])
                if (x <= w && w <= y && !seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push_back(w);
                }
        return reached == y - x + 1;
    }

    // {x..y} fits on one path iff every member lies on the path between the
    // two members at maximum pairwise distance.
    bool on_one_path(int x, int y) const {
        int a = x, b = x, best = 0;
        for (int u = x; u <= y; ++u)
            for (int v = u + 1; v <= y; ++v)
                if (dist[u][v] > best) {
                    best = dist[u][v];
                    a = u;
                    b = v;
                }
        for (int w = x; w <= y; ++w)
            if (dist[a][w] + dist[w][b] != dist[a][b]) return false;
        return true;
    }

    bool induced_path(int x, int y) const {
        if (!connected(x, y)) return false;
        for (int v = x; v <= y; ++v) {
            int deg = 0;
            for (int w : adj[v]) deg += (x <= w && w <= y);
            if (deg > 2) return false;
        }
        return true;
    }
};

std::vector<Interval> tree_family(FamilyKind kind, const LabeledTree& t) {
    TreeScratch ts(t);
    std::vector<Interval> out;
    for (int x = 1; x <= t.n; ++x)
        for (int y = x; y <= t.n; ++y) {
            bool in = false;
            if (y == x) {
                in = true;
            } else {
                switch (kind) {
                    case FamilyKind::tree_connected: in = ts.connected(x, y); break;
                    case FamilyKind::tree_in_path: in = ts.on_one_path(x, y); break;
                    case FamilyKind::tree_path: in = ts.induced_path(x, y); break;
                    default: detail::fail("tree_family: bad kind");
                }
            }
            if (in) out.push_back({x, y});
        }
    return sorted(std::move(out));
}

std::vector<Interval> dag_family(const Dag& d) {
    std::vector<std::vector<int>> out_arcs(d.n + 1);
    for (auto [u, v] : d.arcs) out_arcs[u].push_back(v);
    std::vector<Interval> out;
    std::vector<char> seen(d.n + 1, 0);
    for (int x = 1; x <= d.n; ++x)
        for (int y = x; y <= d.n; ++y) {
            bool closed = true;
            if (y > x) {
                std::fill(seen.begin(), seen.end(), 0);
                std::vector<int> queue;
                for (int v = x; v <= y; ++v) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
                for (std::size_t head = 0; head < queue.size() && closed; ++head)
                    for (int w : out_arcs[queue[head]]) {
                        if (w < x || w > y) {
                            closed = false;
                            break;
                        }
                        if (!seen[w]) {
                            seen[w] = 1;
                            queue.push_back(w);
                        }
                    }
            }
            if (closed) out.push_back({x, y});
        }
    return sorted(std::move(out));
}

bool overlaps(const Interval& a, const Interval& b) {
    bool intersect = a.begin <= b.end && b.begin <= a.end;
    bool a_in_b = b.begin <= a.begin && a.end <= b.end;
    bool b_in_a = a.begin <= b.begin && b.end <= a.end;
    return intersect && !a_in_b && !b_in_a;
}

DecompositionNode oracle_node(const Permutation& p, const std::vector<Interval>& strong,
                              std::size_t self, const std::vector<std::vector<std::size_t>>& kids) {
    const Interval iv = strong[self];
    int vmin = p.at[iv.begin], vmax = p.at[iv.begin];
    for (int k = iv.begin; k <= iv.end; ++k) {
        vmin = std::min(vmin, p.at[k]);
        vmax = std::max(vmax, p.at[k]);
    }
    DecompositionNode node(NodeLabel::leaf, iv, vmin, vmax);
    if (kids[self].empty()) return node;
    for (std::size_t c : kids[self]) node.children.push_back(oracle_node(p, strong, c, kids));
    bool inc = true, dec = true;
    for (std::size_t i = 1; i < node.children.size(); ++i) {
        inc &= node.children[i - 1].val_max < node.children[i].val_min;
        dec &= node.children[i - 1].val_min > node.children[i].val_max;
    }
    node.label = inc   ? NodeLabel::increasing
                 : dec ? NodeLabel::decreasing
                       : NodeLabel::prime;
    return node;
}

}  // namespace

Permutation random_permutation(int n, Seed seed) {
    require(n >= 1, "random_permutation: n must be positive");
    SplitMix64 rng(seed);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    for (int i = n - 1; i >= 1; --i)
        std::swap(values[i], values[rng.next_below(i + 1)]);
    return make_permutation(std::move(values));
}

LabeledTree random_tree(int n, Seed seed) {
    require(n >= 1, "random_tree: n must be positive");
    SplitMix64 rng(seed);
    std::vector<int> label(n + 1);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n; i >= 2; --i) std::swap(label[i], label[1 + rng.next_below(i)]);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 2; v <= n; ++v) {
        int parent = 1 + (int)rng.next_below(v - 1);
        edges.emplace_back(label[parent], label[v]);
    }
    return make_labeled_tree(n, std::move(edges));
}

Dag random_dag(int n, double density, Seed seed) {
    require(n >= 1, "random_dag: n must be positive");
    require(density >= 0.0 && density <= 1.0, "random_dag: density must be in [0,1]");
    SplitMix64 rng(seed);
    std::vector<int> order(n + 1);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n; i >= 2; --i) std::swap(order[i], order[1 + rng.next_below(i)]);
    const std::uint64_t threshold = (std::uint64_t)(density * 1e6);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.next_below(1000000) < threshold) arcs.emplace_back(order[i], order[j]);
    return make_dag(n, std::move(arcs));
}

Structure random_instance(FamilyKind kind, int n, Seed seed, double dag_density) {
    if (kind_takes_permutation(kind)) return random_permutation(n, seed);
    if (kind_takes_tree(kind)) return random_tree(n, seed);
    return random_dag(n, dag_density, seed);
}

std::vector<Interval> brute_force_family(FamilyKind kind, const Permutation& p) {
    require(kind_takes_permutation(kind), "brute_force_family: kind/structure mismatch");
    return perm_family(kind, p);
}

std::vector<Interval> brute_force_family(FamilyKind kind, const LabeledTree& t) {
    require(kind_takes_tree(kind), "brute_force_family: kind/structure mismatch");
    return tree_family(kind, t);
}

std::vector<Interval> brute_force_family(FamilyKind kind, const Dag& d) {
    require(kind_takes_dag(kind), "brute_force_family: kind/structure mismatch");
    return dag_family(d);
}

std::vector<Interval> brute_force_family(FamilyKind kind, const Structure& s) {
    validate_structure(kind, s);
    return std::visit([&](const auto& v) { return brute_force_family(kind, v); }, s);
}

DecompositionTree brute_force_decomposition(const Permutation& p) {
    std::vector<Interval> family = perm_family(FamilyKind::common, p);
    std::vector<Interval> strong;
    for (const Interval& a : family) {
        bool free = true;
        for (const Interval& b : family)
            if (overlaps(a, b)) {
                free = false;
                break;
            }
        if (free) strong.push_back(a);
    }
    // Parent of u = smallest strict superset; children ordered by position.
    auto size_of = [](const Interval& iv) { return iv.end - iv.begin; };
    std::vector<std::size_t> by_size(strong.size());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        if (size_of(strong[a]) != size_of(strong[b]))
            return size_of(strong[a]) < size_of(strong[b]);
        return strong[a].begin < strong[b].begin;
    });
    std::vector<std::vector<std::size_t>> kids(strong.size());
    std::size_t root = by_size.back();
    for (std::size_t oi = 0; oi + 1 < by_size.size(); ++oi) {
        std::size_t u = by_size[oi];
        std::size_t best = root;
        for (std::size_t oj = oi + 1; oj < by_size.size(); ++oj) {
            std::size_t v = by_size[oj];
            if (strong[v].begin <= strong[u].begin && strong[u].end <= strong[v].end &&
                size_of(strong[v]) > size_of(strong[u])) {
                best = v;
                break;
            }
        }
        kids[best].push_back(u);
    }
    for (auto& c : kids)
        std::sort(c.begin(), c.end(),
                  [&](std::size_t a, std::size_t b) { return strong[a].begin < strong[b].begin; });
    return DecompositionTree{p.n, oracle_node(p, strong, root, kids)};
}

}  // namespace ifam
