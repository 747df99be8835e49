#include "ifam/core.hpp"

#include <algorithm>
#include <numeric>

namespace ifam {

namespace detail {
void fail(const std::string& msg) { throw std::logic_error(msg); }
}  // namespace detail

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Generator make_generator(int n, std::vector<int> r, std::vector<int> l) {
    require(n >= 1, "generator: n must be positive");
    require((int)r.size() == n && (int)l.size() == n,
            "generator: R and L must have length n");
    r.insert(r.begin(), 0);
    l.insert(l.begin(), 0);
    for (int x = 1; x <= n; ++x)
        require(x <= r[x] && r[x] <= n,
                "generator: R[" + std::to_string(x) + "] out of [x,n]");
    for (int y = 1; y <= n; ++y)
        require(1 <= l[y] && l[y] <= y,
                "generator: L[" + std::to_string(y) + "] out of [1,y]");
    return Generator{n, std::move(r), std::move(l)};
}

bool generator_is_member(const Generator& g, int x, int y) {
    require(1 <= x && x <= y && y <= g.n, "generator_is_member: need 1 <= x <= y <= n");
    return g.r[x] >= y && g.l[y] <= x;
}

Generator generator_intersect(const Generator& a, const Generator& b) {
    require(a.n == b.n, "generator_intersect: size mismatch");
    Generator out{a.n, std::vector<int>(a.n + 1, 0), std::vector<int>(a.n + 1, 0)};
    for (int x = 1; x <= a.n; ++x) out.r[x] = std::min(a.r[x], b.r[x]);
    for (int y = 1; y <= a.n; ++y) out.l[y] = std::max(a.l[y], b.l[y]);
    return out;
}

std::vector<Interval> generator_materialize(const Generator& g) {
    std::vector<Interval> out;
    for (int y = 1; y <= g.n; ++y)
        for (int x = y; x >= 1; --x)
            if (g.r[x] >= y && g.l[y] <= x) out.push_back({x, y});
    return out;
}

Permutation make_permutation(std::vector<int> values) {
    int n = (int)values.size();
    require(n >= 1, "permutation: empty input");
    std::vector<char> seen(n + 1, 0);
    for (int v : values) {
        require(1 <= v && v <= n, "permutation: value " + std::to_string(v) +
                                      " out of range 1.." + std::to_string(n));
        require(!seen[v], "permutation: not a bijection, value " +
                              std::to_string(v) + " repeats");
        seen[v] = 1;
    }
    values.insert(values.begin(), 0);
    return Permutation{n, std::move(values)};
}

LabeledTree make_labeled_tree(int n, std::vector<std::pair<int, int>> edges) {
    require(n >= 1, "tree: n must be positive");
    require((int)edges.size() == n - 1, "tree: expected " + std::to_string(n - 1) +
                                            " edges, got " + std::to_string(edges.size()));
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : edges) {
        require(1 <= u && u <= n && 1 <= v && v <= n, "tree: edge endpoint out of range");
        require(u != v, "tree: self-loop edge");
        int ru = root(u), rv = root(v);
        require(ru != rv, "tree: edge set contains a cycle");
        parent[ru] = rv;
    }
    // n-1 edges and no cycle imply connectivity.
    return LabeledTree{n, std::move(edges)};
}

Dag make_dag(int n, std::vector<std::pair<int, int>> arcs) {
    require(n >= 1, "dag: n must be positive");
    std::vector<std::vector<int>> out(n + 1);
    for (auto [u, v] : arcs) {
        require(1 <= u && u <= n && 1 <= v && v <= n, "dag: arc endpoint out of range");
        require(u != v, "dag: self-loop arc");
        out[u].push_back(v);
    }
    std::vector<std::pair<int, int>> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "dag: duplicate arc");
    // Kahn's algorithm: every vertex must drain or there is a cycle.
    std::vector<int> indeg(n + 1, 0);
    for (auto [u, v] : arcs) ++indeg[v];
    std::vector<int> queue;
    for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    size_t head = 0;
    int drained = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        ++drained;
        for (int w : out[u])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    require(drained == n, "dag: cycle detected");
    return Dag{n, std::move(arcs)};
}

std::vector<std::vector<int>> adjacency(const LabeledTree& t) {
    std::vector<std::vector<int>> adj(t.n + 1);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

FamilyKind parse_family_kind(const std::string& s) {
    require(s.size() == 1, "family kind: expected one of A..H");
    char c = s[0];
    require('A' <= c && c <= 'H', "family kind: expected one of A..H, got '" + s + "'");
    return static_cast<FamilyKind>(c);
}

char family_kind_letter(FamilyKind k) { return static_cast<char>(k); }

bool kind_takes_permutation(FamilyKind k) {
    char c = family_kind_letter(k);
    return c >= 'A' && c <= 'D';
}

bool kind_takes_tree(FamilyKind k) {
    char c = family_kind_letter(k);
    return c >= 'E' && c <= 'G';
}

bool kind_takes_dag(FamilyKind k) { return k == FamilyKind::dag_closed; }

void validate_structure(FamilyKind k, const Structure& s) {
    bool ok = (kind_takes_permutation(k) && std::holds_alternative<Permutation>(s)) ||
              (kind_takes_tree(k) && std::holds_alternative<LabeledTree>(s)) ||
              (kind_takes_dag(k) && std::holds_alternative<Dag>(s));
    require(ok, std::string("family kind ") + family_kind_letter(k) +
                    " does not accept this structure");
}

int structure_size(const Structure& s) {
    return std::visit([](const auto& v) { return v.n; }, s);
}

}  // namespace ifam
