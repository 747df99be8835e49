#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ifam {

namespace detail {
[[noreturn]] void fail(const std::string& msg);
inline void check(bool ok, const char* msg) {
    if (!ok) fail(msg);
}
}  // namespace detail

/// Closed integer interval [begin, end] of {1,...,n}, 1-based.
struct Interval {
    int begin = 0;
    int end = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Emission order used everywhere intervals are listed: end ascending,
/// and within one end, begin descending.
inline bool emission_less(const Interval& a, const Interval& b) {
    if (a.end != b.end) return a.end < b.end;
    return a.begin > b.begin;
}

/// Linear-space representation of an intersection-closed interval family:
/// [x,y] is a member iff r[x] >= y and l[y] <= x. Vectors are indexed
/// 1..n (slot 0 unused); bounds x <= r[x] <= n and 1 <= l[y] <= y force
/// every singleton into the family.
struct Generator {
    int n = 0;
    std::vector<int> r;
    std::vector<int> l;
};

Generator make_generator(int n, std::vector<int> r, std::vector<int> l);
bool generator_is_member(const Generator& g, int x, int y);
Generator generator_intersect(const Generator& a, const Generator& b);
std::vector<Interval> generator_materialize(const Generator& g);

/// Permutation of {1,...,n}; at[k] is the value at position k (at[0] unused).
struct Permutation {
    int n = 0;
    std::vector<int> at;
};

/// Unrooted tree on vertex set {1,...,n} given by its n-1 edges.
struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Directed acyclic graph on {1,...,n}; (u,v) means an arc u -> v.
struct Dag {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

// Validating constructors. Each throws std::invalid_argument with a
// diagnostic when the input does not satisfy the structural invariants.
Permutation make_permutation(std::vector<int> values);
LabeledTree make_labeled_tree(int n, std::vector<std::pair<int, int>> edges);
Dag make_dag(int n, std::vector<std::pair<int, int>> arcs);

std::vector<std::vector<int>> adjacency(const LabeledTree& t);

enum class FamilyKind : char {
    common = 'A',          // P(I) is an integer interval
    fixed = 'B',           // P(I) = I
    frame = 'C',           // P([x,y]) inside [P(x),P(y)]
    hurdle = 'D',          // P([x,y]) = [P(x),P(y)]
    tree_connected = 'E',  // T[I] connected
    tree_in_path = 'F',    // vertex set of I lies on one path of T
    tree_path = 'G',       // T[I] is a path
    dag_closed = 'H',      // I equals its reachability closure
};

FamilyKind parse_family_kind(const std::string& s);
char family_kind_letter(FamilyKind k);
bool kind_takes_permutation(FamilyKind k);
bool kind_takes_tree(FamilyKind k);
bool kind_takes_dag(FamilyKind k);

using Structure = std::variant<Permutation, LabeledTree, Dag>;

/// Checks that the structure matches what the family kind operates on.
void validate_structure(FamilyKind k, const Structure& s);
int structure_size(const Structure& s);

}  // namespace ifam
