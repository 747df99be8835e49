#pragma once

#include "ifam/core.hpp"
#include "ifam/decomposition.hpp"

namespace ifam {

using Seed = std::uint64_t;

/// splitmix64: the fixed pseudo-random generator behind every seeded
/// instance, so instances reproduce bit-for-bit across platforms and
/// implementations. next_below reduces by modulo.
class SplitMix64 {
public:
    explicit SplitMix64(Seed seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Fisher-Yates: for i = n..2, swap slot i with slot 1 + next_below(i).
Permutation random_permutation(int n, Seed seed);

/// Random parent among the previous vertices, then a random relabeling.
LabeledTree random_tree(int n, Seed seed);

/// Each pair gets an arc with the given probability, oriented along a
/// random topological order.
Dag random_dag(int n, double density, Seed seed);

Structure random_instance(FamilyKind kind, int n, Seed seed, double dag_density = 0.3);

/// Definition-level reference: evaluates the class predicate directly on
/// every interval (singletons are force-included for every class). Sorted
/// in emission order. Cubic-ish time is fine; this is the test oracle.
std::vector<Interval> brute_force_family(FamilyKind kind, const Permutation& p);
std::vector<Interval> brute_force_family(FamilyKind kind, const LabeledTree& t);
std::vector<Interval> brute_force_family(FamilyKind kind, const Dag& d);
std::vector<Interval> brute_force_family(FamilyKind kind, const Structure& s);

/// Reference decomposition tree: computes the class-A family, keeps the
/// overlap-free members, builds the inclusion tree and labels each internal
/// node from its children's value order.
DecompositionTree brute_force_decomposition(const Permutation& p);

}  // namespace ifam
