#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "ifam/core.hpp"
#include "ifam/oracle.hpp"
#include "ifam/perm_families.hpp"

using namespace ifam;

namespace {

// The hand-built 9-vertex connected-intervals generator used across tests.
Generator reference_generator() {
    return make_generator(9, {9, 4, 4, 7, 7, 7, 9, 9, 9}, {1, 1, 1, 3, 4, 1, 6, 7, 1});
}

bool contains(const std::vector<Interval>& v, Interval iv) {
    return std::find(v.begin(), v.end(), iv) != v.end();
}

// Overlapping members must intersect inside the family.
void check_intersection_closed(const std::vector<Interval>& fam) {
    for (const Interval& a : fam)
        for (const Interval& b : fam) {
            if (a.begin >= b.begin || a.end < b.begin || a.end >= b.end) continue;
            CHECK(contains(fam, {b.begin, a.end}));
        }
}

Generator random_generator(int n, Seed seed) {
    SplitMix64 rng(seed);
    std::vector<int> r(n), l(n);
    for (int x = 1; x <= n; ++x) r[x - 1] = x + (int)rng.next_below(n - x + 1);
    for (int y = 1; y <= n; ++y) l[y - 1] = 1 + (int)rng.next_below(y);
    return make_generator(n, std::move(r), std::move(l));
}

}  // namespace

TEST_CASE("membership rule on the reference table") {
    Generator g = reference_generator();
    CHECK(generator_is_member(g, 1, 6));
    CHECK_FALSE(generator_is_member(g, 2, 5));
    for (int x = 1; x <= 9; ++x) CHECK(generator_is_member(g, x, x));
    CHECK_THROWS_AS(generator_is_member(g, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(generator_is_member(g, 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(generator_is_member(g, 5, 4), std::invalid_argument);
}

TEST_CASE("materialize the reference table") {
    std::vector<Interval> fam = generator_materialize(reference_generator());
    CHECK(fam.size() == 22);
    CHECK(contains(fam, {1, 6}));
    CHECK_FALSE(contains(fam, {2, 5}));
    CHECK(std::is_sorted(fam.begin(), fam.end(), emission_less));
    check_intersection_closed(fam);
}

TEST_CASE("materialize tiny generators") {
    Generator all2 = make_generator(2, {2, 2}, {1, 1});
    CHECK(generator_materialize(all2) == std::vector<Interval>{{1, 1}, {2, 2}, {1, 2}});

    Generator singles = make_generator(4, {1, 2, 3, 4}, {1, 2, 3, 4});
    CHECK(generator_materialize(singles) ==
          std::vector<Interval>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

TEST_CASE("generator bounds are enforced") {
    CHECK_THROWS_AS(make_generator(2, {0, 2}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(2, {2, 3}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(2, {2, 2}, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(2, {2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("intersection is pointwise min/max") {
    Generator a = make_generator(3, {3, 2, 3}, {1, 1, 2});
    Generator b = make_generator(3, {2, 3, 3}, {1, 2, 3});
    Generator c = generator_intersect(a, b);
    CHECK(std::vector<int>(c.r.begin() + 1, c.r.end()) == std::vector<int>{2, 2, 3});
    CHECK(std::vector<int>(c.l.begin() + 1, c.l.end()) == std::vector<int>{1, 2, 3});

    Generator aa = generator_intersect(a, a);
    CHECK(aa.r == a.r);
    CHECK(aa.l == a.l);

    Generator other = make_generator(2, {2, 2}, {1, 1});
    CHECK_THROWS_AS(generator_intersect(a, other), std::invalid_argument);
}

TEST_CASE("intersection materializes to the set intersection") {
    for (int n = 1; n <= 8; ++n)
        for (Seed s = 0; s < 20; ++s) {
            Generator a = random_generator(n, 101 * n + s);
            Generator b = random_generator(n, 909 * n + s);
            std::vector<Interval> am = generator_materialize(a);
            std::vector<Interval> bm = generator_materialize(b);
            std::vector<Interval> expect;
            for (const Interval& iv : am)
                if (contains(bm, iv)) expect.push_back(iv);
            CHECK(generator_materialize(generator_intersect(a, b)) == expect);
        }
}

TEST_CASE("hurdle generator equals class A meet class C member by member") {
    for (Seed s = 0; s < 30; ++s) {
        Permutation p = random_permutation(2 + (int)(s % 7), 555 + s);
        Generator d = hurdle_generator(p);
        std::vector<Interval> got = generator_materialize(d);
        CHECK(got == brute_force_family(FamilyKind::hurdle, p));
        check_intersection_closed(got);
    }
}

TEST_CASE("random generators stay intersection closed") {
    for (Seed s = 0; s < 40; ++s)
        check_intersection_closed(generator_materialize(random_generator(2 + (int)(s % 9), s)));
}

TEST_CASE("structure validation") {
    CHECK_THROWS_WITH_AS(make_permutation({1, 2, 2}),
                         doctest::Contains("not a bijection"), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({0, 1}), std::invalid_argument);

    LabeledTree path = make_labeled_tree(3, {{1, 2}, {2, 3}});
    CHECK(path.n == 3);
    CHECK_THROWS_WITH_AS(make_labeled_tree(3, {{1, 2}, {1, 2}}),
                         doctest::Contains("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(make_labeled_tree(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_labeled_tree(0, {}), std::invalid_argument);

    CHECK_THROWS_WITH_AS(make_dag(2, {{1, 2}, {2, 1}}), doctest::Contains("cycle detected"),
                         std::invalid_argument);
    CHECK_THROWS_AS(make_dag(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_dag(2, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK(make_dag(3, {{2, 1}}).n == 3);
}

TEST_CASE("kind and structure agreement") {
    Structure p = make_permutation({2, 1});
    Structure t = make_labeled_tree(2, {{1, 2}});
    CHECK_NOTHROW(validate_structure(FamilyKind::common, p));
    CHECK_THROWS_AS(validate_structure(FamilyKind::common, t), std::invalid_argument);
    CHECK_THROWS_AS(validate_structure(FamilyKind::dag_closed, t), std::invalid_argument);
    CHECK(parse_family_kind("E") == FamilyKind::tree_connected);
    CHECK_THROWS_AS(parse_family_kind("X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_kind("AB"), std::invalid_argument);
}
