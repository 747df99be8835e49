// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// anything fails. `--write-golden` regenerates the committed reference
// serialization from the brute-force oracle.
#include <chrono>
#ifdef __GLIBC__
#include <malloc.h>
#endif
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "ifam/dag_families.hpp"
#include "ifam/decomposition.hpp"
#include "ifam/io.hpp"
#include "ifam/oracle.hpp"
#include "ifam/perm_families.hpp"
#include "ifam/tree_families.hpp"

using namespace ifam;

namespace {

std::string golden_path() { return std::string(IFAM_GOLDEN_DIR) + "/decomposition_n18.json"; }

Permutation reference_perm_8() { return make_permutation({3, 8, 1, 5, 7, 4, 6, 2}); }

Permutation reference_perm_18() {
    return make_permutation({6, 7, 8, 9, 3, 5, 1, 4, 2, 14, 16, 15, 17, 18, 12, 10, 13, 11});
}

Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return make_permutation(std::move(v));
}

Permutation reversal(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return make_permutation(std::move(v));
}

LabeledTree star(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return make_labeled_tree(n, edges);
}

template <class Fn>
double best_of(int repetitions, Fn&& fn) {
    double best = 1e18;
    for (int i = 0; i < repetitions; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

struct Failure {
    std::ostringstream msg;
    bool failed = false;

    template <class T>
    Failure& operator<<(const T& v) {
        failed = true;
        msg << v;
        return *this;
    }
};

// --- criterion 1 -----------------------------------------------------------

bool exhaustive_permutations(Failure& why) {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        do {
            Permutation p = make_permutation(v);
            if (generator_materialize(common_interval_generator(p)) !=
                brute_force_family(FamilyKind::common, p)) {
                why << "class A mismatch at n=" << n;
                return false;
            }
            if (generator_materialize(fixed_interval_generator(p)) !=
                brute_force_family(FamilyKind::fixed, p)) {
                why << "class B mismatch at n=" << n;
                return false;
            }
            if (generator_materialize(frame_interval_generator(p)) !=
                brute_force_family(FamilyKind::frame, p)) {
                why << "class C mismatch at n=" << n;
                return false;
            }
            if (generator_materialize(hurdle_generator(p)) !=
                brute_force_family(FamilyKind::hurdle, p)) {
                why << "class D mismatch at n=" << n;
                return false;
            }
            std::int64_t count = enumerate_common_intervals(p, [](Interval) {});
            if (count != (std::int64_t)brute_force_family(FamilyKind::common, p).size()) {
                why << "enumeration count mismatch at n=" << n;
                return false;
            }
            if (build_decomposition_tree(p) != brute_force_decomposition(p)) {
                why << "decomposition tree mismatch at n=" << n;
                return false;
            }
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return true;
}

// --- criterion 2 -----------------------------------------------------------

bool reference_witness(Failure& why) {
    Permutation p = reference_perm_8();
    if (is_simple(p)) {
        why << "the 8-element reference permutation was reported simple";
        return false;
    }
    if (!generator_is_member(common_interval_generator(p), 4, 7)) {
        why << "(4,7) missing from the class-A family";
        return false;
    }
    return true;
}

// --- criterion 3 -----------------------------------------------------------

bool handbuilt_generator_semantics(Failure& why) {
    Generator g =
        make_generator(9, {9, 4, 4, 7, 7, 7, 9, 9, 9}, {1, 1, 1, 3, 4, 1, 6, 7, 1});
    if (!generator_is_member(g, 1, 6)) {
        why << "(1,6) should be a member";
        return false;
    }
    if (generator_is_member(g, 2, 5)) {
        why << "(2,5) should not be a member";
        return false;
    }
    return true;
}

// --- criterion 4 -----------------------------------------------------------

bool golden_decomposition(Failure& why) {
    Permutation p = reference_perm_18();
    DecompositionTree oracle = brute_force_decomposition(p);
    DecompositionTree fast = build_decomposition_tree(p);
    if (fast != oracle) {
        why << "fast tree differs from the oracle tree";
        return false;
    }
    std::ifstream in(golden_path(), std::ios::binary);
    if (!in) {
        why << "golden file missing: " << golden_path();
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != tree_to_json(oracle)) {
        why << "oracle serialization differs from the committed golden bytes";
        return false;
    }
    return true;
}

// --- criteria 5 and 8 ------------------------------------------------------

bool randomized_trees_and_dags(Failure& why) {
    for (int i = 0; i < 1000; ++i) {
        Seed seed = 24'000 + (Seed)i;
        int n = 1 + (int)(SplitMix64(seed).next_below(64));
        LabeledTree t = random_tree(n, seed);
        SweepStats stats;
        if (generator_materialize(connected_interval_generator(t, &stats)) !=
            brute_force_family(FamilyKind::tree_connected, t)) {
            why << "class E mismatch at seed " << seed;
            return false;
        }
        if (generator_materialize(in_path_generator(t, &stats)) !=
            brute_force_family(FamilyKind::tree_in_path, t)) {
            why << "class F mismatch at seed " << seed;
            return false;
        }
        if (generator_materialize(path_interval_generator(t, &stats)) !=
            brute_force_family(FamilyKind::tree_path, t)) {
            why << "class G mismatch at seed " << seed;
            return false;
        }
        if (stats.pushes != 8 * n || stats.removals > stats.pushes) {
            why << "sweep work accounting broken at seed " << seed;
            return false;
        }
    }
    const double densities[3] = {0.15, 0.4, 0.8};
    for (int i = 0; i < 1000; ++i) {
        Seed seed = 86'000 + (Seed)i;
        int n = 1 + (int)(SplitMix64(seed).next_below(32));
        Dag d = random_dag(n, densities[i % 3], seed);
        SweepStats stats;
        if (generator_materialize(closed_interval_generator(d, &stats)) !=
            brute_force_family(FamilyKind::dag_closed, d)) {
            why << "class H mismatch at seed " << seed << " density " << densities[i % 3];
            return false;
        }
        if (stats.pushes != 2 * n || stats.removals > stats.pushes) {
            why << "sweep work accounting broken at seed " << seed;
            return false;
        }
    }
    return true;
}

// --- criterion 6 -----------------------------------------------------------

bool counting_identities(Failure& why) {
    for (int n : {1, 2, 10, 1000}) {
        std::int64_t expected = (std::int64_t)n * (n + 1) / 2;
        if (enumerate_common_intervals(identity(n), [](Interval) {}) != expected) {
            why << "identity count wrong at n=" << n;
            return false;
        }
        if (enumerate_common_intervals(reversal(n), [](Interval) {}) != expected) {
            why << "reversal count wrong at n=" << n;
            return false;
        }
        if (enumerate_connected_intervals(star(n), [](Interval) {}) != 2 * n - 1) {
            why << "star count wrong at n=" << n;
            return false;
        }
        if (enumerate_closed_intervals(Dag{n, {}}, [](Interval) {}) != expected) {
            why << "arc-free dag count wrong at n=" << n;
            return false;
        }
    }
    return true;
}

// --- criterion 7 -----------------------------------------------------------

std::string timing_note;

bool linear_time_behaviour(Failure& why) {
#ifdef __GLIBC__
    // Keep large blocks inside the arena across repetitions; otherwise every
    // run of the biggest size re-pays zero-fill page faults for a fresh mmap
    // and the measurement reflects the allocator, not the algorithm.
    mallopt(M_MMAP_THRESHOLD, 512 * 1024 * 1024);
#endif
    const std::vector<int> sizes = {200'000, 400'000, 800'000};
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        perms.push_back(random_permutation(sizes[i], 42 + (Seed)i));
    // Warm the allocator arena at the largest size, then measure the sizes
    // round-robin and keep the best of seven runs each. Teardown of the
    // built objects stays outside the timed window.
    common_interval_generator(perms.back());
    build_decomposition_tree(perms.back());
    std::vector<double> gen_times(sizes.size(), 1e18), tree_times(sizes.size(), 1e18);
    for (int rep = 0; rep < 7; ++rep)
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            {
                auto t0 = std::chrono::steady_clock::now();
                Generator g = common_interval_generator(perms[i]);
                auto t1 = std::chrono::steady_clock::now();
                gen_times[i] =
                    std::min(gen_times[i], std::chrono::duration<double>(t1 - t0).count());
            }
            {
                auto t0 = std::chrono::steady_clock::now();
                DecompositionTree t = build_decomposition_tree(perms[i]);
                auto t1 = std::chrono::steady_clock::now();
                tree_times[i] =
                    std::min(tree_times[i], std::chrono::duration<double>(t1 - t0).count());
            }
        }
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        double g = gen_times[i] / gen_times[i - 1];
        double t = tree_times[i] / tree_times[i - 1];
        if (g > 3.0) {
            why << "generator doubling ratio " << g << " at n=" << sizes[i];
            return false;
        }
        if (t > 3.0) {
            why << "decomposition doubling ratio " << t << " at n=" << sizes[i];
            return false;
        }
    }
    Permutation big = random_permutation(1'000'000, 7);
    double t_big = best_of(1, [&] {
        common_interval_generator(big);
        build_decomposition_tree(big);
    });
    if (t_big >= 5.0) {
        why << "n=1e6 construction took " << t_big << "s";
        return false;
    }
    std::int64_t k = 0;
    double t_enum = best_of(3, [&] {
        k = enumerate_common_intervals(identity(2000), [](Interval) {});
    });
    if (k != 2'001'000) {
        why << "identity n=2000 enumerated " << k << " intervals";
        return false;
    }
    if (t_enum >= 1.0) {
        why << "identity n=2000 enumeration took " << t_enum << "s";
        return false;
    }
    std::ostringstream note;
    note << " [n=1e6 build " << t_big << "s, enumerate K=2001000 in " << t_enum
         << "s, gen ratios " << gen_times[1] / gen_times[0] << " "
         << gen_times[2] / gen_times[1] << ", tree ratios " << tree_times[1] / tree_times[0]
         << " " << tree_times[2] / tree_times[1] << "]";
    timing_note = note.str();
    return true;
}

// --- criterion 8 -----------------------------------------------------------

bool work_accounting(Failure& why) {
    for (Seed s = 0; s < 300; ++s) {
        int n = 1 + (int)(SplitMix64(777 + s).next_below(300));
        Permutation p = random_permutation(n, 777 + s);
        SweepStats stats;
        common_interval_generator(p, &stats);
        fixed_interval_generator(p, &stats);
        frame_interval_generator(p, &stats);
        if (stats.pushes != 6 * n || stats.removals > stats.pushes) {
            why << "permutation sweep accounting broken at seed " << 777 + s;
            return false;
        }
        SweepStats en;
        enumerate_common_intervals(p, [](Interval) {}, &en);
        if (en.pushes != n || en.removals > n) {
            why << "enumeration accounting broken at seed " << 777 + s;
            return false;
        }
        BuildStats build;
        build_decomposition_tree(p, &build);
        if (build.extensions + build.prime_creations > n - (n > 1 ? 1 : 0)) {
            why << "more than n-1 construction updates at seed " << 777 + s;
            return false;
        }
    }
    return true;
}

// --- criterion 9 -----------------------------------------------------------

bool guarded_sweep_regression(Failure& why) {
    Dag d = make_dag(3, {{2, 1}});
    std::vector<Interval> expected = {{1, 1}, {2, 2}, {1, 2}, {3, 3}, {1, 3}};
    if (generator_materialize(closed_interval_generator(d)) != expected) {
        why << "dag {2->1} family is not {singletons,(1,2),(1,3)}";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* name;
    bool (*run)(Failure&);
};

const Criterion criteria[] = {
    {1, "exhaustive oracle equivalence, permutations n <= 8", exhaustive_permutations},
    {2, "reference 8-permutation: non-simple, (4,7) in class A", reference_witness},
    {3, "hand-built generator table membership", handbuilt_generator_semantics},
    {4, "18-permutation decomposition equals oracle and golden file", golden_decomposition},
    {5, "randomized oracle equivalence, trees and dags", randomized_trees_and_dags},
    {6, "counting identities at n in {1,2,10,1000}", counting_identities},
    {7, "linear-time behaviour of the permutation pipelines", linear_time_behaviour},
    {8, "work-accounting invariants", work_accounting},
    {9, "guarded-sweep regression on dag {2->1}", guarded_sweep_regression},
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1 && std::strcmp(argv[1], "--write-golden") == 0) {
        std::ofstream out(golden_path(), std::ios::binary);
        out << tree_to_json(brute_force_decomposition(reference_perm_18()));
        std::cout << "wrote " << golden_path() << "\n";
        return 0;
    }
    // The timing criterion runs first, on a quiet heap; results print in
    // criterion order regardless of execution order.
    const std::size_t total = sizeof criteria / sizeof criteria[0];
    std::vector<std::size_t> order{6};
    for (std::size_t i = 0; i < total; ++i)
        if (i != 6) order.push_back(i);
    std::vector<std::string> lines(total);
    int failures = 0;
    for (std::size_t i : order) {
        const Criterion& c = criteria[i];
        Failure why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why << "exception: " << e.what();
        }
        std::ostringstream line;
        if (ok) {
            line << "PASS criterion " << c.id << ": " << c.name;
            if (c.id == 7) line << timing_note;
        } else {
            ++failures;
            line << "FAIL criterion " << c.id << ": " << c.name << ": " << why.msg.str();
        }
        lines[i] = line.str();
    }
    for (const std::string& line : lines) std::cout << line << "\n";
    if (failures == 0)
        std::cout << "all 9 criteria passed\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures;
}
