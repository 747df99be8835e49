#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ifam/dag_families.hpp"
#include "ifam/io.hpp"
#include "ifam/oracle.hpp"
#include "ifam/perm_families.hpp"
#include "ifam/tree_families.hpp"

namespace {

using namespace ifam;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

Structure load_from_file(FamilyKind kind, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return load_structure(kind, in);
}

Permutation load_permutation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return load_permutation(in);
}

Generator generator_for(FamilyKind kind, const Structure& s) {
    switch (kind) {
        case FamilyKind::common: return common_interval_generator(std::get<Permutation>(s));
        case FamilyKind::fixed: return fixed_interval_generator(std::get<Permutation>(s));
        case FamilyKind::frame: return frame_interval_generator(std::get<Permutation>(s));
        case FamilyKind::hurdle: return hurdle_generator(std::get<Permutation>(s));
        case FamilyKind::tree_connected:
            return connected_interval_generator(std::get<LabeledTree>(s));
        case FamilyKind::tree_in_path: return in_path_generator(std::get<LabeledTree>(s));
        case FamilyKind::tree_path: return path_interval_generator(std::get<LabeledTree>(s));
        case FamilyKind::dag_closed: return closed_interval_generator(std::get<Dag>(s));
    }
    throw std::invalid_argument("unknown family kind");
}

// Output-sensitive per kind; the intersection classes D and G enumerate
// their base family and keep what the second generator admits.
std::int64_t enumerate_for(FamilyKind kind, const Structure& s, const IntervalSink& sink);

std::int64_t filtered_enumerate(FamilyKind base, const Structure& s, const Generator& other,
                                const IntervalSink& sink) {
    std::int64_t count = 0;
    enumerate_for(base, s, [&](Interval iv) {
        if (other.r[iv.begin] >= iv.end && other.l[iv.end] <= iv.begin) {
            sink(iv);
            ++count;
        }
    });
    return count;
}

std::int64_t enumerate_for(FamilyKind kind, const Structure& s, const IntervalSink& sink) {
    switch (kind) {
        case FamilyKind::common:
            return enumerate_common_intervals(std::get<Permutation>(s), sink);
        case FamilyKind::fixed:
            return enumerate_fixed_intervals(std::get<Permutation>(s), sink);
        case FamilyKind::frame:
            return enumerate_frame_intervals(std::get<Permutation>(s), sink);
        case FamilyKind::hurdle:
            return filtered_enumerate(FamilyKind::common, s,
                                      frame_interval_generator(std::get<Permutation>(s)), sink);
        case FamilyKind::tree_connected:
            return enumerate_connected_intervals(std::get<LabeledTree>(s), sink);
        case FamilyKind::tree_in_path:
            return enumerate_in_path_intervals(std::get<LabeledTree>(s), sink);
        case FamilyKind::tree_path:
            return filtered_enumerate(FamilyKind::tree_connected, s,
                                      in_path_generator(std::get<LabeledTree>(s)), sink);
        case FamilyKind::dag_closed:
            return enumerate_closed_intervals(std::get<Dag>(s), sink);
    }
    throw std::invalid_argument("unknown family kind");
}

int cmd_generator(const std::string& kind_s, const std::string& path, const std::string& format) {
    FamilyKind kind = parse_family_kind(kind_s);
    Structure s = load_from_file(kind, path);
    Generator g = generator_for(kind, s);
    if (format == "json")
        std::cout << generator_to_json(g);
    else if (format == "text")
        std::cout << generator_to_text(g);
    else
        throw std::invalid_argument("generator supports --format text|json");
    return kExitOk;
}

int cmd_enumerate(const std::string& kind_s, const std::string& path) {
    FamilyKind kind = parse_family_kind(kind_s);
    Structure s = load_from_file(kind, path);
    std::ostringstream out;
    std::int64_t count = enumerate_for(kind, s, [&](Interval iv) {
        out << iv.begin << ' ' << iv.end << '\n';
    });
    std::cout << out.str() << "count: " << count << "\n";
    return kExitOk;
}

int cmd_simple(const std::string& path) {
    Permutation p = load_permutation_file(path);
    if (auto witness = find_nontrivial_common_interval(p)) {
        std::cout << witness->begin << ' ' << witness->end << "\n";
        return kExitNegative;
    }
    std::cout << "SIMPLE\n";
    return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& format) {
    Permutation p = load_permutation_file(path);
    DecompositionTree t = build_decomposition_tree(p);
    if (format == "json")
        std::cout << tree_to_json(t);
    else if (format == "dot")
        std::cout << tree_to_dot(t);
    else if (format == "text")
        std::cout << tree_to_text(t);
    else
        throw std::invalid_argument("decompose supports --format text|json|dot");
    return kExitOk;
}

int report_mismatch(const std::vector<Interval>& fast, const std::vector<Interval>& reference) {
    std::size_t i = 0;
    while (i < fast.size() && i < reference.size() && fast[i] == reference[i]) ++i;
    std::cout << "MISMATCH at entry " << i << ": computed ";
    if (i < fast.size())
        std::cout << "(" << fast[i].begin << "," << fast[i].end << ")";
    else
        std::cout << "nothing";
    std::cout << ", reference ";
    if (i < reference.size())
        std::cout << "(" << reference[i].begin << "," << reference[i].end << ")";
    else
        std::cout << "nothing";
    std::cout << "\n";
    return kExitNegative;
}

int cmd_verify(const std::string& kind_s, const std::string& path, int random_n,
               std::uint64_t seed, double density, const std::string& generator_path) {
    FamilyKind kind = parse_family_kind(kind_s);
    Structure s = random_n > 0 ? random_instance(kind, random_n, seed, density)
                               : load_from_file(kind, path);
    std::vector<Interval> reference = brute_force_family(kind, s);
    std::vector<Interval> fast;
    if (!generator_path.empty()) {
        std::ifstream in(generator_path);
        if (!in) throw std::invalid_argument("cannot open generator file: " + generator_path);
        Generator g = generator_from_json(in);
        if (g.n != structure_size(s))
            throw std::invalid_argument("generator size does not match the instance");
        fast = generator_materialize(g);
    } else {
        fast = generator_materialize(generator_for(kind, s));
    }
    if (fast == reference) {
        std::cout << "OK " << reference.size() << " intervals\n";
        return kExitOk;
    }
    return report_mismatch(fast, reference);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval families over permutations, trees and dags"};
    app.require_subcommand(1);

    std::string kind = "A", input, format = "text", generator_path;
    int random_n = 0;
    std::uint64_t seed = 1;
    double density = 0.3;

    auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind, "family kind A..H")->required();
    };

    CLI::App* gen = app.add_subcommand("generator", "compute the generator of a family");
    add_kind(gen);
    gen->add_option("input", input, "input file")->required();
    gen->add_option("--format", format, "text|json");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list every member interval");
    add_kind(enumerate);
    enumerate->add_option("input", input, "input file")->required();

    CLI::App* simple = app.add_subcommand("simple", "test simplicity of a permutation");
    simple->add_option("input", input, "permutation file")->required();

    CLI::App* decompose = app.add_subcommand("decompose", "decomposition tree of a permutation");
    decompose->add_option("input", input, "permutation file (one or two lines)")->required();
    decompose->add_option("--format", format, "text|json|dot");

    CLI::App* verify = app.add_subcommand("verify", "compare the fast path with brute force");
    add_kind(verify);
    verify->add_option("input", input, "input file");
    verify->add_option("--random", random_n, "verify a seeded random instance of this size");
    verify->add_option("--seed", seed, "seed for --random");
    verify->add_option("--density", density, "arc density for random dags");
    verify->add_option("--generator", generator_path, "check a generator json instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;  // keep --help at 0
    }

    try {
        if (gen->parsed()) return cmd_generator(kind, input, format);
        if (enumerate->parsed()) return cmd_enumerate(kind, input);
        if (simple->parsed()) return cmd_simple(input);
        if (decompose->parsed()) return cmd_decompose(input, format);
        if (verify->parsed()) {
            if (input.empty() && random_n <= 0)
                throw std::invalid_argument("verify needs an input file or --random");
            return cmd_verify(kind, input, random_n, seed, density, generator_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
