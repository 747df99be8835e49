#include "ifam/io.hpp"

#include <istream>
#include <sstream>

#include "ifam/perm_families.hpp"
#include "json.hpp"

namespace ifam {

namespace {

struct Line {
    int number = 0;
    std::vector<long long> values;
};

// All non-comment, non-blank lines as integer token rows.
std::vector<Line> read_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string text = raw.substr(0, raw.find('#'));
        std::istringstream tokens(text);
        Line line{number, {}};
        std::string tok;
        while (tokens >> tok) {
            try {
                std::size_t used = 0;
                line.values.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(number, "expected an integer, got '" + tok + "'");
            }
        }
        if (!line.values.empty()) out.push_back(std::move(line));
    }
    return out;
}

std::vector<int> narrowed(const Line& line) {
    std::vector<int> out;
    out.reserve(line.values.size());
    for (long long v : line.values) {
        if (v < -1000000000LL || v > 1000000000LL)
            throw ParseError(line.number, "integer out of supported range");
        out.push_back((int)v);
    }
    return out;
}

Permutation permutation_of_line(const Line& line) {
    try {
        return make_permutation(narrowed(line));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

std::pair<int, int> pair_of_line(const Line& line, const char* what) {
    if (line.values.size() != 2)
        throw ParseError(line.number, std::string("expected \"u v\" for ") + what);
    auto v = narrowed(line);
    return {v[0], v[1]};
}

// All three tree emitters walk with explicit stacks; deeply nested trees
// are valid inputs and must not exhaust the call stack.

void append_tree_text(const DecompositionNode& root, std::string& out) {
    std::vector<std::pair<const DecompositionNode*, int>> stack{{&root, 0}};
    while (!stack.empty()) {
        auto [node, depth] = stack.back();
        stack.pop_back();
        out.append(2 * (std::size_t)depth, ' ');
        out += node_label_name(node->label);
        out += " pos=[" + std::to_string(node->pos.begin) + "," +
               std::to_string(node->pos.end) + "]";
        out += " val=[" + std::to_string(node->val_min) + "," +
               std::to_string(node->val_max) + "]\n";
        for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
            stack.emplace_back(&*it, depth + 1);
    }
}

// Two-space-indented json, laid out exactly as nlohmann's dump(2) would
// print the nested {label, pos, val, children} records.
void append_tree_json(const DecompositionNode& root, std::string& out) {
    auto pad = [&out](int k) { out.append((std::size_t)k, ' '); };
    auto open_scalars = [&](const DecompositionNode& nd, int L) {
        out += "{\n";
        pad(L + 2);
        out += "\"label\": \"";
        out += node_label_name(nd.label);
        out += "\",\n";
        pad(L + 2);
        out += "\"pos\": [\n";
        pad(L + 4);
        out += std::to_string(nd.pos.begin) + ",\n";
        pad(L + 4);
        out += std::to_string(nd.pos.end) + "\n";
        pad(L + 2);
        out += "],\n";
        pad(L + 2);
        out += "\"val\": [\n";
        pad(L + 4);
        out += std::to_string(nd.val_min) + ",\n";
        pad(L + 4);
        out += std::to_string(nd.val_max) + "\n";
        pad(L + 2);
        out += "],\n";
    };
    struct Frame {
        const DecompositionNode* node;
        std::size_t next;
        int indent;
    };
    std::vector<Frame> stack;
    const DecompositionNode* cur = &root;
    int level = 0;
    for (;;) {
        open_scalars(*cur, level);
        if (!cur->children.empty()) {
            pad(level + 2);
            out += "\"children\": [\n";
            pad(level + 4);
            stack.push_back({cur, 1, level});
            cur = &cur->children.front();
            level += 4;
            continue;
        }
        pad(level + 2);
        out += "\"children\": []\n";
        pad(level);
        out += "}";
        bool descended = false;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < f.node->children.size()) {
                out += ",\n";
                pad(f.indent + 4);
                cur = &f.node->children[f.next++];
                level = f.indent + 4;
                descended = true;
                break;
            }
            out += "\n";
            pad(f.indent + 2);
            out += "]\n";
            pad(f.indent);
            out += "}";
            stack.pop_back();
        }
        if (!descended) break;
    }
}

void append_tree_dot(const DecompositionNode& root, std::string& out) {
    struct Frame {
        const DecompositionNode* node;
        int parent;
    };
    std::vector<Frame> stack{{&root, -1}};
    int next_id = 0;
    while (!stack.empty()) {
        auto [node, parent] = stack.back();
        stack.pop_back();
        const int id = next_id++;
        out += "  n" + std::to_string(id) + " [label=\"" + node_label_name(node->label) +
               " [" + std::to_string(node->pos.begin) + "," + std::to_string(node->pos.end) +
               "]\"];\n";
        if (parent >= 0)
            out += "  n" + std::to_string(parent) + " -> n" + std::to_string(id) + ";\n";
        for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
            stack.push_back({&*it, id});
    }
}

}  // namespace

Permutation load_permutation(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected a permutation");
    if (lines.size() == 1) return permutation_of_line(lines[0]);
    if (lines.size() == 2) {
        Permutation p1 = permutation_of_line(lines[0]);
        Permutation p2 = permutation_of_line(lines[1]);
        if (p1.n != p2.n)
            throw ParseError(lines[1].number, "the two permutations differ in size");
        return reduce_two_permutations(p1, p2);
    }
    throw ParseError(lines[2].number, "expected one permutation line or two for a pair");
}

LabeledTree load_tree(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected a tree");
    if (lines[0].values.size() != 1)
        throw ParseError(lines[0].number, "expected the vertex count \"n\" alone");
    const int n = narrowed(lines[0])[0];
    if (n < 1) throw ParseError(lines[0].number, "vertex count must be positive");
    if ((int)lines.size() != n)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(n - 1) + " edge lines after n");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back(pair_of_line(lines[i], "an edge"));
    try {
        return make_labeled_tree(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].number, e.what());
    }
}

Dag load_dag(std::istream& in) {
    auto lines = read_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected a dag");
    if (lines[0].values.size() != 2)
        throw ParseError(lines[0].number, "expected \"n m\" on the first line");
    auto [n, m] = pair_of_line(lines[0], "the header");
    if (n < 1) throw ParseError(lines[0].number, "vertex count must be positive");
    if (m < 0 || (int)lines.size() != m + 1)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(m) + " arc lines after the header");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= m; ++i) arcs.push_back(pair_of_line(lines[i], "an arc"));
    try {
        return make_dag(n, std::move(arcs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].number, e.what());
    }
}

Structure load_structure(FamilyKind kind, std::istream& in) {
    if (kind_takes_permutation(kind)) return load_permutation(in);
    if (kind_takes_tree(kind)) return load_tree(in);
    return load_dag(in);
}

std::string generator_to_text(const Generator& g) {
    std::string out = "R:";
    for (int x = 1; x <= g.n; ++x) out += " " + std::to_string(g.r[x]);
    out += "\nL:";
    for (int y = 1; y <= g.n; ++y) out += " " + std::to_string(g.l[y]);
    out += "\n";
    return out;
}

std::string generator_to_json(const Generator& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["R"] = std::vector<int>(g.r.begin() + 1, g.r.end());
    j["L"] = std::vector<int>(g.l.begin() + 1, g.l.end());
    return j.dump(2) + "\n";
}

Generator generator_from_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
        int n = j.at("n").get<int>();
        auto r = j.at("R").get<std::vector<int>>();
        auto l = j.at("L").get<std::vector<int>>();
        if (n < 1 || (int)r.size() != n || (int)l.size() != n)
            throw ParseError(1, "generator arrays do not match n");
        r.insert(r.begin(), 0);
        l.insert(l.begin(), 0);
        return Generator{n, std::move(r), std::move(l)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("bad generator json: ") + e.what());
    }
}

std::string tree_to_json(const DecompositionTree& t) {
    std::string out;
    append_tree_json(t.root, out);
    out += "\n";
    return out;
}

std::string tree_to_text(const DecompositionTree& t) {
    std::string out;
    append_tree_text(t.root, out);
    return out;
}

std::string tree_to_dot(const DecompositionTree& t) {
    std::string out = "digraph decomposition {\n  node [shape=box];\n";
    append_tree_dot(t.root, out);
    out += "}\n";
    return out;
}

}  // namespace ifam
