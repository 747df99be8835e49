#pragma once

#include <iosfwd>
#include <string>

#include "ifam/core.hpp"
#include "ifam/decomposition.hpp"

namespace ifam {

/// Input rejected; what() carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Line-oriented plain-text inputs; '#' starts a comment, blank lines are
// skipped, whitespace between tokens is free-form.

/// One line of n integers = a permutation of 1..n; exactly two such lines =
/// a pair reduced via reduce_two_permutations.
Permutation load_permutation(std::istream& in);

/// First line "n", then n-1 lines "u v" (undirected edges).
LabeledTree load_tree(std::istream& in);

/// First line "n m", then m lines "u v" (arcs u -> v).
Dag load_dag(std::istream& in);

Structure load_structure(FamilyKind kind, std::istream& in);

std::string generator_to_text(const Generator& g);
std::string generator_to_json(const Generator& g);
Generator generator_from_json(std::istream& in);

std::string tree_to_json(const DecompositionTree& t);
std::string tree_to_text(const DecompositionTree& t);
std::string tree_to_dot(const DecompositionTree& t);

}  // namespace ifam
