#pragma once

// Modified Morse functions on a chain lattice, their critical chains and the
// gradient matching they induce.

#include "ncmorse/chain_lattice.hpp"
#include "ncmorse/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ncmorse {

struct MorseFunction {
  std::map<std::string, Rational> values;  // chain id -> value
};

/// `paper` reads the critical-chain inequalities as >= / <=, `forman` as > / <.
enum class Convention { paper, forman };

const char* to_string(Convention convention);
Convention parse_convention(const std::string& text);

struct CriticalReport {
  Convention convention = Convention::paper;
  std::vector<std::vector<std::string>> critical;  // indexed by order, 0..max order of the lattice

  std::vector<std::size_t> counts() const;
  std::size_t total() const;
};

struct MorseViolation {
  std::string chain;
  bool cofacets = false;                // true: too many cofacets with f <= f(W); false: too many facets with f >= f(W)
  std::vector<std::string> neighbours;  // the offending chains
};

struct MorseValidity {
  std::vector<MorseViolation> violations;
  /// Chains that have both a low cofacet and a high facet. Allowed by the
  /// per-chain counting condition but they cannot be matched.
  std::vector<std::string> conflicts;

  bool valid() const { return violations.empty(); }
  bool matchable() const { return violations.empty() && conflicts.empty(); }
};

struct MorseMatching {
  std::vector<std::pair<std::string, std::string>> pairs;  // (lower, upper)
  std::vector<std::string> unmatched;
};

/// Throws invalid_input_error when `f` misses a chain or names an unknown one.
void require_total(const ChainLattice& lattice, const MorseFunction& f);

MorseValidity is_modified_morse(const ChainLattice& lattice, const MorseFunction& f);

CriticalReport critical_chains(const ChainLattice& lattice, const MorseFunction& f, Convention convention);

/// True iff the orders holding critical chains form {0, ..., K} (or nothing).
bool is_acceptable(std::span<const std::size_t> counts);
bool is_acceptable(const CriticalReport& report);
/// Throws precondition_error naming the first missing order.
void require_acceptable(const CriticalReport& report);

/// Pairs every chain with its exceptional neighbour. Throws precondition_error
/// when f is not a modified Morse function and invalid_morse_error when the
/// pairing would use a chain twice.
MorseMatching matching_from_function(const ChainLattice& lattice, const MorseFunction& f);

/// Acyclicity of the Hasse digraph with matched edges pointing up and all
/// other covers pointing down. Throws invalid_input_error when a pair is not a
/// Hasse cover or a chain is matched twice.
bool is_acyclic_matching(const ChainLattice& lattice, const MorseMatching& matching);

/// Greedy acyclic matching in a seed-determined edge order, using only covers
/// with incidence +1/-1, then values from a linear extension in which matched
/// pairs descend and every other cover ascends.
MorseFunction generate_morse(const ChainLattice& lattice, std::uint64_t seed);

/// f(W) = order(W).
MorseFunction order_function(const ChainLattice& lattice);

}  // namespace ncmorse
