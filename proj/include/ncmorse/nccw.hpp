#pragma once

// Noncommutative CW decomposition descriptors. A descriptor records, for
// each level k, the fiber F_k as a dimension vector, the number λ_k of
// k-cells, and which (k-1)-level chains each k-cell attaches to. The
// algebras A_k and the maps π, f_k, δ, φ_k appear only as labels.

#include "ncmorse/cell_complex.hpp"
#include "ncmorse/integer_matrix.hpp"
#include "ncmorse/morse.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncmorse {

/// ⊕ M_{n_i}(C). Commutative iff every n_i is 1.
struct DimensionVector {
  std::vector<int> multiplicities;

  long long linear_dimension() const;
  bool commutative() const;
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

struct NCCWLevel {
  int k = 0;
  DimensionVector fiber;
  std::size_t lambda = 0;
  std::vector<std::string> chains;                                  // chain ids of the level's cells
  std::map<std::string, std::vector<std::string>> attaching;        // k-cell id -> (k-1)-level chain ids
  std::map<std::string, std::vector<Integer>> incidence;            // parallel to attaching; may be empty

  std::string algebra() const { return "A_" + std::to_string(k); }
};

struct NCCWDescriptor {
  std::vector<NCCWLevel> levels;
  std::vector<std::string> notes;
};

/// Role labels for the maps of the level-k pullback square.
std::map<std::string, std::string> level_roles(int k);

NCCWDescriptor commutative_nccw(const CellComplex& complex);

/// Collapses along the matching of f, then describes the Morse complex.
/// Throws precondition_error when f is invalid or not acceptable under
/// `convention`, or when the collapsed complex skips a dimension.
NCCWDescriptor nccw_from_morse(const CellComplex& complex, const MorseFunction& f, Convention convention);

struct DescriptorValidation {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

DescriptorValidation validate_descriptor(const NCCWDescriptor& descriptor);

/// Rebuilds a cell complex from the levels: level-k chains become k-cells,
/// attaching lists become boundaries (incidence 1 where none is recorded).
CellComplex complex_from_descriptor(const NCCWDescriptor& descriptor);

struct PullbackResult {
  std::size_t dimension = 0;
  std::vector<std::vector<Rational>> basis;  // vectors in A_1 ⊕ A_2 coordinates
};

/// {a1 ⊕ a2 : α1 a1 = α2 a2} as the kernel of [α1 | -α2]. Throws
/// invalid_input_error when the codomains differ.
PullbackResult pullback_dimension(const IntegerMatrix& alpha1, const IntegerMatrix& alpha2);

}  // namespace ncmorse
