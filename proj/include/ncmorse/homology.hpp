#pragma once

// Cellular chain complex over the integers, homology through Smith normal
// form, and the Morse complex of an acyclic matching.

#include "ncmorse/cell_complex.hpp"
#include "ncmorse/chain_lattice.hpp"
#include "ncmorse/integer_matrix.hpp"
#include "ncmorse/morse.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncmorse {

struct BoundaryOperators {
  std::vector<std::vector<std::string>> basis;  // cell ids per dimension, input order
  std::vector<IntegerMatrix> matrices;          // matrices[k]: C_k -> C_{k-1}; matrices[0] is 0 x #0-cells
};

/// Throws invalid_input_error for an invalid complex.
BoundaryOperators boundary_operators(const CellComplex& complex);
std::vector<IntegerMatrix> boundary_matrices(const CellComplex& complex);

struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::vector<Integer>> torsion;  // invariant factors > 1 per degree
  long long euler = 0;

  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology_profile(const CellComplex& complex);

/// One cell per unmatched chain. A boundary entry is present for every
/// critical face reached by at least one gradient path; its coefficient is
/// the signed path sum (possibly 0).
///
/// Throws precondition_error for a cyclic matching and unsupported_error when
/// a matched pair has incidence other than +1/-1.
CellComplex morse_complex(const CellComplex& complex, const ChainLattice& lattice, const MorseMatching& matching);

struct CollapseCheck {
  std::string name;
  bool passed = false;
};

struct CollapseReport {
  HomologyProfile source;
  HomologyProfile morse;
  std::vector<std::size_t> morse_counts;  // m_k, cells of the Morse complex per dimension
  std::vector<std::size_t> cell_counts;   // λ_k of the source
  long long morse_alternating_sum = 0;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<CollapseCheck> checks;
  /// Always "homological evidence": equal homology is necessary for, never
  /// a proof of, homotopy equivalence.
  std::string evidence = "homological evidence";
  std::string note =
      "checks compare integer homology, Morse inequalities and Euler characteristic; homotopy equivalence itself is "
      "not decided";

  bool passed() const;
};

/// Builds the matching of `f`, collapses, and compares. Throws
/// precondition_error / invalid_morse_error when f is not usable.
CollapseReport verify_collapse(const CellComplex& complex, const MorseFunction& f);

}  // namespace ncmorse
