#pragma once

// The chain lattice of a cell complex: one k-chain W_c per k-cell c, whose
// support is the face closure of c, and the mirror k-ideal I_c. Chains are
// ordered by support inclusion; ideals by the reverse (containment).

#include "ncmorse/cell_complex.hpp"
#include "ncmorse/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncmorse {

std::string chain_id(const std::string& cell_id);  // "W_" + cell
std::string ideal_id(const std::string& cell_id);  // "I_" + cell

struct Chain {
  std::string id;
  int order = 0;
  std::string generator;  // cell id
  IdSet support;          // face-closed set of cell ids
  std::string ideal;
};

/// Covering pair lower < upper of order difference one. `incidence` sums
/// every boundary entry of the upper generator naming the lower one.
struct HasseEdge {
  std::size_t lower;
  std::size_t upper;
  Integer incidence;
};

class ChainLattice {
 public:
  ChainLattice() = default;
  ChainLattice(std::vector<Chain> chains, std::vector<HasseEdge> hasse);

  const std::vector<Chain>& chains() const { return chains_; }
  const std::vector<HasseEdge>& hasse() const { return hasse_; }
  std::size_t size() const { return chains_.size(); }
  bool empty() const { return chains_.empty(); }
  const Chain& chain(std::size_t i) const { return chains_[i]; }

  std::optional<std::size_t> index_of(const std::string& chain) const;
  std::size_t require_index(const std::string& chain) const;

  /// Hasse edge indices where chain i is the upper (facets) / lower (cofacets) end.
  const std::vector<std::size_t>& facet_edges(std::size_t i) const { return facets_[i]; }
  const std::vector<std::size_t>& cofacet_edges(std::size_t i) const { return cofacets_[i]; }
  std::optional<std::size_t> edge_between(std::size_t lower, std::size_t upper) const;

  int max_order() const;
  /// Number of chains per order 0..max_order().
  std::vector<std::size_t> order_counts() const;

 private:
  std::vector<Chain> chains_;
  std::vector<HasseEdge> hasse_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofacets_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One chain per cell. Throws invalid_input_error for an invalid complex.
ChainLattice chain_lattice(const CellComplex& complex);

/// Hull of I_{c1} ∩ ... ∩ I_{ck}: the union of the chains' supports.
IdSet ideal_meet(const ChainLattice& lattice, const IdSet& chain_ids);

/// Σ as a poset over chain ids, ordered by inclusion.
FinitePoset chain_poset(const ChainLattice& lattice);

/// Γ as a poset over ideal ids, ordered by inclusion of ideals (I_c ⊆ I_d iff W_d ⊆ W_c).
FinitePoset ideal_poset(const ChainLattice& lattice);

}  // namespace ncmorse
