#include "ncmorse/chain_lattice.hpp"

#include "ncmorse/errors.hpp"

#include <algorithm>
#include <map>

namespace ncmorse {

std::string chain_id(const std::string& cell_id) { return "W_" + cell_id; }
std::string ideal_id(const std::string& cell_id) { return "I_" + cell_id; }

ChainLattice::ChainLattice(std::vector<Chain> chains, std::vector<HasseEdge> hasse)
    : chains_(std::move(chains)), hasse_(std::move(hasse)), facets_(chains_.size()), cofacets_(chains_.size()) {
  for (std::size_t i = 0; i < chains_.size(); ++i) index_.emplace(chains_[i].id, i);
  for (std::size_t e = 0; e < hasse_.size(); ++e) {
    facets_[hasse_[e].upper].push_back(e);
    cofacets_[hasse_[e].lower].push_back(e);
  }
}

std::optional<std::size_t> ChainLattice::index_of(const std::string& chain) const {
  const auto it = index_.find(chain);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ChainLattice::require_index(const std::string& chain) const {
  const auto idx = index_of(chain);
  if (!idx) throw_invalid_input("unknown chain \"" + chain + "\"");
  return *idx;
}

std::optional<std::size_t> ChainLattice::edge_between(std::size_t lower, std::size_t upper) const {
  for (std::size_t e : facets_[upper])
    if (hasse_[e].lower == lower) return e;
  return std::nullopt;
}

int ChainLattice::max_order() const {
  int n = -1;
  for (const auto& c : chains_) n = std::max(n, c.order);
  return n;
}

std::vector<std::size_t> ChainLattice::order_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_order() + 1), 0);
  for (const auto& c : chains_) ++counts[static_cast<std::size_t>(c.order)];
  return counts;
}

ChainLattice chain_lattice(const CellComplex& complex) {
  require_valid(complex);
  const std::size_t n = complex.size();

  // Supports by increasing dimension so faces are finished first.
  std::vector<std::size_t> by_dim(n);
  for (std::size_t i = 0; i < n; ++i) by_dim[i] = i;
  std::stable_sort(by_dim.begin(), by_dim.end(),
                   [&](std::size_t a, std::size_t b) { return complex.cell(a).dim < complex.cell(b).dim; });
  std::vector<IdSet> support(n);
  for (std::size_t i : by_dim) {
    const Cell& c = complex.cell(i);
    support[i].insert(c.id);
    for (const auto& inc : c.boundary) {
      const auto& sub = support[*complex.index_of(inc.face)];
      support[i].insert(sub.begin(), sub.end());
    }
  }

  std::vector<Chain> chains;
  chains.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Cell& c = complex.cell(i);
    chains.push_back(Chain{chain_id(c.id), c.dim, c.id, std::move(support[i]), ideal_id(c.id)});
  }

  std::vector<HasseEdge> hasse;
  for (std::size_t i = 0; i < n; ++i) {
    std::map<std::size_t, Integer> faces;  // sorted by face index
    for (const auto& inc : complex.cell(i).boundary) faces[*complex.index_of(inc.face)] += inc.degree;
    for (auto& [f, deg] : faces) hasse.push_back(HasseEdge{f, i, deg});
  }
  return ChainLattice(std::move(chains), std::move(hasse));
}

IdSet ideal_meet(const ChainLattice& lattice, const IdSet& chain_ids) {
  if (chain_ids.empty()) throw_invalid_input("ideal_meet needs at least one chain");
  IdSet out;
  for (const auto& id : chain_ids) {
    const auto& s = lattice.chain(lattice.require_index(id)).support;
    out.insert(s.begin(), s.end());
  }
  return out;
}

FinitePoset chain_poset(const ChainLattice& lattice) {
  std::vector<std::string> ids;
  for (const auto& c : lattice.chains()) ids.push_back(c.id);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& e : lattice.hasse()) covers.emplace_back(lattice.chain(e.lower).id, lattice.chain(e.upper).id);
  return FinitePoset::from_covers(std::move(ids), covers);
}

FinitePoset ideal_poset(const ChainLattice& lattice) {
  std::vector<std::string> ids;
  for (const auto& c : lattice.chains()) ids.push_back(c.ideal);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& e : lattice.hasse()) covers.emplace_back(lattice.chain(e.upper).ideal, lattice.chain(e.lower).ideal);
  return FinitePoset::from_covers(std::move(ids), covers);
}

}  // namespace ncmorse
