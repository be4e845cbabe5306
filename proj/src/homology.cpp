#include "ncmorse/homology.hpp"

#include "ncmorse/errors.hpp"

#include <unordered_map>

namespace ncmorse {

BoundaryOperators boundary_operators(const CellComplex& complex) {
  require_valid(complex);
  const int n = complex.dimension();
  BoundaryOperators out;
  out.basis.resize(static_cast<std::size_t>(n + 1));
  std::unordered_map<std::string, std::size_t> position;
  for (int k = 0; k <= n; ++k)
    for (std::size_t i : complex.cells_of_dim(k)) {
      position[complex.cell(i).id] = out.basis[static_cast<std::size_t>(k)].size();
      out.basis[static_cast<std::size_t>(k)].push_back(complex.cell(i).id);
    }
  for (int k = 0; k <= n; ++k) {
    const std::size_t rows = k == 0 ? 0 : out.basis[static_cast<std::size_t>(k - 1)].size();
    const auto& cols = out.basis[static_cast<std::size_t>(k)];
    IntegerMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& inc : complex.cell(*complex.index_of(cols[j])).boundary) m(position.at(inc.face), j) += inc.degree;
    out.matrices.push_back(std::move(m));
  }
  return out;
}

std::vector<IntegerMatrix> boundary_matrices(const CellComplex& complex) {
  return boundary_operators(complex).matrices;
}

HomologyProfile homology_profile(const CellComplex& complex) {
  const auto ops = boundary_operators(complex);
  const std::size_t top = ops.basis.size();
  std::vector<SmithForm> snf;
  snf.reserve(top);
  for (const auto& m : ops.matrices) snf.push_back(smith_normal_form(m));

  HomologyProfile p;
  p.betti.resize(top);
  p.torsion.resize(top);
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t cells = ops.basis[k].size();
    const std::size_t rank_out = snf[k].rank;
    const std::size_t rank_in = k + 1 < top ? snf[k + 1].rank : 0;
    p.betti[k] = cells - rank_out - rank_in;
    if (k + 1 < top)
      for (const auto& d : snf[k + 1].factors)
        if (d > 1) p.torsion[k].push_back(d);
    p.euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cells);
  }
  return p;
}

}  // namespace ncmorse
