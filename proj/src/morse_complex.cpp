#include "ncmorse/homology.hpp"

#include "ncmorse/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace ncmorse {

namespace {

constexpr long none = -1;

// Signed sums of gradient paths from a chain down to critical chains of the
// same order. A key is present iff some path reaches it.
using Flow = std::map<std::size_t, Integer>;

class GradientFlow {
 public:
  GradientFlow(const ChainLattice& lattice, const std::vector<long>& up, const std::vector<long>& down)
      : lattice_(lattice), up_(up), down_(down), memo_(lattice.size()) {}

  const Flow& from(std::size_t a) {
    if (memo_[a]) return *memo_[a];
    Flow flow;
    if (up_[a] == none && down_[a] == none) {
      flow.emplace(a, Integer(1));
    } else if (up_[a] != none) {
      // a -> b = V(a), weight -1/[b:a] = -[b:a] for a unit incidence,
      // then down to every other facet of b.
      const std::size_t b = static_cast<std::size_t>(up_[a]);
      const Integer step = -lattice_.hasse()[*lattice_.edge_between(a, b)].incidence;
      for (std::size_t e : lattice_.facet_edges(b)) {
        const auto& h = lattice_.hasse()[e];
        if (h.lower == a) continue;
        for (const auto& [target, coeff] : from(h.lower)) flow[target] += step * h.incidence * coeff;
      }
    }
    memo_[a] = std::move(flow);
    return *memo_[a];
  }

 private:
  const ChainLattice& lattice_;
  const std::vector<long>& up_;
  const std::vector<long>& down_;
  std::vector<std::optional<Flow>> memo_;
};

}  // namespace

CellComplex morse_complex(const CellComplex& complex, const ChainLattice& lattice, const MorseMatching& matching) {
  require_valid(complex);
  if (lattice.size() != complex.size()) throw_invalid_input("chain lattice does not belong to this complex");
  for (const auto& ch : lattice.chains())
    if (!complex.index_of(ch.generator)) throw_invalid_input("chain lattice does not belong to this complex");
  if (!is_acyclic_matching(lattice, matching)) throw precondition_error("matching is not acyclic");

  std::vector<long> up(lattice.size(), none), down(lattice.size(), none);
  for (const auto& [lo, hi] : matching.pairs) {
    const std::size_t a = lattice.require_index(lo);
    const std::size_t b = lattice.require_index(hi);
    const Integer& inc = lattice.hasse()[*lattice.edge_between(a, b)].incidence;
    if (inc != 1 && inc != -1)
      throw unsupported_error("matched pair (\"" + lo + "\", \"" + hi + "\") has incidence " + inc.str() +
                              "; collapsing needs +1 or -1");
    up[a] = static_cast<long>(b);
    down[b] = static_cast<long>(a);
  }

  GradientFlow flow(lattice, up, down);
  std::vector<Cell> cells;
  for (std::size_t s = 0; s < lattice.size(); ++s) {
    if (up[s] != none || down[s] != none) continue;
    Flow boundary;
    for (std::size_t e : lattice.facet_edges(s)) {
      const auto& h = lattice.hasse()[e];
      for (const auto& [target, coeff] : flow.from(h.lower)) boundary[target] += h.incidence * coeff;
    }
    Cell cell{lattice.chain(s).generator, lattice.chain(s).order, {}};
    for (const auto& [target, coeff] : boundary) cell.boundary.push_back({lattice.chain(target).generator, coeff});
    cells.push_back(std::move(cell));
  }
  return CellComplex(std::move(cells));
}

bool CollapseReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CollapseCheck& c) { return c.passed; });
}

namespace {

HomologyProfile padded(HomologyProfile p, std::size_t length) {
  if (p.betti.size() < length) {
    p.betti.resize(length, 0);
    p.torsion.resize(length);
  }
  return p;
}

}  // namespace

CollapseReport verify_collapse(const CellComplex& complex, const MorseFunction& f) {
  const ChainLattice lattice = chain_lattice(complex);
  const MorseMatching matching = matching_from_function(lattice, f);
  const CellComplex collapsed = morse_complex(complex, lattice, matching);

  CollapseReport report;
  report.pairs = matching.pairs;
  report.source = homology_profile(complex);
  const std::size_t length = report.source.betti.size();
  report.cell_counts = complex.cell_counts();

  report.morse_counts = collapsed.cell_counts();
  report.morse_counts.resize(std::max(length, report.morse_counts.size()), 0);
  for (std::size_t k = 0; k < report.morse_counts.size(); ++k)
    report.morse_alternating_sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(report.morse_counts[k]);

  const bool closed = validate_complex(collapsed).ok();
  report.checks.push_back({"morse_boundary_squared_zero", closed});
  if (closed) report.morse = padded(homology_profile(collapsed), length);

  const auto strict = critical_chains(lattice, f, Convention::forman).counts();
  std::vector<std::size_t> strict_padded = strict;
  strict_padded.resize(report.morse_counts.size(), 0);
  report.checks.push_back({"critical_counts_match", strict_padded == report.morse_counts});

  report.checks.push_back({"betti_equal", closed && report.morse.betti == report.source.betti});
  report.checks.push_back({"torsion_equal", closed && report.morse.torsion == report.source.torsion});

  bool inequalities = true;
  for (std::size_t k = 0; k < length; ++k)
    if (report.morse_counts[k] < report.source.betti[k]) inequalities = false;
  report.checks.push_back({"morse_inequalities", inequalities});
  report.checks.push_back({"euler_identity", report.morse_alternating_sum == report.source.euler});
  return report;
}

}  // namespace ncmorse
