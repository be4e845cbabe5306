#include "ncmorse/nccw.hpp"

#include "ncmorse/chain_lattice.hpp"
#include "ncmorse/errors.hpp"
#include "ncmorse/homology.hpp"

#include <algorithm>
#include <set>

namespace ncmorse {

long long DimensionVector::linear_dimension() const {
  long long d = 0;
  for (int n : multiplicities) d += static_cast<long long>(n) * n;
  return d;
}

bool DimensionVector::commutative() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](int n) { return n == 1; });
}

std::map<std::string, std::string> level_roles(int k) {
  const std::string a = "A_" + std::to_string(k);
  if (k == 0) return {{"algebra", a + " = F_0 (finite dimensional)"}};
  const std::string lower = "A_" + std::to_string(k - 1);
  const std::string f = "F_" + std::to_string(k);
  const std::string n = std::to_string(k);
  const std::string s = "S^" + std::to_string(k - 1) + " " + f;
  return {
      {"algebra", a + " = PB(" + s + ", delta, phi_" + n + ")"},
      {"pi", a + " -> " + lower},
      {"f_" + n, a + " -> I^" + n + " " + f},
      {"delta", "I^" + n + " " + f + " -> " + s},
      {"phi_" + n, lower + " -> " + s},
  };
}

NCCWDescriptor commutative_nccw(const CellComplex& complex) {
  require_valid(complex);
  if (complex.empty()) throw unsupported_error("cannot decompose an empty complex");
  const auto counts = complex.cell_counts();
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] == 0)
      throw unsupported_error("dimension gap: no " + std::to_string(k) + "-cells below dimension " +
                              std::to_string(counts.size() - 1));

  NCCWDescriptor d;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    NCCWLevel level;
    level.k = static_cast<int>(k);
    level.lambda = counts[k];
    level.fiber.multiplicities.assign(counts[k], 1);
    for (std::size_t i : complex.cells_of_dim(static_cast<int>(k))) {
      const Cell& c = complex.cell(i);
      level.chains.push_back(chain_id(c.id));
      if (k == 0) continue;
      auto& targets = level.attaching[c.id];
      auto& degrees = level.incidence[c.id];
      for (const auto& inc : c.boundary) {
        const std::string target = chain_id(inc.face);
        const auto it = std::find(targets.begin(), targets.end(), target);
        if (it == targets.end()) {
          targets.push_back(target);
          degrees.push_back(inc.degree);
        } else {
          degrees[static_cast<std::size_t>(it - targets.begin())] += inc.degree;
        }
      }
    }
    d.levels.push_back(std::move(level));
  }
  d.notes.push_back("unitality assumed");
  return d;
}

NCCWDescriptor nccw_from_morse(const CellComplex& complex, const MorseFunction& f, Convention convention) {
  const ChainLattice lattice = chain_lattice(complex);
  const auto report = critical_chains(lattice, f, convention);
  require_acceptable(report);
  const MorseMatching matching = matching_from_function(lattice, f);
  const CellComplex collapsed = morse_complex(complex, lattice, matching);
  if (convention != Convention::forman) require_acceptable(critical_chains(lattice, f, Convention::forman));

  NCCWDescriptor d = commutative_nccw(collapsed);
  d.notes.push_back("levels built from the Morse complex; attaching data are its gradient-path incidences");
  if (report.counts() != critical_chains(lattice, f, Convention::forman).counts())
    d.notes.push_back("cell counts follow the forman convention, which differs from the requested paper counts");
  return d;
}

namespace {

std::string cell_of_chain(const std::string& chain) {
  return chain.rfind("W_", 0) == 0 ? chain.substr(2) : chain;
}

// Chain ids per level. Levels without a chain list take them from their own
// attaching keys and from the targets named one level up, in that order.
std::map<int, std::vector<std::string>> level_chains(const NCCWDescriptor& descriptor) {
  std::map<int, std::vector<std::string>> out;
  std::set<int> listed;
  for (const auto& level : descriptor.levels)
    if (!level.chains.empty()) {
      out[level.k] = level.chains;
      listed.insert(level.k);
    }
  auto add = [&](int k, const std::string& chain) {
    if (listed.contains(k)) return;
    auto& ids = out[k];
    if (std::find(ids.begin(), ids.end(), chain) == ids.end()) ids.push_back(chain);
  };
  for (const auto& level : descriptor.levels)
    for (const auto& [cell, targets] : level.attaching) add(level.k, chain_id(cell));
  for (const auto& level : descriptor.levels)
    for (const auto& [cell, targets] : level.attaching)
      for (const auto& t : targets) add(level.k - 1, t);
  return out;
}

}  // namespace

DescriptorValidation validate_descriptor(const NCCWDescriptor& descriptor) {
  DescriptorValidation out;
  auto issue = [&](std::string text) { out.issues.push_back(std::move(text)); };

  std::set<int> ks;
  for (const auto& level : descriptor.levels)
    if (!ks.insert(level.k).second) issue("duplicate level " + std::to_string(level.k));
  if (!ks.empty()) {
    if (*ks.begin() != 0) issue("levels do not start at 0");
    int expected = 0;
    for (int k : ks) {
      for (; expected < k; ++expected) issue("level gap at " + std::to_string(expected));
      expected = k + 1;
    }
  }

  // Targets inferred for an unlisted level always land there, so only
  // explicit chain lists can expose a misplaced target.
  std::map<std::string, int> chain_level;
  std::set<int> listed;
  for (const auto& level : descriptor.levels)
    for (const auto& c : level.chains) {
      chain_level.emplace(c, level.k);
      listed.insert(level.k);
    }
  for (const auto& level : descriptor.levels)
    if (!listed.contains(level.k))
      for (const auto& [cell, targets] : level.attaching) chain_level.emplace(chain_id(cell), level.k);

  for (const auto& level : descriptor.levels) {
    const std::string where = "level " + std::to_string(level.k);
    if (level.lambda < 1) issue(where + ": lambda must be at least 1");
    if (std::any_of(level.fiber.multiplicities.begin(), level.fiber.multiplicities.end(), [](int n) { return n < 1; }))
      issue(where + ": fiber multiplicities must be positive");
    if (level.fiber.commutative() && level.fiber.multiplicities.size() != level.lambda)
      issue(where + ": lambda " + std::to_string(level.lambda) + " differs from commutative fiber length " +
            std::to_string(level.fiber.multiplicities.size()));
    if (!level.chains.empty() && level.chains.size() != level.lambda)
      issue(where + ": " + std::to_string(level.chains.size()) + " chains listed for lambda " +
            std::to_string(level.lambda));
    if (level.k == 0 && !level.attaching.empty()) issue(where + ": 0-cells cannot attach");
    if (level.k > 0 && level.attaching.size() != level.lambda)
      issue(where + ": attaching data for " + std::to_string(level.attaching.size()) + " cells, lambda " +
            std::to_string(level.lambda));
    for (const auto& [cell, targets] : level.attaching) {
      if (!level.chains.empty() &&
          std::find(level.chains.begin(), level.chains.end(), chain_id(cell)) == level.chains.end())
        issue(where + ": attaching cell \"" + cell + "\" is not a chain of this level");
      for (const auto& t : targets) {
        const auto it = chain_level.find(t);
        if (it == chain_level.end()) {
          if (ks.contains(level.k - 1) && !listed.contains(level.k - 1)) continue;
          issue(where + ": attaching target \"" + t + "\" of \"" + cell + "\" is unknown");
        } else if (it->second != level.k - 1)
          issue(where + ": attaching not lower-level: \"" + cell + "\" -> \"" + t + "\" at level " +
                std::to_string(it->second));
      }
      const auto inc = level.incidence.find(cell);
      if (inc != level.incidence.end() && inc->second.size() != targets.size())
        issue(where + ": incidence list of \"" + cell + "\" does not match its attaching list");
    }
  }
  return out;
}

CellComplex complex_from_descriptor(const NCCWDescriptor& descriptor) {
  std::vector<NCCWLevel> levels = descriptor.levels;
  std::sort(levels.begin(), levels.end(), [](const NCCWLevel& a, const NCCWLevel& b) { return a.k < b.k; });
  const auto names = level_chains(descriptor);
  std::vector<Cell> cells;
  for (const auto& level : levels) {
    std::vector<std::string> ids;
    if (const auto it = names.find(level.k); it != names.end())
      for (const auto& c : it->second) ids.push_back(cell_of_chain(c));
    for (std::size_t i = ids.size(); i < level.lambda; ++i)
      ids.push_back("c" + std::to_string(level.k) + "_" + std::to_string(i));
    for (const auto& id : ids) {
      Cell cell{id, level.k, {}};
      const auto att = level.attaching.find(id);
      if (att != level.attaching.end()) {
        const auto inc = level.incidence.find(id);
        for (std::size_t i = 0; i < att->second.size(); ++i) {
          const bool has_degree = inc != level.incidence.end() && i < inc->second.size();
          cell.boundary.push_back({cell_of_chain(att->second[i]), has_degree ? inc->second[i] : Integer(1)});
        }
      }
      cells.push_back(std::move(cell));
    }
  }
  return CellComplex(std::move(cells));
}

}  // namespace ncmorse
