#include "ncmorse/cell_complex.hpp"

#include "ncmorse/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ncmorse {

CellComplex::CellComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i].id, i);
}

std::optional<std::size_t> CellComplex::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CellComplex::dimension() const {
  int n = -1;
  for (const auto& c : cells_) n = std::max(n, c.dim);
  return n;
}

std::vector<std::size_t> CellComplex::cell_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& c : cells_)
    if (c.dim >= 0) ++counts[static_cast<std::size_t>(c.dim)];
  return counts;
}

std::vector<std::size_t> CellComplex::cells_of_dim(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].dim == k) out.push_back(i);
  return out;
}

const char* to_string(ComplexIssue issue) {
  switch (issue) {
    case ComplexIssue::empty_id: return "empty id";
    case ComplexIssue::duplicate_id: return "duplicate id";
    case ComplexIssue::negative_dimension: return "negative dimension";
    case ComplexIssue::dangling_face: return "dangling face";
    case ComplexIssue::wrong_dimension: return "wrong dimension";
    case ComplexIssue::boundary_not_cycle: return "boundary of boundary nonzero";
  }
  return "unknown";
}

ComplexValidation validate_complex(const CellComplex& complex) {
  ComplexValidation report;
  std::set<std::string> seen;
  for (const auto& c : complex.cells()) {
    if (c.id.empty()) report.issues.push_back({ComplexIssue::empty_id, c.id, "cell id is empty"});
    if (!seen.insert(c.id).second)
      report.issues.push_back({ComplexIssue::duplicate_id, c.id, "cell id appears more than once"});
    if (c.dim < 0) report.issues.push_back({ComplexIssue::negative_dimension, c.id, "dim " + std::to_string(c.dim)});
  }

  bool structural = report.issues.empty();
  for (const auto& c : complex.cells()) {
    std::set<std::string> faces;
    bool irregular = false;
    for (const auto& inc : c.boundary) {
      const auto f = complex.index_of(inc.face);
      if (!f) {
        report.issues.push_back({ComplexIssue::dangling_face, c.id, "face \"" + inc.face + "\" does not exist"});
        structural = false;
        continue;
      }
      const Cell& face = complex.cell(*f);
      if (face.dim != c.dim - 1) {
        report.issues.push_back({ComplexIssue::wrong_dimension, c.id,
                                 "face \"" + inc.face + "\" has dim " + std::to_string(face.dim) + ", expected " +
                                     std::to_string(c.dim - 1)});
        structural = false;
      }
      if (!faces.insert(inc.face).second) irregular = true;
      if (inc.degree != 1 && inc.degree != -1) irregular = true;
    }
    if (irregular) {
      report.regular = false;
      report.irregular_cells.push_back(c.id);
    }
  }
  if (!structural) return report;

  // d(d(c)) = 0, computed sparsely per cell
  for (const auto& c : complex.cells()) {
    std::map<std::string, Integer> second;
    for (const auto& inc : c.boundary) {
      const Cell& face = complex.cell(*complex.index_of(inc.face));
      for (const auto& inner : face.boundary) second[inner.face] += inc.degree * inner.degree;
    }
    for (const auto& [face, coeff] : second) {
      if (coeff != 0) {
        report.issues.push_back({ComplexIssue::boundary_not_cycle, c.id,
                                 "coefficient " + coeff.str() + " on \"" + face + "\""});
        break;
      }
    }
  }
  return report;
}

void require_valid(const CellComplex& complex) {
  const auto report = validate_complex(complex);
  if (!report.ok()) {
    const auto& f = report.issues.front();
    throw invalid_input_error(std::string("invalid complex: ") + to_string(f.kind) + " at cell \"" + f.cell +
                              "\": " + f.detail);
  }
}

CellComplex skeleton(const CellComplex& complex, int k) {
  std::vector<Cell> cells;
  for (const auto& c : complex.cells())
    if (c.dim <= k) cells.push_back(c);
  return CellComplex(std::move(cells));
}

CellComplex relabeled(const CellComplex& complex, const std::unordered_map<std::string, std::string>& rename) {
  auto map_id = [&](const std::string& id) {
    const auto it = rename.find(id);
    return it == rename.end() ? id : it->second;
  };
  std::vector<Cell> cells = complex.cells();
  for (auto& c : cells) {
    c.id = map_id(c.id);
    for (auto& inc : c.boundary) inc.face = map_id(inc.face);
  }
  return CellComplex(std::move(cells));
}

}  // namespace ncmorse
