#pragma once

// Finite CW complexes given by cells and signed boundary incidences. The
// incidence numbers are the homological shadow of the attaching maps; a face
// listed with incidence 0 still counts as a face (it lies in the image of the
// attaching map), as for the one-vertex torus.

#include "ncmorse/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncmorse {

struct Incidence {
  std::string face;
  Integer degree;
};

struct Cell {
  std::string id;
  int dim = 0;
  std::vector<Incidence> boundary;
};

class CellComplex {
 public:
  CellComplex() = default;
  /// Stores the cells as given; nothing is checked here. Use validate_complex.
  explicit CellComplex(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  /// First cell with this id, if any.
  std::optional<std::size_t> index_of(const std::string& id) const;
  const Cell& cell(std::size_t i) const { return cells_[i]; }

  /// Max cell dimension, -1 when empty.
  int dimension() const;
  /// Number of cells per dimension 0..dimension().
  std::vector<std::size_t> cell_counts() const;
  /// Cell indices of dimension k in input order.
  std::vector<std::size_t> cells_of_dim(int k) const;

 private:
  std::vector<Cell> cells_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class ComplexIssue {
  empty_id,
  duplicate_id,
  negative_dimension,
  dangling_face,
  wrong_dimension,
  boundary_not_cycle,  // the composite boundary map is nonzero
};

const char* to_string(ComplexIssue issue);

struct ComplexFinding {
  ComplexIssue kind;
  std::string cell;
  std::string detail;
};

struct ComplexValidation {
  std::vector<ComplexFinding> issues;
  /// All incidences are +1/-1 and no (cell, face) pair repeats.
  bool regular = true;
  std::vector<std::string> irregular_cells;

  bool ok() const { return issues.empty(); }
};

ComplexValidation validate_complex(const CellComplex& complex);

/// Throws invalid_input_error carrying the first finding.
void require_valid(const CellComplex& complex);

/// The k-skeleton: cells of dimension <= k, order preserved.
CellComplex skeleton(const CellComplex& complex, int k);

/// Same complex with every cell id mapped through `rename` (faces too).
CellComplex relabeled(const CellComplex& complex, const std::unordered_map<std::string, std::string>& rename);

}  // namespace ncmorse
