#pragma once

// Finite T0 spaces as posets. The order models ideal inclusion in a
// primitive spectrum: x <= y means the ideal x is contained in y, so the
// closure of a point is its up-set.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ncmorse {

using IdSet = std::set<std::string>;

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds the order generated by `covers` (pairs a < b). The relation is
  /// closed transitively here; duplicate ids, unknown ids, self-covers and
  /// cycles are rejected with invalid_input_error.
  static FinitePoset from_covers(std::vector<std::string> elements,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& elements() const { return ids_; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  std::size_t require_index(const std::string& id) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * ids_.size() + b] != 0; }
  bool leq(const std::string& a, const std::string& b) const;

  /// Covering pairs (a, b) of the transitive reduction, in index order.
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<unsigned char> leq_;  // row-major n*n
};

/// Hull-kernel closure on the finite model: the up-set of `subset`.
IdSet closure(const FinitePoset& poset, const IdSet& subset);

/// Checks "x in X and x <= y imply y in X" pair by pair.
bool is_absorbing(const FinitePoset& poset, const IdSet& subset);

/// W_e = {x : e <= x}
IdSet up_set(const FinitePoset& poset, const std::string& element);
/// O_e = {x : x <= e}
IdSet down_set(const FinitePoset& poset, const std::string& element);

IdSet complement(const FinitePoset& poset, const IdSet& subset);

}  // namespace ncmorse
