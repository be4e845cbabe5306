#include "ncmorse/poset.hpp"

#include "ncmorse/errors.hpp"

namespace ncmorse {

FinitePoset FinitePoset::from_covers(std::vector<std::string> elements,
                                     const std::vector<std::pair<std::string, std::string>>& covers) {
  FinitePoset p;
  p.ids_ = std::move(elements);
  const std::size_t n = p.ids_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.ids_[i], i).second) throw_invalid_input("duplicate poset element \"" + p.ids_[i] + "\"");
  }
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    const std::size_t a = p.require_index(lo);
    const std::size_t b = p.require_index(hi);
    if (a == b) throw_invalid_input("cover relates \"" + lo + "\" to itself");
    p.leq_[a * n + b] = 1;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw_invalid_input("covers contain a cycle through \"" + p.ids_[i] + "\" and \"" + p.ids_[j] + "\"");
  return p;
}

std::optional<std::size_t> FinitePoset::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinitePoset::require_index(const std::string& id) const {
  const auto idx = index_of(id);
  if (!idx) throw_invalid_input("unknown poset element \"" + id + "\"");
  return *idx;
}

bool FinitePoset::leq(const std::string& a, const std::string& b) const {
  return leq(require_index(a), require_index(b));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

std::vector<std::size_t> indices_of(const FinitePoset& poset, const IdSet& subset) {
  std::vector<std::size_t> out;
  out.reserve(subset.size());
  for (const auto& id : subset) out.push_back(poset.require_index(id));
  return out;
}

}  // namespace

IdSet closure(const FinitePoset& poset, const IdSet& subset) {
  const auto members = indices_of(poset, subset);
  IdSet out;
  for (std::size_t e = 0; e < poset.size(); ++e) {
    for (std::size_t m : members) {
      if (poset.leq(m, e)) {
        out.insert(poset.elements()[e]);
        break;
      }
    }
  }
  return out;
}

bool is_absorbing(const FinitePoset& poset, const IdSet& subset) {
  const auto members = indices_of(poset, subset);
  for (std::size_t m : members)
    for (std::size_t e = 0; e < poset.size(); ++e)
      if (poset.leq(m, e) && !subset.contains(poset.elements()[e])) return false;
  return true;
}

IdSet up_set(const FinitePoset& poset, const std::string& element) {
  const std::size_t e = poset.require_index(element);
  IdSet out;
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (poset.leq(e, x)) out.insert(poset.elements()[x]);
  return out;
}

IdSet down_set(const FinitePoset& poset, const std::string& element) {
  const std::size_t e = poset.require_index(element);
  IdSet out;
  for (std::size_t x = 0; x < poset.size(); ++x)
    if (poset.leq(x, e)) out.insert(poset.elements()[x]);
  return out;
}

IdSet complement(const FinitePoset& poset, const IdSet& subset) {
  IdSet out;
  for (const auto& id : poset.elements())
    if (!subset.contains(id)) out.insert(id);
  return out;
}

}  // namespace ncmorse
