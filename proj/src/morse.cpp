#include "ncmorse/morse.hpp"

#include "ncmorse/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace ncmorse {

const char* to_string(Convention convention) {
  return convention == Convention::paper ? "paper" : "forman";
}

Convention parse_convention(const std::string& text) {
  if (text == "paper" || text == "paper-nonstrict") return Convention::paper;
  if (text == "forman" || text == "forman-strict") return Convention::forman;
  throw_invalid_input("unknown convention \"" + text + "\" (expected paper or forman)");
}

std::vector<std::size_t> CriticalReport::counts() const {
  std::vector<std::size_t> m;
  m.reserve(critical.size());
  for (const auto& level : critical) m.push_back(level.size());
  return m;
}

std::size_t CriticalReport::total() const {
  std::size_t t = 0;
  for (const auto& level : critical) t += level.size();
  return t;
}

void require_total(const ChainLattice& lattice, const MorseFunction& f) {
  for (const auto& c : lattice.chains())
    if (!f.values.contains(c.id)) throw_invalid_input("Morse function has no value for chain \"" + c.id + "\"");
  for (const auto& [id, value] : f.values)
    if (!lattice.index_of(id)) throw_invalid_input("Morse function names unknown chain \"" + id + "\"");
}

namespace {

std::vector<Rational> values_by_index(const ChainLattice& lattice, const MorseFunction& f) {
  require_total(lattice, f);
  std::vector<Rational> v;
  v.reserve(lattice.size());
  for (const auto& c : lattice.chains()) v.push_back(f.values.at(c.id));
  return v;
}

// Cofacets u of i with f(u) <= f(i), and facets l of i with f(l) >= f(i).
struct Exceptional {
  std::vector<std::size_t> low_cofacets;
  std::vector<std::size_t> high_facets;
};

Exceptional exceptional_neighbours(const ChainLattice& lattice, const std::vector<Rational>& v, std::size_t i) {
  Exceptional ex;
  for (std::size_t e : lattice.cofacet_edges(i)) {
    const std::size_t u = lattice.hasse()[e].upper;
    if (v[u] <= v[i]) ex.low_cofacets.push_back(u);
  }
  for (std::size_t e : lattice.facet_edges(i)) {
    const std::size_t l = lattice.hasse()[e].lower;
    if (v[l] >= v[i]) ex.high_facets.push_back(l);
  }
  return ex;
}

std::vector<std::string> names(const ChainLattice& lattice, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(lattice.chain(i).id);
  return out;
}

// Directed graph of the gradient: matched covers point up, others down.
bool has_cycle(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  enum : unsigned char { white, grey, black };
  std::vector<unsigned char> colour(n, white);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != white) continue;
    stack.emplace_back(s, 0);
    colour[s] = grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < adj[node].size()) {
        const std::size_t to = adj[node][next++];
        if (colour[to] == grey) return true;
        if (colour[to] == white) {
          colour[to] = grey;
          stack.emplace_back(to, 0);
        }
      } else {
        colour[node] = black;
        stack.pop_back();
      }
    }
  }
  return false;
}

std::vector<std::vector<std::size_t>> gradient_graph(const ChainLattice& lattice, const std::vector<char>& matched_edge) {
  std::vector<std::vector<std::size_t>> adj(lattice.size());
  for (std::size_t e = 0; e < lattice.hasse().size(); ++e) {
    const auto& h = lattice.hasse()[e];
    if (matched_edge[e])
      adj[h.lower].push_back(h.upper);
    else
      adj[h.upper].push_back(h.lower);
  }
  return adj;
}

}  // namespace

MorseValidity is_modified_morse(const ChainLattice& lattice, const MorseFunction& f) {
  const auto v = values_by_index(lattice, f);
  MorseValidity out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto ex = exceptional_neighbours(lattice, v, i);
    if (ex.low_cofacets.size() > 1)
      out.violations.push_back({lattice.chain(i).id, true, names(lattice, ex.low_cofacets)});
    if (ex.high_facets.size() > 1)
      out.violations.push_back({lattice.chain(i).id, false, names(lattice, ex.high_facets)});
    if (!ex.low_cofacets.empty() && !ex.high_facets.empty()) out.conflicts.push_back(lattice.chain(i).id);
  }
  return out;
}

CriticalReport critical_chains(const ChainLattice& lattice, const MorseFunction& f, Convention convention) {
  const auto v = values_by_index(lattice, f);
  CriticalReport report;
  report.convention = convention;
  report.critical.resize(static_cast<std::size_t>(lattice.max_order() + 1));
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    bool critical = true;
    for (std::size_t e : lattice.cofacet_edges(i)) {
      const Rational& up = v[lattice.hasse()[e].upper];
      if (convention == Convention::paper ? !(up >= v[i]) : !(up > v[i])) critical = false;
    }
    for (std::size_t e : lattice.facet_edges(i)) {
      const Rational& down = v[lattice.hasse()[e].lower];
      if (convention == Convention::paper ? !(down <= v[i]) : !(down < v[i])) critical = false;
    }
    if (critical) report.critical[static_cast<std::size_t>(lattice.chain(i).order)].push_back(lattice.chain(i).id);
  }
  return report;
}

bool is_acceptable(std::span<const std::size_t> counts) {
  bool gap = false;
  for (std::size_t m : counts) {
    if (m == 0)
      gap = true;
    else if (gap)
      return false;
  }
  return true;
}

bool is_acceptable(const CriticalReport& report) {
  const auto m = report.counts();
  return is_acceptable(std::span<const std::size_t>(m));
}

void require_acceptable(const CriticalReport& report) {
  const auto m = report.counts();
  std::size_t top = 0;
  bool any = false;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] > 0) top = k, any = true;
  if (!any) return;
  for (std::size_t k = 0; k < top; ++k)
    if (m[k] == 0)
      throw precondition_error("Morse function is not acceptable: critical chains of order " + std::to_string(top) +
                               " exist but none of order " + std::to_string(k) + " (" + to_string(report.convention) +
                               " convention)");
}

MorseMatching matching_from_function(const ChainLattice& lattice, const MorseFunction& f) {
  const auto validity = is_modified_morse(lattice, f);
  if (!validity.valid())
    throw precondition_error("not a modified Morse function: chain \"" + validity.violations.front().chain +
                             "\" has more than one exceptional " +
                             (validity.violations.front().cofacets ? "cofacet" : "facet"));
  const auto v = values_by_index(lattice, f);

  std::vector<long> partner(lattice.size(), -1);
  std::vector<char> matched_edge(lattice.hasse().size(), 0);
  MorseMatching out;
  for (std::size_t e = 0; e < lattice.hasse().size(); ++e) {
    const auto& h = lattice.hasse()[e];
    if (!(v[h.upper] <= v[h.lower])) continue;
    if (partner[h.lower] >= 0 || partner[h.upper] >= 0) {
      const std::size_t twice = partner[h.lower] >= 0 ? h.lower : h.upper;
      throw invalid_morse_error("induced pairing uses chain \"" + lattice.chain(twice).id + "\" twice");
    }
    partner[h.lower] = static_cast<long>(h.upper);
    partner[h.upper] = static_cast<long>(h.lower);
    matched_edge[e] = 1;
    out.pairs.emplace_back(lattice.chain(h.lower).id, lattice.chain(h.upper).id);
  }
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (partner[i] < 0) out.unmatched.push_back(lattice.chain(i).id);
  // f decreases strictly along every gradient path step, so this cannot fire
  // for a matchable f.
  if (has_cycle(lattice.size(), gradient_graph(lattice, matched_edge)))
    throw invalid_morse_error("induced pairing is not acyclic");
  return out;
}

bool is_acyclic_matching(const ChainLattice& lattice, const MorseMatching& matching) {
  std::vector<char> matched_edge(lattice.hasse().size(), 0);
  std::vector<char> used(lattice.size(), 0);
  for (const auto& [lo, hi] : matching.pairs) {
    const std::size_t a = lattice.require_index(lo);
    const std::size_t b = lattice.require_index(hi);
    const auto e = lattice.edge_between(a, b);
    if (!e) throw_invalid_input("pair (\"" + lo + "\", \"" + hi + "\") is not a Hasse cover");
    if (used[a] || used[b]) throw_invalid_input("chain \"" + (used[a] ? lo : hi) + "\" is matched twice");
    used[a] = used[b] = 1;
    matched_edge[*e] = 1;
  }
  return !has_cycle(lattice.size(), gradient_graph(lattice, matched_edge));
}

MorseFunction generate_morse(const ChainLattice& lattice, std::uint64_t seed) {
  const std::size_t n = lattice.size();
  const auto& hasse = lattice.hasse();
  std::vector<std::size_t> order(hasse.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<char> used(n, 0);
  std::vector<char> matched_edge(hasse.size(), 0);
  for (std::size_t e : order) {
    const auto& h = hasse[e];
    if (used[h.lower] || used[h.upper]) continue;
    if (h.incidence != 1 && h.incidence != -1) continue;
    matched_edge[e] = 1;
    if (has_cycle(n, gradient_graph(lattice, matched_edge))) {
      matched_edge[e] = 0;
      continue;
    }
    used[h.lower] = used[h.upper] = 1;
  }

  // Linear extension of "f(a) < f(b)": unmatched covers lower -> upper,
  // matched covers upper -> lower. Kahn with smallest index first.
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t e = 0; e < hasse.size(); ++e) {
    const auto& h = hasse[e];
    const std::size_t from = matched_edge[e] ? h.upper : h.lower;
    const std::size_t to = matched_edge[e] ? h.lower : h.upper;
    succ[from].push_back(to);
    ++indegree[to];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  MorseFunction f;
  long next = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    f.values[lattice.chain(i).id] = Rational(next++);
    for (std::size_t to : succ[i])
      if (--indegree[to] == 0) ready.push(to);
  }
  return f;
}

MorseFunction order_function(const ChainLattice& lattice) {
  MorseFunction f;
  for (const auto& c : lattice.chains()) f.values[c.id] = Rational(c.order);
  return f;
}

}  // namespace ncmorse
