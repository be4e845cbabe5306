#include "ncmorse/json_io.hpp"

#include "ncmorse/errors.hpp"

#include <fstream>
#include <limits>

namespace ncmorse {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw_invalid_input(where + ": " + what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

Integer integer_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const invalid_input_error& e) {
      bad(where, e.what());
    }
  }
  bad(where, "expected an integer");
}

int int_at(const json& j, const std::string& where) {
  const Integer v = integer_at(j, where);
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) bad(where, "integer out of range");
  return v.convert_to<int>();
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& where, const std::string& key) { return where + "." + key; }

}  // namespace

json integer_to_json(const Integer& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() && value >= std::numeric_limits<std::int64_t>::min())
    return value.convert_to<std::int64_t>();
  return value.str();
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_invalid_input("cannot open \"" + path.string() + "\"");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw_invalid_input("\"" + path.string() + "\" is not valid JSON: " + e.what());
  }
}

CellComplex complex_from_json(const json& j) {
  const json& cells = array_at(field(j, "cells", "complex"), "cells");
  std::vector<Cell> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string where = at("cells", i);
    Cell c;
    c.id = string_at(field(cells[i], "id", where), at(where, "id"));
    c.dim = int_at(field(cells[i], "dim", where), at(where, "dim"));
    if (cells[i].contains("boundary")) {
      const json& b = array_at(cells[i]["boundary"], at(where, "boundary"));
      for (std::size_t k = 0; k < b.size(); ++k) {
        const std::string w = at(at(where, "boundary"), k);
        c.boundary.push_back(
            {string_at(field(b[k], "cell", w), at(w, "cell")), integer_at(field(b[k], "deg", w), at(w, "deg"))});
      }
    }
    out.push_back(std::move(c));
  }
  return CellComplex(std::move(out));
}

json to_json(const CellComplex& complex) {
  json cells = json::array();
  for (const auto& c : complex.cells()) {
    json boundary = json::array();
    for (const auto& inc : c.boundary) boundary.push_back({{"cell", inc.face}, {"deg", integer_to_json(inc.degree)}});
    cells.push_back({{"id", c.id}, {"dim", c.dim}, {"boundary", std::move(boundary)}});
  }
  return {{"cells", std::move(cells)}};
}

FinitePoset poset_from_json(const json& j) {
  const json& elems = array_at(field(j, "elements", "poset"), "elements");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < elems.size(); ++i) ids.push_back(string_at(elems[i], at("elements", i)));
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    const json& cs = array_at(j["covers"], "covers");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = at("covers", i);
      if (!cs[i].is_array() || cs[i].size() != 2) bad(where, "expected a pair [lower, upper]");
      covers.emplace_back(string_at(cs[i][0], at(where, 0)), string_at(cs[i][1], at(where, 1)));
    }
  }
  return FinitePoset::from_covers(std::move(ids), covers);
}

json to_json(const FinitePoset& poset) {
  json covers = json::array();
  for (const auto& [a, b] : poset.covering_pairs()) covers.push_back({poset.elements()[a], poset.elements()[b]});
  return {{"elements", poset.elements()}, {"covers", std::move(covers)}};
}

IdSet subset_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "members", "subset") : j;
  array_at(arr, "members");
  IdSet out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.insert(string_at(arr[i], at("members", i)));
  return out;
}

MorseFunction morse_function_from_json(const json& j) {
  const json& values = field(j, "values", "morse function");
  if (!values.is_object()) bad("values", "expected an object");
  MorseFunction f;
  for (const auto& [key, value] : values.items()) {
    const std::string where = at("values", key);
    if (value.is_string()) {
      try {
        f.values[key] = parse_rational(value.get<std::string>());
      } catch (const invalid_input_error& e) {
        bad(where, e.what());
      }
    } else if (value.is_number_integer()) {
      f.values[key] = Rational(integer_at(value, where));
    } else {
      bad(where, "expected an integer or a \"p/q\" string");
    }
  }
  return f;
}

json to_json(const MorseFunction& f) {
  json values = json::object();
  for (const auto& [id, v] : f.values) values[id] = to_string(v);
  return {{"values", std::move(values)}};
}

NCCWDescriptor descriptor_from_json(const json& j) {
  const json& levels = array_at(field(j, "levels", "descriptor"), "levels");
  NCCWDescriptor d;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string where = at("levels", i);
    const json& lj = levels[i];
    NCCWLevel level;
    level.k = int_at(field(lj, "k", where), at(where, "k"));
    const json& fiber = array_at(field(lj, "fiber", where), at(where, "fiber"));
    for (std::size_t f = 0; f < fiber.size(); ++f)
      level.fiber.multiplicities.push_back(int_at(fiber[f], at(at(where, "fiber"), f)));
    const int lambda = int_at(field(lj, "lambda", where), at(where, "lambda"));
    if (lambda < 0) bad(at(where, "lambda"), "must be non-negative");
    level.lambda = static_cast<std::size_t>(lambda);
    if (lj.contains("chains")) {
      const json& cs = array_at(lj["chains"], at(where, "chains"));
      for (std::size_t c = 0; c < cs.size(); ++c) level.chains.push_back(string_at(cs[c], at(at(where, "chains"), c)));
    }
    if (lj.contains("attaching")) {
      const json& att = lj["attaching"];
      if (!att.is_object()) bad(at(where, "attaching"), "expected an object");
      for (const auto& [cell, targets] : att.items()) {
        const std::string w = at(at(where, "attaching"), cell);
        array_at(targets, w);
        auto& list = level.attaching[cell];
        for (std::size_t t = 0; t < targets.size(); ++t) list.push_back(string_at(targets[t], at(w, t)));
      }
    }
    if (lj.contains("incidence")) {
      const json& inc = lj["incidence"];
      if (!inc.is_object()) bad(at(where, "incidence"), "expected an object");
      for (const auto& [cell, degrees] : inc.items()) {
        const std::string w = at(at(where, "incidence"), cell);
        array_at(degrees, w);
        auto& list = level.incidence[cell];
        for (std::size_t t = 0; t < degrees.size(); ++t) list.push_back(integer_at(degrees[t], at(w, t)));
      }
    }
    d.levels.push_back(std::move(level));
  }
  if (j.contains("notes")) {
    const json& notes = array_at(j["notes"], "notes");
    for (std::size_t i = 0; i < notes.size(); ++i) d.notes.push_back(string_at(notes[i], at("notes", i)));
  }
  return d;
}

json to_json(const NCCWDescriptor& d) {
  json levels = json::array();
  for (const auto& level : d.levels) {
    json attaching = json::object();
    for (const auto& [cell, targets] : level.attaching) attaching[cell] = targets;
    json incidence = json::object();
    for (const auto& [cell, degrees] : level.incidence) {
      json arr = json::array();
      for (const auto& deg : degrees) arr.push_back(integer_to_json(deg));
      incidence[cell] = std::move(arr);
    }
    levels.push_back({{"k", level.k},
                      {"algebra", level.algebra()},
                      {"fiber", level.fiber.multiplicities},
                      {"lambda", level.lambda},
                      {"chains", level.chains},
                      {"attaching", std::move(attaching)},
                      {"incidence", std::move(incidence)},
                      {"roles", level_roles(level.k)}});
  }
  return {{"levels", std::move(levels)}, {"notes", d.notes}};
}

json to_json(const ComplexValidation& report) {
  json issues = json::array();
  for (const auto& f : report.issues) issues.push_back({{"kind", to_string(f.kind)}, {"cell", f.cell}, {"detail", f.detail}});
  return {{"valid", report.ok()},
          {"regular", report.regular},
          {"irregular_cells", report.irregular_cells},
          {"issues", std::move(issues)}};
}

json to_json(const ChainLattice& lattice) {
  json chains = json::array();
  for (const auto& c : lattice.chains())
    chains.push_back({{"id", c.id},
                      {"order", c.order},
                      {"generator", c.generator},
                      {"support", std::vector<std::string>(c.support.begin(), c.support.end())},
                      {"ideal", c.ideal}});
  json hasse = json::array();
  for (const auto& e : lattice.hasse())
    hasse.push_back({{"lower", lattice.chain(e.lower).id},
                     {"upper", lattice.chain(e.upper).id},
                     {"incidence", integer_to_json(e.incidence)}});
  return {{"chains", std::move(chains)}, {"hasse", std::move(hasse)}, {"counts", lattice.order_counts()}};
}

json to_json(const MorseValidity& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"chain", v.chain},
                          {"side", v.cofacets ? "cofacets" : "facets"},
                          {"neighbours", v.neighbours}});
  return {{"valid", report.valid()}, {"violations", std::move(violations)}, {"conflicts", report.conflicts}};
}

json to_json(const CriticalReport& report) {
  return {{"convention", to_string(report.convention)},
          {"critical", report.critical},
          {"m", report.counts()},
          {"acceptable", is_acceptable(report)}};
}

json to_json(const MorseMatching& matching) {
  json pairs = json::array();
  for (const auto& [lo, hi] : matching.pairs) pairs.push_back({lo, hi});
  return {{"pairs", std::move(pairs)}, {"unmatched", matching.unmatched}};
}

namespace {

json torsion_json(const std::vector<std::vector<Integer>>& torsion) {
  json out = json::array();
  for (const auto& degree : torsion) {
    json arr = json::array();
    for (const auto& d : degree) arr.push_back(integer_to_json(d));
    out.push_back(std::move(arr));
  }
  return out;
}

}  // namespace

json to_json(const HomologyProfile& profile) {
  return {{"betti", profile.betti}, {"torsion", torsion_json(profile.torsion)}, {"euler", profile.euler}};
}

json to_json(const CollapseReport& report) {
  json checks = json::object();
  for (const auto& c : report.checks) checks[c.name] = c.passed;
  json pairs = json::array();
  for (const auto& [lo, hi] : report.pairs) pairs.push_back({lo, hi});
  return {{"betti", report.source.betti},
          {"torsion", torsion_json(report.source.torsion)},
          {"euler", report.source.euler},
          {"cell_counts", report.cell_counts},
          {"morse_counts", report.morse_counts},
          {"morse_alternating_sum", report.morse_alternating_sum},
          {"morse_betti", report.morse.betti},
          {"morse_torsion", torsion_json(report.morse.torsion)},
          {"pairs", std::move(pairs)},
          {"checks", std::move(checks)},
          {"passed", report.passed()},
          {"evidence", report.evidence},
          {"note", report.note}};
}

json to_json(const DescriptorValidation& report) {
  return {{"valid", report.ok()}, {"issues", report.issues}};
}

}  // namespace ncmorse
