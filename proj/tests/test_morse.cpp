#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include "ncmorse/errors.hpp"
#include "ncmorse/morse.hpp"

#include <doctest.h>

using namespace ncmorse;

namespace {

MorseFunction make(std::initializer_list<std::pair<const char*, long>> values) {
  MorseFunction f;
  for (const auto& [id, v] : values) f.values[id] = Rational(v);
  return f;
}

std::set<std::string> flat(const CriticalReport& r) {
  std::set<std::string> out;
  for (const auto& level : r.critical) out.insert(level.begin(), level.end());
  return out;
}

// Every assignment of values 0..top-1 to the chains.
void for_each_function(const ChainLattice& l, int top, const std::function<void(const MorseFunction&)>& fn) {
  std::vector<int> digits(l.size(), 0);
  for (;;) {
    MorseFunction f;
    for (std::size_t i = 0; i < l.size(); ++i) f.values[l.chain(i).id] = Rational(digits[i]);
    fn(f);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == top) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

}  // namespace

TEST_SUITE("morse") {

TEST_CASE("modified Morse examples") {
  const auto cells = load_fixture("interval");
  const auto l = chain_lattice(cells);

  const auto f012 = make({{"W_v0", 0}, {"W_v1", 1}, {"W_e0", 2}});
  CHECK(oracle::is_modified_morse(cells.cells(), f012.values));
  CHECK(is_modified_morse(l, f012).valid());

  const auto point = chain_lattice(load_fixture("point"));
  CHECK(is_modified_morse(point, make({{"W_v0", 7}})).valid());

  const auto flat0 = make({{"W_v0", 0}, {"W_v1", 0}, {"W_e0", 0}});
  CHECK_FALSE(oracle::is_modified_morse(cells.cells(), flat0.values));
  const auto report = is_modified_morse(l, flat0);
  CHECK_FALSE(report.valid());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].chain == "W_e0");
  CHECK_FALSE(report.violations[0].cofacets);
  CHECK(report.violations[0].neighbours == std::vector<std::string>{"W_v0", "W_v1"});

  CHECK_THROWS_AS(is_modified_morse(l, make({{"W_v0", 0}})), invalid_input_error);
  CHECK_THROWS_AS(is_modified_morse(l, make({{"W_v0", 0}, {"W_v1", 0}, {"W_e0", 0}, {"W_x", 1}})),
                  invalid_input_error);
}

TEST_CASE("critical chain examples") {
  const auto cells = load_fixture("interval");
  const auto l = chain_lattice(cells);

  const auto f012 = make({{"W_v0", 0}, {"W_v1", 1}, {"W_e0", 2}});
  CHECK(oracle::critical(cells.cells(), f012.values, false) == std::set<std::string>{"W_v0", "W_v1", "W_e0"});
  const auto paper = critical_chains(l, f012, Convention::paper);
  CHECK(paper.critical == std::vector<std::vector<std::string>>{{"W_v0", "W_v1"}, {"W_e0"}});
  CHECK(paper.counts() == std::vector<std::size_t>{2, 1});

  const auto f021 = make({{"W_v0", 0}, {"W_v1", 2}, {"W_e0", 1}});
  CHECK(oracle::critical(cells.cells(), f021.values, true) == std::set<std::string>{"W_v0"});
  const auto strict = critical_chains(l, f021, Convention::forman);
  CHECK(flat(strict) == std::set<std::string>{"W_v0"});
  CHECK(strict.counts() == std::vector<std::size_t>{1, 0});

  for (const char* name : {"interval", "torus", "circle", "square", "rp2"}) {
    const auto lat = chain_lattice(load_fixture(name));
    const auto all = critical_chains(lat, order_function(lat), Convention::paper);
    CHECK(all.total() == lat.size());
  }
  CHECK_THROWS_AS(critical_chains(l, make({{"W_v0", 0}}), Convention::paper), invalid_input_error);
}

TEST_CASE("acceptability") {
  const std::vector<std::size_t> m21{2, 1}, m01{0, 1}, none{}, m100{1, 0, 0}, m101{1, 0, 1};
  CHECK(is_acceptable(m21));
  CHECK_FALSE(is_acceptable(m01));
  CHECK(is_acceptable(none));
  CHECK(is_acceptable(m100));
  CHECK_FALSE(is_acceptable(m101));

  CriticalReport crafted;
  crafted.critical = {{}, {"W_e0"}};
  CHECK_THROWS_AS(require_acceptable(crafted), precondition_error);
  crafted.critical = {{"W_v0"}, {}};
  CHECK_NOTHROW(require_acceptable(crafted));
}

TEST_CASE("matching examples") {
  const auto l = chain_lattice(load_fixture("interval"));
  const auto m = matching_from_function(l, make({{"W_v0", 0}, {"W_v1", 2}, {"W_e0", 1}}));
  CHECK(m.pairs == std::vector<std::pair<std::string, std::string>>{{"W_v1", "W_e0"}});
  CHECK(m.unmatched == std::vector<std::string>{"W_v0"});

  const auto empty = matching_from_function(l, order_function(l));
  CHECK(empty.pairs.empty());
  CHECK(empty.unmatched.size() == 3);

  CHECK_THROWS_AS(matching_from_function(l, make({{"W_v0", 0}, {"W_v1", 0}, {"W_e0", 0}})), precondition_error);
}

TEST_CASE("a chain with a low cofacet and a high facet cannot be matched") {
  // Disk with a loop edge: impossible in a regular complex, but here the
  // loop has a low cofacet (the disk) and a high facet (the vertex).
  const CellComplex c({{"v", 0, {}}, {"e", 1, {{"v", Integer(0)}}}, {"D", 2, {{"e", Integer(1)}}}});
  const auto l = chain_lattice(c);
  const auto f = make({{"W_v", 2}, {"W_e", 1}, {"W_D", 0}});
  const auto v = is_modified_morse(l, f);
  CHECK(v.valid());
  CHECK(v.conflicts == std::vector<std::string>{"W_e"});
  CHECK_FALSE(v.matchable());
  CHECK_THROWS_AS(matching_from_function(l, f), invalid_morse_error);
}

TEST_CASE("acyclicity") {
  const auto interval = chain_lattice(load_fixture("interval"));
  CHECK(is_acyclic_matching(interval, {}));
  CHECK(is_acyclic_matching(interval, {{{"W_v1", "W_e0"}}, {}}));
  CHECK_THROWS_AS(is_acyclic_matching(interval, {{{"W_v0", "W_v1"}}, {}}), invalid_input_error);
  CHECK_THROWS_AS(is_acyclic_matching(interval, {{{"W_v0", "W_e0"}, {"W_v1", "W_e0"}}, {}}), invalid_input_error);

  const auto square_cells = load_fixture("square");
  const auto square = chain_lattice(square_cells);
  const MorseMatching around{{{"W_a", "W_ab"}, {"W_b", "W_bc"}, {"W_c", "W_cd"}, {"W_d", "W_da"}}, {}};
  CHECK(oracle::matching_has_cycle(square_cells.cells(), {around.pairs.begin(), around.pairs.end()}));
  CHECK_FALSE(is_acyclic_matching(square, around));
  const MorseMatching two{{{"W_a", "W_ab"}, {"W_b", "W_bc"}}, {}};
  CHECK_FALSE(oracle::matching_has_cycle(square_cells.cells(), {two.pairs.begin(), two.pairs.end()}));
  CHECK(is_acyclic_matching(square, two));

  const auto circle_cells = load_fixture("circle");
  const auto circle = chain_lattice(circle_cells);
  const MorseMatching loop{{{"W_v0", "W_e0"}, {"W_v1", "W_e1"}}, {}};
  CHECK(oracle::matching_has_cycle(circle_cells.cells(), {loop.pairs.begin(), loop.pairs.end()}));
  CHECK_FALSE(is_acyclic_matching(circle, loop));
}

TEST_CASE("generator") {
  const auto point = chain_lattice(load_fixture("point"));
  const auto f = generate_morse(point, 1);
  CHECK(f.values.size() == 1);
  CHECK(f.values.at("W_v0") == 0);

  const auto interval = chain_lattice(load_fixture("interval"));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = generate_morse(interval, seed);
    CHECK(is_modified_morse(interval, g).matchable());
    CHECK(g.values == generate_morse(interval, seed).values);
  }

  const auto torus = chain_lattice(load_fixture("torus"));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = critical_chains(torus, generate_morse(torus, seed), Convention::forman).counts();
    const std::vector<std::size_t> b{1, 2, 1};
    for (std::size_t k = 0; k < 3; ++k) CHECK(m[k] >= b[k]);
  }
}

TEST_CASE("exhaustive: valid functions match onto their strict critical set") {
  for (const char* name : {"interval", "circle", "point"}) {
    const auto cells = load_fixture(name);
    const auto l = chain_lattice(cells);
    std::size_t valid = 0;
    for_each_function(l, 6, [&](const MorseFunction& f) {
      const bool ok = is_modified_morse(l, f).valid();
      CHECK(ok == oracle::is_modified_morse(cells.cells(), f.values));

      const auto strict = flat(critical_chains(l, f, Convention::forman));
      const auto paper = flat(critical_chains(l, f, Convention::paper));
      CHECK(strict == oracle::critical(cells.cells(), f.values, true));
      CHECK(paper == oracle::critical(cells.cells(), f.values, false));
      CHECK(std::includes(paper.begin(), paper.end(), strict.begin(), strict.end()));
      if (!ok) return;
      ++valid;
      const auto m = matching_from_function(l, f);
      CHECK(std::set<std::string>(m.unmatched.begin(), m.unmatched.end()) == strict);
      CHECK(is_acyclic_matching(l, m));
      CHECK_FALSE(oracle::matching_has_cycle(cells.cells(), {m.pairs.begin(), m.pairs.end()}));
    });
    CHECK(valid > 0);
  }
}

TEST_CASE("exhaustive on the triangle boundary (6 chains)") {
  const auto cells = gen::simplicial({{0, 1}, {1, 2}, {0, 2}});
  const auto l = chain_lattice(cells);
  REQUIRE(l.size() == 6);
  for_each_function(l, 6, [&](const MorseFunction& f) {
    if (!is_modified_morse(l, f).valid()) return;
    const auto m = matching_from_function(l, f);
    CHECK(std::set<std::string>(m.unmatched.begin(), m.unmatched.end()) ==
          oracle::critical(cells.cells(), f.values, true));
    CHECK(is_acyclic_matching(l, m));
  });
}

TEST_CASE("shift and positive scaling leave reports and matching unchanged") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = gen::random_simplicial(rng, 14);
    const auto l = chain_lattice(c);
    MorseFunction f;
    if (trial % 2 == 0) {
      f = generate_morse(l, rng());
    } else {
      std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
      for (const auto& ch : l.chains()) f.values[ch.id] = Rational(num(rng), den(rng));
    }
    MorseFunction g;
    const Rational scale(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
    const Rational shift(std::uniform_int_distribution<int>(-9, 9)(rng), 7);
    for (const auto& [id, v] : f.values) g.values[id] = v * scale + shift;

    for (auto conv : {Convention::paper, Convention::forman})
      CHECK(critical_chains(l, f, conv).critical == critical_chains(l, g, conv).critical);
    const auto vf = is_modified_morse(l, f);
    CHECK(vf.valid() == is_modified_morse(l, g).valid());
    if (vf.matchable()) {
      const auto mf = matching_from_function(l, f);
      const auto mg = matching_from_function(l, g);
      CHECK(mf.pairs == mg.pairs);
      CHECK(is_acyclic_matching(l, mf));
    }
  }
}

TEST_CASE("random rational functions: valid ones match onto the strict critical set") {
  std::mt19937_64 rng(31);
  std::size_t checked = 0;
  for (int trial = 0; trial < 4000 && checked < 150; ++trial) {
    const auto c = gen::random_simplicial(rng, 10);
    const auto l = chain_lattice(c);
    MorseFunction f;
    std::uniform_int_distribution<int> num(0, 30), den(1, 5);
    for (const auto& ch : l.chains()) f.values[ch.id] = Rational(num(rng), den(rng)) + ch.order * 2;
    if (!is_modified_morse(l, f).valid()) continue;
    ++checked;
    const auto m = matching_from_function(l, f);
    CHECK(std::set<std::string>(m.unmatched.begin(), m.unmatched.end()) == flat(critical_chains(l, f, Convention::forman)));
    CHECK(is_acyclic_matching(l, m));
  }
  CHECK(checked >= 50);
}

TEST_CASE("generated functions on random complexes are valid and acyclic") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = gen::random_simplicial(rng);
    const auto l = chain_lattice(c);
    const auto f = generate_morse(l, rng());
    REQUIRE(is_modified_morse(l, f).matchable());
    const auto m = matching_from_function(l, f);
    CHECK(is_acyclic_matching(l, m));
    CHECK_FALSE(oracle::matching_has_cycle(c.cells(), {m.pairs.begin(), m.pairs.end()}));
  }
}

}
