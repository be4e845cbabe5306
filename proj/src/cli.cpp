#include "ncmorse/cli.hpp"

#include "ncmorse/errors.hpp"
#include "ncmorse/json_io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

namespace ncmorse {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_property = 2;

struct RunConfig {
  std::string format = "text";
  std::string convention = "paper";
  std::uint64_t seed = 0;
  bool emit_dot = false;
  std::string complex_path;
  std::string function_path;
  std::string poset_path;
  std::string subset_path;
  std::string descriptor_path;
};

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& items) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? ", " : "") << items[i];
  os << ")";
  return os.str();
}

std::string torsion_text(const std::vector<std::vector<Integer>>& torsion) {
  std::string out;
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    if (torsion[k].empty()) continue;
    std::vector<std::string> parts;
    for (const auto& d : torsion[k]) parts.push_back("Z/" + d.str());
    out += "  H_" + std::to_string(k) + " torsion: " + join(parts, " + ") + "\n";
  }
  return out.empty() ? "  no torsion\n" : out;
}

class Commands {
 public:
  Commands(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  bool json_output() const { return cfg_.format == "json"; }

  int validate() {
    const auto report = validate_complex(load_complex());
    if (json_output()) {
      out_ << to_json(report).dump(2) << "\n";
    } else {
      out_ << (report.ok() ? "valid" : "invalid") << (report.regular ? ", regular" : ", irregular") << "\n";
      for (const auto& f : report.issues) out_ << "  " << to_string(f.kind) << " at " << f.cell << ": " << f.detail << "\n";
      if (!report.irregular_cells.empty()) out_ << "  irregular cells: " << join(report.irregular_cells) << "\n";
    }
    return report.ok() ? exit_ok : exit_invalid;
  }

  int chains() {
    const auto lattice = chain_lattice(load_complex());
    if (cfg_.emit_dot) {
      out_ << "digraph chains {\n  rankdir=BT;\n";
      for (const auto& c : lattice.chains()) out_ << "  \"" << c.id << "\" [label=\"" << c.id << " (" << c.order << ")\"];\n";
      for (const auto& e : lattice.hasse())
        out_ << "  \"" << lattice.chain(e.lower).id << "\" -> \"" << lattice.chain(e.upper).id << "\" [label=\""
             << e.incidence.str() << "\"];\n";
      out_ << "}\n";
    } else if (json_output()) {
      out_ << to_json(lattice).dump(2) << "\n";
    } else {
      out_ << "chain counts by order: " << join_numbers(lattice.order_counts()) << "\n";
      for (const auto& c : lattice.chains()) {
        out_ << "  " << c.id << "  order " << c.order << "  ideal " << c.ideal << "  support {"
             << join(std::vector<std::string>(c.support.begin(), c.support.end())) << "}\n";
      }
      for (const auto& e : lattice.hasse())
        out_ << "  " << lattice.chain(e.lower).id << " < " << lattice.chain(e.upper).id << "  [" << e.incidence.str()
             << "]\n";
    }
    return exit_ok;
  }

  int morse_check() {
    const auto lattice = chain_lattice(load_complex());
    const auto report = is_modified_morse(lattice, load_function());
    if (json_output()) {
      out_ << to_json(report).dump(2) << "\n";
    } else {
      out_ << (report.valid() ? "valid modified Morse function" : "not a modified Morse function") << "\n";
      for (const auto& v : report.violations)
        out_ << "  " << v.chain << ": several " << (v.cofacets ? "cofacets with f <= f(W)" : "facets with f >= f(W)")
             << ": " << join(v.neighbours) << "\n";
      if (!report.conflicts.empty())
        out_ << "  chains with both a low cofacet and a high facet: " << join(report.conflicts) << "\n";
    }
    return report.valid() ? exit_ok : exit_property;
  }

  int critical() {
    const auto lattice = chain_lattice(load_complex());
    const auto report = critical_chains(lattice, load_function(), parse_convention(cfg_.convention));
    if (json_output()) {
      out_ << to_json(report).dump(2) << "\n";
    } else {
      out_ << "convention: " << to_string(report.convention) << "\n";
      out_ << "m = " << join_numbers(report.counts()) << (is_acceptable(report) ? "  acceptable" : "  not acceptable")
           << "\n";
      for (std::size_t k = 0; k < report.critical.size(); ++k)
        out_ << "  order " << k << ": " << join(report.critical[k]) << "\n";
    }
    return exit_ok;
  }

  int homology() {
    const auto profile = homology_profile(load_complex());
    if (json_output()) {
      out_ << to_json(profile).dump(2) << "\n";
    } else {
      out_ << "betti " << join_numbers(profile.betti) << "  euler " << profile.euler << "\n"
           << torsion_text(profile.torsion);
    }
    return exit_ok;
  }

  int collapse() {
    const auto report = verify_collapse(load_complex(), load_function());
    if (json_output()) {
      out_ << to_json(report).dump(2) << "\n";
    } else {
      out_ << "result: " << (report.passed() ? "pass" : "FAIL") << " (" << report.evidence << ")\n";
      out_ << "  betti " << join_numbers(report.source.betti) << "  morse betti " << join_numbers(report.morse.betti)
           << "\n";
      out_ << "  m = " << join_numbers(report.morse_counts) << "  lambda = " << join_numbers(report.cell_counts)
           << "  euler " << report.source.euler << "\n";
      for (const auto& c : report.checks) out_ << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << "\n";
      out_ << "  note: " << report.note << "\n";
    }
    return report.passed() ? exit_ok : exit_property;
  }

  int nccw() {
    const auto complex = load_complex();
    const auto d = cfg_.function_path.empty()
                       ? commutative_nccw(complex)
                       : nccw_from_morse(complex, load_function(), parse_convention(cfg_.convention));
    print_descriptor(d);
    return exit_ok;
  }

  int nccw_check() {
    const auto d = descriptor_from_json(load_json_file(cfg_.descriptor_path));
    const auto report = validate_descriptor(d);
    if (json_output()) {
      out_ << to_json(report).dump(2) << "\n";
    } else {
      out_ << (report.ok() ? "valid descriptor" : "invalid descriptor") << "\n";
      for (const auto& i : report.issues) out_ << "  " << i << "\n";
    }
    return report.ok() ? exit_ok : exit_property;
  }

  int gen_morse() {
    const auto lattice = chain_lattice(load_complex());
    if (lattice.empty()) throw invalid_input_error("cannot generate a Morse function on an empty complex");
    const auto f = generate_morse(lattice, cfg_.seed);
    if (json_output()) {
      out_ << to_json(f).dump(2) << "\n";
    } else {
      for (const auto& c : lattice.chains()) out_ << c.id << " " << to_string(f.values.at(c.id)) << "\n";
    }
    return exit_ok;
  }

  int poset_closure() {
    const auto poset = poset_from_json(load_json_file(cfg_.poset_path));
    const auto subset = subset_from_json(load_json_file(cfg_.subset_path));
    const auto closed = closure(poset, subset);
    const bool absorbing = is_absorbing(poset, subset);
    if (json_output()) {
      out_ << json{{"closure", std::vector<std::string>(closed.begin(), closed.end())}, {"absorbing", absorbing}}.dump(2)
           << "\n";
    } else {
      out_ << "closure {" << join(std::vector<std::string>(closed.begin(), closed.end())) << "}\n"
           << "absorbing: " << (absorbing ? "yes" : "no") << "\n";
    }
    return exit_ok;
  }

 private:
  CellComplex load_complex() const { return complex_from_json(load_json_file(cfg_.complex_path)); }
  MorseFunction load_function() const { return morse_function_from_json(load_json_file(cfg_.function_path)); }

  void print_descriptor(const NCCWDescriptor& d) {
    if (json_output()) {
      out_ << to_json(d).dump(2) << "\n";
      return;
    }
    for (const auto& level : d.levels) {
      std::vector<std::string> fiber;
      for (int n : level.fiber.multiplicities) fiber.push_back(std::to_string(n));
      out_ << level.algebra() << ": fiber (" << join(fiber) << ")  lambda " << level.lambda << "\n";
      for (const auto& [cell, targets] : level.attaching) out_ << "  " << cell << " attaches to " << join(targets) << "\n";
    }
    for (const auto& n : d.notes) out_ << "note: " << n << "\n";
  }

  const RunConfig& cfg_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Chain lattices, modified Morse functions, homology and NCCW descriptors of finite cell complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::function<int(Commands&)> action;
  auto command = [&](const char* name, const char* help, std::function<int(Commands&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* validate = command("validate", "Validate a complex file", &Commands::validate);
  validate->add_option("complex", cfg.complex_path)->required();

  auto* chains = command("chains", "Print the chain lattice of a complex", &Commands::chains);
  chains->add_option("complex", cfg.complex_path)->required();
  chains->add_flag("--emit-dot", cfg.emit_dot, "Print the Hasse diagram as Graphviz dot");

  auto* check = command("morse-check", "Check the modified Morse conditions", &Commands::morse_check);
  check->add_option("complex", cfg.complex_path)->required();
  check->add_option("function", cfg.function_path)->required();

  auto* critical = command("critical", "List critical chains per order", &Commands::critical);
  critical->add_option("complex", cfg.complex_path)->required();
  critical->add_option("function", cfg.function_path)->required();
  critical->add_option("--convention", cfg.convention, "paper (>=, <=) or forman (>, <)")
      ->check(CLI::IsMember({"paper", "forman"}));

  auto* homology = command("homology", "Integer homology of a complex", &Commands::homology);
  homology->add_option("complex", cfg.complex_path)->required();

  auto* collapse = command("collapse", "Collapse along a Morse function and compare homology", &Commands::collapse);
  collapse->add_option("complex", cfg.complex_path)->required();
  collapse->add_option("function", cfg.function_path)->required();

  auto* nccw = command("nccw", "Emit an NCCW decomposition descriptor", &Commands::nccw);
  nccw->add_option("complex", cfg.complex_path)->required();
  nccw->add_option("function", cfg.function_path);
  nccw->add_option("--convention", cfg.convention, "paper or forman")->check(CLI::IsMember({"paper", "forman"}));

  auto* nccw_check = command("nccw-check", "Validate a descriptor file", &Commands::nccw_check);
  nccw_check->add_option("descriptor", cfg.descriptor_path)->required();

  auto* gen = command("gen-morse", "Generate a modified Morse function", &Commands::gen_morse);
  gen->add_option("complex", cfg.complex_path)->required();
  gen->add_option("--seed", cfg.seed, "Generator seed");

  auto* poset = command("poset-closure", "Closure of a subset of a finite poset", &Commands::poset_closure);
  poset->add_option("poset", cfg.poset_path)->required();
  poset->add_option("subset", cfg.subset_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  Commands commands(cfg, out);
  try {
    return action(commands);
  } catch (const invalid_input_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_invalid;
  } catch (const precondition_error& e) {
    err << "precondition failed: " << e.what() << "\n";
    return exit_property;
  } catch (const invalid_morse_error& e) {
    err << "invalid Morse function: " << e.what() << "\n";
    return exit_property;
  }
}

}  // namespace ncmorse
