#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "eacat/ea_format.hpp"
#include "eacat/effect_algebra.hpp"
#include "eacat/error.hpp"
#include "eacat/generators.hpp"
#include "eacat/hilbert.hpp"
#include "eacat/mat_format.hpp"
#include "eacat/omega.hpp"
#include "eacat/simplex.hpp"

namespace eacat::cli {

namespace {

struct Globals {
  std::string format = "full";
  bool force = false;
  unsigned jobs = 1;

  VerifyOptions opts() const { return {jobs, force}; }
};

int emit(const AxiomReport& r, const Globals& g, std::ostream& out) {
  if (g.format == "terse")
    r.print_terse(out);
  else
    r.print(out);
  return r.all_passed() ? kExitPass : kExitFail;
}

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty() || s[0] == '-')
    throw Error(std::string("bad ") + what + " '" + s + "'");
  return v;
}

ElementId lookup(const EffectAlgebra& a, const std::string& label) {
  auto e = a.find(label);
  if (!e)
    throw Error("unknown element '" + label + "'");
  return *e;
}

int cmd_check(const std::string& file, const Globals& g, std::ostream& out) {
  EffectAlgebra a = load_ea_file(file);
  AxiomReport r = check_effect_axioms(a, g.opts());
  if (r.all_passed())
    r.append(check_derived_properties(a, g.opts()));
  return emit(r, g, out);
}

int cmd_derive(const std::string& file, const Globals& g, std::ostream& out) {
  EffectAlgebra a = load_ea_file(file);
  AxiomReport ax = check_effect_axioms(a, g.opts());
  if (!ax.all_passed())
    return emit(ax, g, out);
  DPoset d = derive_dposet(a);
  if (g.format != "terse") {
    out << "# top " << d.name(d.top()) << " bottom " << d.name(d.bottom()) << '\n';
    for (std::size_t y = 0; y < d.size(); ++y)
      for (std::size_t x = 0; x < d.size(); ++x)
        if (auto z = d.diff(id(y), id(x)))
          out << "# " << d.name(id(y)) << " - " << d.name(id(x)) << " = " << d.name(*z) << '\n';
  }
  AxiomReport r = check_dposet_axioms(d, g.opts());
  r.record("round-trip", effect_from_dposet(d).same_structure(a)
                             ? std::nullopt
                             : std::optional<Witness>(Witness{"sum table differs"}));
  return emit(r, g, out);
}

int cmd_gen(const std::vector<std::string>& args, std::ostream& out) {
  if (args.empty())
    throw Error("gen needs a kind: chain N | boolean N | product F1 F2 | interval F x y");
  const std::string& kind = args[0];
  auto want = [&](std::size_t n) {
    if (args.size() != n + 1)
      throw Error("gen " + kind + " takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "chain") {
    want(1);
    write_ea(out, chain(parse_size(args[1], "size")));
  } else if (kind == "boolean") {
    want(1);
    write_ea(out, boolean(parse_size(args[1], "atom count")));
  } else if (kind == "product") {
    want(2);
    if (args[1] == "-" && args[2] == "-")
      throw Error("only one operand can be read from stdin");
    write_ea(out, product(load_ea_file(args[1]), load_ea_file(args[2])));
  } else if (kind == "interval") {
    want(3);
    EffectAlgebra a = load_ea_file(args[1]);
    write_ea(out, interval(a, lookup(a, args[2]), lookup(a, args[3])).algebra);
  } else {
    throw Error("unknown gen kind '" + kind + "'");
  }
  return kExitPass;
}

int cmd_cells(const std::string& file, int level, bool count, const Globals& g, std::ostream& out) {
  omega::OmegaCategory C(load_ea_file(file));
  if (count) {
    out << C.count_cells(level, g.force) << '\n';
    return kExitPass;
  }
  for (const omega::Cell& c : C.enumerate_cells(level, g.force))
    out << C.label(c) << '\n';
  return kExitPass;
}

int cmd_hilbert(const std::string& kind, std::size_t dim, const std::string& seeds,
                const std::string& emitPath, const Globals& g, std::ostream& out) {
  ModelKind k;
  if (kind == "proj")
    k = ModelKind::Projection;
  else if (kind == "bound")
    k = ModelKind::Bounded;
  else
    throw Error("hilbert kind must be 'proj' or 'bound', got '" + kind + "'");
  std::size_t cap = g.force ? std::numeric_limits<std::size_t>::max() : kClosureCap;
  EffectModel m = extract_algebra(load_mat_file(seeds), k, dim, cap);
  if (emitPath.empty()) {
    out << "# " << m.elements.size() << " elements\n";
    write_ea(out, m.algebra);
    return kExitPass;
  }
  std::ofstream f(emitPath);
  if (!f)
    throw Error("cannot write " + emitPath);
  write_ea(f, m.algebra);
  if (g.format != "terse")
    out << "# " << m.elements.size() << " elements written to " << emitPath << '\n';
  return emit(check_effect_axioms(m.algebra, g.opts()), g, out);
}

int cmd_pullback(const std::string& file, const Globals& g, std::ostream& out) {
  EffectAlgebra a = load_ea_file(file);
  AxiomReport r = check_orthoalgebra(a);
  r.append(check_pullback_theorem(a, g.opts()));
  return emit(r, g, out);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite effect algebras, D-posets and their strict omega-categories", "eacat"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Report style")->check(CLI::IsMember({"full", "terse"}));
  app.add_flag("--force", g.force, "Override feasibility guards");
  app.add_option("--jobs", g.jobs, "Worker threads for verifiers")->check(CLI::Range(1u, 1024u));

  std::string file, kind, emitPath;
  std::vector<std::string> genArgs;
  int level = 0, maxLevel = 2, maxN = 6;
  std::size_t dim = 0;
  bool count = false, list = false;

  auto* check = app.add_subcommand("check", "Effect algebra axioms and derived laws");
  check->add_option("file", file, "Model file, - for stdin")->required();

  auto* derive = app.add_subcommand("derive", "Derived D-poset and its axioms");
  derive->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "Generate a model: chain N | boolean N | product F1 F2 | interval F x y");
  gen->add_option("args", genArgs)->required();

  auto* cells = app.add_subcommand("cells", "List or count the cells of one level");
  cells->add_option("file", file)->required();
  cells->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
  auto* countFlag = cells->add_flag("--count", count);
  cells->add_flag("--list", list)->excludes(countFlag);

  auto* verify = app.add_subcommand("verify", "Exhaustive omega-category laws");
  verify->add_option("file", file)->required();
  verify->add_option("--max-level", maxLevel)->check(CLI::NonNegativeNumber);

  auto* simplex = app.add_subcommand("simplex-check", "Augmented simplex category laws");
  simplex->add_option("--max-n", maxN)->check(CLI::Range(0, simplex::kMaxSimplexCheck));

  auto* hilbert = app.add_subcommand("hilbert", "Extract an effect algebra from operator seeds");
  hilbert->add_option("kind", kind, "proj or bound")->required()->check(CLI::IsMember({"proj", "bound"}));
  hilbert->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
  hilbert->add_option("--seeds", file)->required();
  hilbert->add_option("--emit-ea", emitPath);

  auto* pullback = app.add_subcommand("pullback", "Orthoalgebra test and the pullback square check");
  pullback->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0)
      return kExitPass;
    err << app.help();
    return kExitError;
  }

  if (g.force)
    err << "warning: --force disables feasibility guards; runs may take very long or exhaust memory\n";

  try {
    if (check->parsed())
      return cmd_check(file, g, out);
    if (derive->parsed())
      return cmd_derive(file, g, out);
    if (gen->parsed())
      return cmd_gen(genArgs, out);
    if (cells->parsed())
      return cmd_cells(file, level, count, g, out);
    if (verify->parsed())
      return emit(omega::verify_omega_laws(load_ea_file(file), maxLevel, g.opts()), g, out);
    if (simplex->parsed())
      return emit(simplex::check_simplex_laws(maxN), g, out);
    if (hilbert->parsed())
      return cmd_hilbert(kind, dim, file, emitPath, g, out);
    if (pullback->parsed())
      return cmd_pullback(file, g, out);
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << " (use --force to override)\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

} // namespace eacat::cli
