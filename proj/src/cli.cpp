#include "catquot/cli.hpp"

#include "catquot/complex.hpp"
#include "catquot/conditions.hpp"
#include "catquot/error.hpp"
#include "catquot/formulas.hpp"
#include "catquot/fuzz.hpp"
#include "catquot/homology.hpp"
#include "catquot/mobius.hpp"
#include "catquot/named.hpp"
#include "catquot/quotient.hpp"
#include "catquot/textio.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <optional>

namespace catquot::cli {

namespace {

struct Options {
  bool machine = false;
  std::optional<int> max_dim;
  std::uint64_t seed = 1;

  std::string category, poset, action, family, lattice;
  std::string check = "c";
  int t = 2;
  std::string family_builtin;
  std::string identity = "euler";
  int i = 0;
  std::string of = "nerve";
  bool list = false;

  int instances = 100;
  int max_elements = 7;
  int max_group_order = 8;
  std::string replay_dir;
  std::string replay;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<int> &v) {
  std::string s;
  for (int x : v)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string first_violation(const ValidationReport &r) {
  const Violation &v = r.violations.front();
  return v.law + (v.witness.empty() ? "" : " (witness " + join(v.witness) + ")");
}

/// A category (possibly from a poset) and an optional action on it.
struct Loaded {
  std::optional<Poset> poset;
  std::shared_ptr<const FiniteCategory> category;
  std::optional<ActionGroup> action;
};

std::vector<CatAutomorphism> load_generators(const Options &o, const FiniteCategory &c) {
  auto gens = parse_generators(read_file(o.action), c);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const ValidationReport r = validate_automorphism(c, gens[k]);
    if (!r.ok())
      throw InputError("generator " + std::to_string(k) + " is not an automorphism: " +
                       first_violation(r));
  }
  return gens;
}

Loaded load(const Options &o, bool need_action) {
  if (o.category.empty() == o.poset.empty())
    throw InputError("give exactly one of --category and --poset");
  Loaded l;
  if (!o.poset.empty()) {
    l.poset = parse_poset(read_file(o.poset));
    l.category = std::make_shared<const FiniteCategory>(category_from_poset(*l.poset));
  } else {
    auto c = parse_category(read_file(o.category));
    const ValidationReport r = validate_category(c);
    if (!r.ok())
      throw InputError("invalid category: " + first_violation(r));
    l.category = std::make_shared<const FiniteCategory>(std::move(c));
  }
  if (!o.action.empty())
    l.action = generate_action(l.category, load_generators(o, *l.category));
  else if (need_action)
    throw InputError("this command needs --action");
  return l;
}

const ActionGroup &action_or_trivial(Loaded &l) {
  if (!l.action)
    l.action = generate_action(l.category, {});
  return *l.action;
}

void print_condition(std::ostream &out, const ConditionReport &r) {
  out << r.condition << (r.verdict ? " PASS" : " FAIL");
  if (!r.verdict) {
    if (r.t)
      out << " t=" << *r.t;
    if (!r.detail.empty())
      out << " " << r.detail;
    if (!r.witness.empty())
      out << " witness " << join(r.witness);
  }
  out << '\n';
}

void print_identity(std::ostream &out, const IdentityReport &r) {
  out << "identity " << r.name << " left=" << to_string(r.left)
      << " right=" << to_string(r.right) << " equal=" << yes_no(r.equal) << '\n';
  for (const auto &b : r.breakdown)
    out << "  " << b << '\n';
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options &o, std::ostream &out) {
  if (o.category.empty() == o.poset.empty())
    throw InputError("give exactly one of --category and --poset");
  std::shared_ptr<const FiniteCategory> c;
  if (!o.poset.empty()) {
    c = std::make_shared<const FiniteCategory>(category_from_poset(parse_poset(read_file(o.poset))));
  } else {
    auto parsed = parse_category(read_file(o.category));
    const ValidationReport r = validate_category(parsed);
    for (const auto &v : r.violations)
      out << "violation " << v.law << (v.witness.empty() ? "" : " witness " + join(v.witness))
          << '\n';
    if (!r.ok())
      return kExitInput;
    c = std::make_shared<const FiniteCategory>(std::move(parsed));
  }
  out << "category ok objects " << c->n_objects() << " morphisms " << c->n_morphisms()
      << '\n';
  if (!o.action.empty()) {
    const auto gens = parse_generators(read_file(o.action), *c);
    bool ok = true;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const ValidationReport r = validate_automorphism(*c, gens[k]);
      for (const auto &v : r.violations)
        out << "violation generator " << k << " " << v.law
            << (v.witness.empty() ? "" : " witness " + join(v.witness)) << '\n';
      ok = ok && r.ok();
    }
    if (!ok)
      return kExitInput;
    out << "action ok order " << generate_action(c, gens).order() << '\n';
  }
  return kExitOk;
}

int cmd_quotient(const Options &o, std::ostream &out) {
  Loaded l = load(o, true);
  const QuotientCategory q = quotient_category(*l.category, *l.action);
  out << format_quotient(q);
  out << "quotient-is-poset " << yes_no(is_quotient_poset(q)) << '\n';
  if (l.poset) {
    try {
      out << "poset-quotient\n" << format_poset(poset_quotient(*l.poset, *l.action));
    } catch (const InputError &e) {
      out << "poset-quotient none: " << e.what() << '\n';
    }
  }
  return kExitOk;
}

int cmd_conditions(const Options &o, std::ostream &out) {
  Loaded l = load(o, true);
  const FiniteCategory &c = *l.category;
  const ActionGroup &a = *l.action;
  ConditionReport r;
  if (o.check == "r") {
    r = check_R(c, a);
  } else if (o.check == "c") {
    r = check_C(c, a);
    if (!o.machine)
      for (const auto &level : r.per_level)
        print_condition(out << "  ", level);
  } else if (o.check == "ct") {
    r = check_Ct(c, a, o.t);
  } else if (o.check == "s") {
    SubgroupFamily fam;
    if (!o.family.empty())
      fam = parse_family(read_file(o.family), a);
    else if (o.family_builtin == "stabilizer")
      fam = stabilizer_family(a);
    else if (o.family_builtin == "upset")
      fam = upset_family(a);
    else
      fam = trivial_family(a);
    r = check_S(c, a, fam);
  } else if (o.check == "strong-s") {
    r = check_strong_S(c, a);
  } else if (o.check == "sr") {
    r = check_SR(c, a);
  } else {
    if (!l.poset)
      throw InputError("--check srp needs --poset");
    r = check_SRP(*l.poset, a);
  }
  print_condition(out, r);
  return r.verdict ? kExitOk : kExitFailed;
}

DeltaComplex complex_for(const Options &o, Loaded &l) {
  if (o.of == "nerve")
    return nerve(*l.category, o.max_dim).complex;
  const ActionGroup &a = action_or_trivial(l);
  if (o.of == "orbits")
    return nerve_quotient(*l.category, a, o.max_dim).complex;
  return nerve(quotient_category(*l.category, a).category, o.max_dim).complex;
}

int cmd_nerve(const Options &o, std::ostream &out) {
  Loaded l = load(o, false);
  if (o.list && o.of == "nerve") {
    const Nerve n = nerve(*l.category, o.max_dim);
    for (std::size_t d = 0; d < n.chains.size(); ++d)
      for (std::size_t s = 0; s < n.chains[d].size(); ++s)
        out << "simplex " << d << ' ' << s << " chain " << join(n.chains[d][s])
            << (d > 0 ? " faces " + join(n.complex.faces(static_cast<int>(d), static_cast<int>(s)))
                      : std::string())
            << '\n';
  }
  const DeltaComplex dc = complex_for(o, l);
  const auto f = dc.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d)
    out << "simplices " << d << ' ' << f[d] << '\n';
  out << "dimension " << dc.dimension() << '\n';
  return kExitOk;
}

int cmd_homology(const Options &o, std::ostream &out) {
  Loaded l = load(o, false);
  const HomologyResult h = homology(complex_for(o, l));
  for (std::size_t d = 0; d < h.betti.size(); ++d) {
    out << "betti " << d << ' ' << h.betti[d] << '\n';
    if (!h.torsion[d].empty()) {
      out << "torsion " << d;
      for (const auto &v : h.torsion[d])
        out << ' ' << v;
      out << '\n';
    }
  }
  out << "euler " << h.euler << '\n';
  out << "reduced-euler " << h.reduced_euler << '\n';
  return kExitOk;
}

int cmd_lambda(const Options &o, std::ostream &out) {
  Loaded l = load(o, true);
  bool bijective = true;
  for (const auto &d : lambda_skeleton_report(*l.category, *l.action, o.max_dim)) {
    out << "lambda " << d.dim << " surjective=" << yes_no(d.surjective)
        << " injective=" << yes_no(d.injective) << '\n';
    bijective = bijective && d.surjective && d.injective;
  }
  return bijective ? kExitOk : kExitFailed;
}

int cmd_mobius(const Options &o, std::ostream &out) {
  Loaded l = load(o, false);
  FiniteCategory target = *l.category;
  if (l.action)
    target = quotient_category(*l.category, *l.action).category;
  const Integer mu = mobius(target);
  const MobiusTable table = mobius_recursive(target);
  out << "mobius " << mu << '\n';
  if (!o.machine)
    for (std::size_t x = 0; x < table.from_bottom.size(); ++x)
      out << "  mu-from-bottom " << x << ' ' << table.from_bottom[x] << '\n';
  out << "mobius-recursive " << table.bottom_to_top << '\n';
  return mu == table.bottom_to_top ? kExitOk : kExitFailed;
}

int cmd_formulas(const Options &o, std::ostream &out) {
  IdentityReport r;
  try {
    if (o.identity == "gm") {
      if (o.lattice.empty() || o.action.empty())
        throw InputError("--identity gm needs --lattice and --action");
      const LabeledLattice lat = parse_lattice(read_file(o.lattice));
      auto c = std::make_shared<const FiniteCategory>(category_from_poset(lat.poset));
      const ActionGroup a = generate_action(c, load_generators(o, *c));
      r = gm_quotient(lat, a, o.i);
    } else {
      Loaded l = load(o, false);
      const ActionGroup &a = action_or_trivial(l);
      if (o.identity == "euler")
        r = burnside_euler(a);
      else if (o.identity == "mobius")
        r = mobius_quotient(a);
      else
        r = betti_multiplicity(a, o.i);
    }
  } catch (const ConditionRefused &e) {
    out << "identity " << o.identity << " REFUSED ";
    print_condition(out, e.report());
    return kExitFailed;
  }
  print_identity(out, r);
  return r.equal ? kExitOk : kExitFailed;
}

int cmd_subdivide(const Options &o, std::ostream &out) {
  if (o.poset.empty())
    throw InputError("subdivide needs --poset");
  Loaded l = load(o, false);
  const SubdivisionAction bd = subdivide(*l.poset, action_or_trivial(l));
  out << format_poset(bd.subdivision.poset);
  for (std::size_t i = 0; i < bd.subdivision.chains.size(); ++i)
    out << "chain " << i << ' ' << join(bd.subdivision.chains[i]) << '\n';
  if (l.action) {
    const auto &a = bd.induced.action;
    const auto s = check_S(*bd.induced.category, a, trivial_family(a));
    print_condition(out, s);
    out << "quotient-is-poset "
        << yes_no(is_quotient_poset(quotient_category(*bd.induced.category, a))) << '\n';
  }
  return kExitOk;
}

int cmd_fuzz(const Options &o, std::ostream &out) {
  if (!o.replay.empty()) {
    const Instance inst = parse_instance(read_file(o.replay));
    const InstanceReport r = run_battery(inst, 0, o.seed);
    out << r.text();
    return r.ok() ? kExitOk : kExitFailed;
  }
  FuzzConfig cfg;
  cfg.seed = o.seed;
  cfg.instances = o.instances;
  cfg.max_elements = o.max_elements;
  cfg.max_group_order = o.max_group_order;
  cfg.replay_dir = o.replay_dir;
  const FuzzSummary s = run_fuzz(cfg);
  for (const auto &r : s.reports)
    if (o.machine || !r.ok())
      out << r.text();
  for (const auto &[name, t] : s.tally)
    out << "property " << name << " evaluated " << t.evaluated << " violated " << t.violated
        << '\n';
  for (const auto &f : s.replay_files)
    out << "replay " << f << '\n';
  out << "fuzz " << s.passed << '/' << s.reports.size() << " equivalences hold\n";
  return s.passed == static_cast<int>(s.reports.size()) ? kExitOk : kExitFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Quotients of finite categories by group actions"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--machine", o.machine, "Only machine-readable report lines");
  app.add_option("--max-dim", o.max_dim, "Truncate nerves at this dimension");
  app.add_option("--seed", o.seed, "Seed for generated instances");

  const auto inputs = [&](CLI::App *sub) {
    sub->add_option("--category", o.category, "Category file");
    sub->add_option("--poset", o.poset, "Poset file");
    sub->add_option("--action", o.action, "Action generators file");
  };
  const auto globals = [&](CLI::App *sub) {
    sub->fallthrough();
    return sub;
  };

  auto *validate = globals(app.add_subcommand("validate", "Check category and action files"));
  inputs(validate);
  auto *quotient = globals(app.add_subcommand("quotient", "Compute K/G"));
  inputs(quotient);
  auto *conditions = globals(app.add_subcommand("conditions", "Check a condition on an action"));
  inputs(conditions);
  conditions->add_option("--check", o.check, "r|c|ct|s|strong-s|sr|srp")
      ->check(CLI::IsMember({"r", "c", "ct", "s", "strong-s", "sr", "srp"}));
  conditions->add_option("--t", o.t, "Level for --check ct")->check(CLI::Range(2, 1000));
  conditions->add_option("--family", o.family, "Subgroup family file for --check s");
  conditions->add_option("--family-builtin", o.family_builtin,
                         "Generated family for --check s when no file is given")
      ->check(CLI::IsMember({"trivial", "stabilizer", "upset"}));
  auto *nerve_cmd = globals(app.add_subcommand("nerve", "Simplex counts of a nerve"));
  inputs(nerve_cmd);
  nerve_cmd->add_option("--of", o.of, "nerve|orbits|quotient")
      ->check(CLI::IsMember({"nerve", "orbits", "quotient"}));
  nerve_cmd->add_flag("--list", o.list, "List the chains of the nerve");
  auto *homology_cmd = globals(app.add_subcommand("homology", "Integer homology"));
  inputs(homology_cmd);
  homology_cmd->add_option("--of", o.of, "nerve|orbits|quotient")
      ->check(CLI::IsMember({"nerve", "orbits", "quotient"}));
  auto *lambda = globals(app.add_subcommand("lambda-check", "Injectivity of λ per dimension"));
  inputs(lambda);
  auto *mobius_cmd = globals(app.add_subcommand("mobius", "Möbius function"));
  inputs(mobius_cmd);
  auto *formulas = globals(app.add_subcommand("formulas", "Evaluate both sides of an identity"));
  inputs(formulas);
  formulas->add_option("--identity", o.identity, "euler|mobius|betti|gm")
      ->check(CLI::IsMember({"euler", "mobius", "betti", "gm"}));
  formulas->add_option("--i", o.i, "Homology dimension");
  formulas->add_option("--lattice", o.lattice, "Labeled lattice file");
  auto *subdivide_cmd = globals(app.add_subcommand("subdivide", "Barycentric subdivision"));
  inputs(subdivide_cmd);
  auto *fuzz = globals(app.add_subcommand("fuzz", "Randomized property battery"));
  fuzz->add_option("--instances", o.instances, "Number of instances")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-elements", o.max_elements, "Largest poset")->check(CLI::Range(1, 8));
  fuzz->add_option("--max-group-order", o.max_group_order, "Largest group")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--replay-dir", o.replay_dir, "Directory for failing instances");
  fuzz->add_option("--replay", o.replay, "Rerun the battery on one saved instance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const CLI::App *sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "validate")
      return cmd_validate(o, out);
    if (name == "quotient")
      return cmd_quotient(o, out);
    if (name == "conditions")
      return cmd_conditions(o, out);
    if (name == "nerve")
      return cmd_nerve(o, out);
    if (name == "homology")
      return cmd_homology(o, out);
    if (name == "lambda-check")
      return cmd_lambda(o, out);
    if (name == "mobius")
      return cmd_mobius(o, out);
    if (name == "formulas")
      return cmd_formulas(o, out);
    if (name == "subdivide")
      return cmd_subdivide(o, out);
    return cmd_fuzz(o, out);
  } catch (const InternalError &e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

} // namespace catquot::cli
