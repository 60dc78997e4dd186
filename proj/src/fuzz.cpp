#include "catquot/fuzz.hpp"

#include "catquot/complex.hpp"
#include "catquot/conditions.hpp"
#include "catquot/error.hpp"
#include "catquot/formulas.hpp"
#include "catquot/homology.hpp"
#include "catquot/mobius.hpp"
#include "catquot/named.hpp"
#include "catquot/quotient.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

namespace catquot {

namespace {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

/// Uniform in [0, n); plain modulo keeps the stream identical across
/// standard libraries.
int draw(Rng &rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

bool chance(Rng &rng, int percent) { return draw(rng, 100) < percent; }

using Perm = std::vector<int>;

Perm compose_perm(const Perm &f, const Perm &g) {
  Perm h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    h[i] = f[g[i]];
  return h;
}

/// Closure of the generators, or empty if it exceeds `bound` elements.
std::set<Perm> closure(const std::vector<Perm> &gens, int n, int bound) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> group{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto &e : frontier)
      for (const auto &s : gens) {
        Perm p = compose_perm(s, e);
        if (group.insert(p).second) {
          if (static_cast<int>(group.size()) > bound)
            return {};
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return group;
}

std::string join(const std::vector<int> &v) {
  std::string s;
  for (int x : v)
    s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

} // namespace

std::vector<std::vector<int>> poset_automorphisms(const Poset &p) {
  const int n = p.size();
  Perm perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (p.leq(a, b) != p.leq(perm[a], perm[b])) {
          ok = false;
          break;
        }
    if (ok)
      out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Instance random_instance(std::uint64_t seed, int index, const FuzzConfig &config) {
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(index), 0);
  const int max_n = std::max(1, config.max_elements);
  const int n = chance(rng, 15) ? 1 + draw(rng, max_n) : std::max(1, max_n - draw(rng, 4));
  const int levels = n == 1 ? 1 : 2 + draw(rng, std::min(n, 4) - 1);

  // ids grow with the level; every level is nonempty
  std::vector<int> level(n);
  for (int x = 0; x < n; ++x)
    level[x] = x < levels ? x : draw(rng, levels);
  std::sort(level.begin(), level.end());

  // layered posets (level pairs all or nothing) carry large symmetry groups
  const bool layered = chance(rng, 50);
  std::vector<std::pair<int, int>> rel;
  for (int hi = 1; hi < levels; ++hi)
    for (int lo = 0; lo < hi; ++lo) {
      const bool adjacent = hi == lo + 1;
      const bool complete = chance(rng, layered ? (adjacent ? 75 : 20) : (adjacent ? 35 : 10));
      const int percent = layered ? 0 : (adjacent ? 50 : 15);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (level[a] == hi && level[b] == lo && (complete || chance(rng, percent)))
            rel.emplace_back(a, b);
    }
  Instance inst{Poset::from_relations(n, rel), {}};

  auto autos = poset_automorphisms(inst.poset);
  autos.erase(autos.begin()); // identity
  if (autos.empty() || chance(rng, 5))
    return inst;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Perm> gens;
    const int k = 1 + draw(rng, 2);
    for (int j = 0; j < k; ++j)
      gens.push_back(autos[draw(rng, static_cast<int>(autos.size()))]);
    if (!closure(gens, n, config.max_group_order).empty()) {
      inst.generators = std::move(gens);
      return inst;
    }
  }
  return inst;
}

bool InstanceReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome &c) { return c.holds; });
}

std::string InstanceReport::text() const {
  std::string s = "instance " + std::to_string(index) + " elements " +
                  std::to_string(instance.poset.size()) + " covers " +
                  std::to_string(instance.poset.covers().size()) + " group " +
                  std::to_string(group_order) + (ok() ? " ok" : " FAILED") + "\n";
  for (const auto &c : checks) {
    s += "  " + c.name + (c.holds ? " ok" : " VIOLATED");
    if (!c.detail.empty())
      s += " " + c.detail;
    s += "\n";
  }
  return s;
}

namespace {

class Battery {
public:
  Battery(const Instance &inst, InstanceReport &report, std::uint64_t salt)
      : inst_(inst), pa_(poset_action(inst.poset, inst.generators)),
        k_(*pa_.category), a_(pa_.action), report_(report),
        rng_(make_rng(salt, static_cast<std::uint64_t>(report.index), 1)) {
    report_.group_order = a_.order();
  }

  void run() {
    try {
      lambda_checks();
      family_checks();
      quotient_checks();
      subdivision_checks();
      fixed_point_checks();
      formula_checks();
      heredity_checks();
    } catch (const Error &e) {
      add("battery-completes", false, e.what());
    }
  }

private:
  void add(std::string name, bool holds, std::string detail = {}) {
    report_.checks.push_back({std::move(name), holds, std::move(detail)});
  }

  void lambda_checks() {
    try {
      lambda_ = canonical_lambda(k_, a_);
    } catch (const InternalError &e) {
      add("lambda-surjective", false, e.what());
      throw;
    }
    const auto dims = lambda_report(lambda_);
    bool surjective = true;
    for (const auto &d : dims)
      surjective = surjective && d.surjective;
    add("lambda-surjective", surjective);

    const int top = std::max(2, longest_chain(k_) + 1);
    c_ = check_C(k_, a_);
    for (int t = 2; t <= top; ++t) {
      const ConditionReport par = check_Ct(k_, a_, t);
      const bool inj = injective_on_skeleton(dims, t);
      add("ct-iff-lambda-injective t=" + std::to_string(t), par.verdict == inj,
          par.verdict == inj ? "" : "Ct=" + std::to_string(par.verdict) +
                                        " injective=" + std::to_string(inj));
      const ConditionReport ser = check_Ct_serial(k_, a_, t);
      add("ct-parallel-matches-serial t=" + std::to_string(t),
          par.verdict == ser.verdict && par.witness == ser.witness);
    }
    r_ = check_R(k_, a_);
    const bool inj1 = injective_on_skeleton(dims, 1);
    add("r-iff-lambda-injective-edges", r_.verdict == inj1);
  }

  void family_checks() {
    const std::pair<const char *, SubgroupFamily> families[] = {
        {"stabilizer", stabilizer_family(a_)},
        {"trivial", trivial_family(a_)},
        {"upset", upset_family(a_)}};
    for (const auto &[name, fam] : families) {
      if (!check_S(k_, a_, fam).verdict)
        continue;
      passing_families_.emplace_back(name, fam);
      add(std::string("s-implies-c ") + name, c_.verdict);
    }
  }

  void quotient_checks() {
    const QuotientCategory &q = lambda_.quotient;
    if (is_horizontal(a_).horizontal && is_loopfree(k_).loopfree)
      add("horizontal-loopfree-quotient", is_loopfree(q.category).loopfree);
    const bool sr = check_SR(k_, a_).verdict;
    const bool poset = is_quotient_poset(q);
    add("sr-iff-regular-with-poset-quotient", sr == (r_.verdict && poset));
    add("sr-iff-srp", sr == check_SRP(inst_.poset, a_).verdict);
    if (poset)
      add("poset-quotient-matches-category-quotient",
          poset_quotient(inst_.poset, a_) == underlying_order(q.category));
  }

  void subdivision_checks() {
    const SubdivisionAction bd = subdivide(inst_.poset, a_);
    const PosetAction &sub = bd.induced;
    add("subdivision-satisfies-s",
        check_S(*sub.category, sub.action, trivial_family(sub.action)).verdict);
    if (is_horizontal(a_).horizontal)
      add("subdivision-quotient-is-poset",
          is_quotient_poset(quotient_category(*sub.category, sub.action)));
  }

  void fixed_point_checks() {
    if (!is_horizontal(a_).horizontal)
      return;
    const Nerve &n = lambda_.nerve;
    for (GroupElement g = 0; g < a_.order(); ++g) {
      const Subcategory fixed = fixed_subcategory(k_, a_.element(g));
      const Nerve fn = nerve(fixed.category);
      const Subcomplex sc = fixed_subcomplex(n.complex, induced_map(n, a_.element(g)));
      bool same = fn.complex == sc.complex &&
                  fn.chains.size() == sc.simplices.size();
      for (std::size_t d = 0; same && d < fn.chains.size(); ++d) {
        same = fn.chains[d].size() == sc.simplices[d].size();
        for (std::size_t s = 0; same && s < fn.chains[d].size(); ++s) {
          std::vector<int> parent;
          for (int v : fn.chains[d][s])
            parent.push_back(d == 0 ? fixed.objects[v] : fixed.morphisms[v]);
          same = parent == n.chains[d][sc.simplices[d][s]];
        }
      }
      add("fixed-nerve-is-fixed-subcomplex g=" + std::to_string(g), same);
    }
  }

  void formula_checks() {
    const auto euler = burnside_euler(a_);
    add("euler-average", euler.equal,
        "left=" + to_string(euler.left) + " right=" + to_string(euler.right));

    const Integer mu = mobius(k_);
    add("mobius-recursion", mu == mobius_recursive(k_).bottom_to_top,
        "mobius=" + to_string(mu));
    const FiniteCategory &qc = lambda_.quotient.category;
    if (is_loopfree(qc).loopfree)
      add("mobius-recursion-quotient",
          mobius(qc) == mobius_recursive(qc).bottom_to_top);

    if (!c_.verdict) {
      bool carries = false;
      try {
        mobius_quotient(a_);
      } catch (const ConditionRefused &e) {
        carries = e.report().witness == c_.witness;
      }
      add("refusal-carries-c-witness", carries);
      return;
    }
    const auto m = mobius_quotient(a_);
    add("mobius-average", m.equal,
        "left=" + to_string(m.left) + " right=" + to_string(m.right));
    for (int i = 0; i <= lambda_.nerve.complex.dimension(); ++i) {
      const auto b = betti_multiplicity(a_, i);
      add("betti-multiplicity i=" + std::to_string(i), b.equal,
          "left=" + to_string(b.left) + " right=" + to_string(b.right));
    }
  }

  void heredity_checks() {
    const Partition orbits = object_orbits(a_);
    if (c_.verdict) {
      std::vector<ObjectId> objs;
      for (const auto &orbit : orbits.classes)
        if (chance(rng_, 50))
          objs.insert(objs.end(), orbit.begin(), orbit.end());
      std::sort(objs.begin(), objs.end());
      const RestrictedAction r = restrict_action(a_, objs);
      add("c-restricts-to-stable-subset", check_C(r.action.target(), r.action).verdict,
          "objects " + join(objs));
    }
    for (const auto &[name, fam] : passing_families_)
      for (ObjectId x = 0; x < k_.n_objects(); ++x) {
        const ActionGroup stab = stabilizer_of_object(a_, x);
        std::vector<ObjectId> down;
        for (ObjectId y = 0; y < k_.n_objects(); ++y)
          if (inst_.poset.leq(y, x))
            down.push_back(y);
        const RestrictedAction r = restrict_action(stab, down);
        SubgroupFamily local(r.sub.category.n_morphisms());
        bool inside = true;
        for (std::size_t j = 0; j < local.size(); ++j) {
          for (GroupElement g : fam[r.sub.morphisms[j]]) {
            const auto h = stab.find(a_.element(g));
            if (!h) {
              inside = false;
              continue;
            }
            local[j].push_back(r.element_image[*h]);
          }
          std::sort(local[j].begin(), local[j].end());
          local[j].erase(std::unique(local[j].begin(), local[j].end()), local[j].end());
        }
        const std::string label =
            std::string("s-restricts-to-downset ") + name + " x=" + std::to_string(x);
        if (!inside) {
          add(label, false, "family member outside Stab(x)");
          continue;
        }
        add(label, check_S(r.sub.category, r.action, local).verdict);
      }
  }

  const Instance &inst_;
  PosetAction pa_;
  const FiniteCategory &k_;
  const ActionGroup &a_;
  InstanceReport &report_;
  Rng rng_;
  CanonicalLambda lambda_;
  ConditionReport c_;
  ConditionReport r_;
  std::vector<std::pair<std::string, SubgroupFamily>> passing_families_;
};

} // namespace

InstanceReport run_battery(const Instance &inst, int index, std::uint64_t salt) {
  InstanceReport report;
  report.index = index;
  report.instance = inst;
  Battery(inst, report, salt).run();
  return report;
}

FuzzSummary run_fuzz(const FuzzConfig &config) {
  FuzzSummary summary;
  const int count = std::max(0, config.instances);
  summary.reports.resize(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k)
    summary.reports[k] =
        run_battery(random_instance(config.seed, k, config), k, config.seed);

  for (const auto &r : summary.reports) {
    if (r.ok())
      ++summary.passed;
    for (const auto &c : r.checks) {
      // fold per-level and per-element suffixes into one tally line
      const std::string key = c.name.substr(0, c.name.find(' '));
      auto &t = summary.tally[key];
      ++t.evaluated;
      if (!c.holds)
        ++t.violated;
    }
    if (!r.ok() && !config.replay_dir.empty()) {
      std::filesystem::create_directories(config.replay_dir);
      const std::string path = (std::filesystem::path(config.replay_dir) /
                                ("fuzz-" + std::to_string(config.seed) + "-" +
                                 std::to_string(r.index) + ".txt"))
                                   .string();
      std::ofstream(path) << format_instance(r.instance);
      summary.replay_files.push_back(path);
    }
  }
  return summary;
}

} // namespace catquot
