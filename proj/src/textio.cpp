#include "catquot/textio.hpp"

#include "catquot/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace catquot {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
        ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])))
        ++end;
      if (end > pos)
        l.words.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (!l.words.empty())
      out.push_back(std::move(l));
  }
  return out;
}

int to_int(const Line &l, std::size_t k) {
  if (k >= l.words.size())
    throw ParseError(l.number, "missing argument " + std::to_string(k));
  const auto w = l.words[k];
  int v = 0;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc{} || ptr != w.data() + w.size())
    throw ParseError(l.number, "expected an integer, got '" + std::string(w) + "'");
  return v;
}

void expect_args(const Line &l, std::size_t n) {
  if (l.words.size() != n + 1)
    throw ParseError(l.number, "'" + std::string(l.words[0]) + "' takes " +
                                   std::to_string(n) + " arguments");
}

void check_range(const Line &l, int v, int bound, const char *what) {
  if (v < 0 || v >= bound)
    throw ParseError(l.number, std::string(what) + " " + std::to_string(v) +
                                   " out of range [0, " + std::to_string(bound) + ")");
}

std::vector<int> int_list(const Line &l, std::size_t from) {
  std::vector<int> v;
  for (std::size_t k = from; k < l.words.size(); ++k)
    v.push_back(to_int(l, k));
  return v;
}

void check_permutation(const Line &l, const std::vector<int> &p, int n,
                       const char *what) {
  if (static_cast<int>(p.size()) != n)
    throw ParseError(l.number, std::string(what) + " permutation needs " +
                                   std::to_string(n) + " entries");
  std::vector<char> seen(n, 0);
  for (int v : p) {
    check_range(l, v, n, what);
    if (seen[v]++)
      throw ParseError(l.number, std::string(what) + " map is not a bijection");
  }
}

/// Poset declarations; returns false for lines of other kinds.
struct PosetBuilder {
  std::optional<int> n;
  std::vector<std::pair<int, int>> rel;

  bool take(const Line &l) {
    if (l.words[0] == "elements") {
      expect_args(l, 1);
      if (n)
        throw ParseError(l.number, "duplicate 'elements' line");
      n = to_int(l, 1);
      if (*n < 0)
        throw ParseError(l.number, "negative element count");
      return true;
    }
    if (l.words[0] == "rel") {
      expect_args(l, 2);
      if (!n)
        throw ParseError(l.number, "'rel' before 'elements'");
      const int a = to_int(l, 1), b = to_int(l, 2);
      check_range(l, a, *n, "element");
      check_range(l, b, *n, "element");
      rel.emplace_back(a, b);
      return true;
    }
    return false;
  }

  Poset build() const {
    if (!n)
      throw ParseError(0, "missing 'elements' line");
    return Poset::from_relations(*n, rel);
  }
};

[[noreturn]] void unknown(const Line &l) {
  throw ParseError(l.number, "unknown keyword '" + std::string(l.words[0]) + "'");
}

} // namespace

FiniteCategory parse_category(std::string_view text) {
  std::optional<int> n;
  std::map<int, Endpoints> mors;
  std::vector<std::tuple<MorphismId, MorphismId, MorphismId>> comps;
  std::vector<int> comp_lines;
  for (const Line &l : tokenize(text)) {
    if (l.words[0] == "objects") {
      expect_args(l, 1);
      if (n)
        throw ParseError(l.number, "duplicate 'objects' line");
      n = to_int(l, 1);
      if (*n < 0)
        throw ParseError(l.number, "negative object count");
    } else if (l.words[0] == "mor") {
      expect_args(l, 3);
      if (!n)
        throw ParseError(l.number, "'mor' before 'objects'");
      const int id = to_int(l, 1), s = to_int(l, 2), t = to_int(l, 3);
      if (id < *n)
        throw ParseError(l.number, "morphism ids below " + std::to_string(*n) +
                                       " are reserved for identities");
      check_range(l, s, *n, "object");
      check_range(l, t, *n, "object");
      if (!mors.emplace(id, Endpoints{s, t}).second)
        throw ParseError(l.number, "duplicate morphism id " + std::to_string(id));
    } else if (l.words[0] == "comp") {
      expect_args(l, 3);
      comps.emplace_back(to_int(l, 1), to_int(l, 2), to_int(l, 3));
      comp_lines.push_back(l.number);
    } else {
      unknown(l);
    }
  }
  if (!n)
    throw ParseError(0, "missing 'objects' line");
  std::vector<Endpoints> nonidentity;
  int expected = *n;
  for (const auto &[id, e] : mors) {
    if (id != expected)
      throw ParseError(0, "morphism ids must be consecutive from " +
                              std::to_string(*n) + "; " +
                              std::to_string(expected) + " is missing");
    nonidentity.push_back(e);
    ++expected;
  }
  const int total = expected;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto [f, g, h] = comps[k];
    for (int v : {f, g, h})
      if (v < 0 || v >= total)
        throw ParseError(comp_lines[k], "morphism " + std::to_string(v) +
                                            " out of range");
  }
  return FiniteCategory::from_parts(*n, nonidentity, comps);
}

Poset parse_poset(std::string_view text) {
  PosetBuilder b;
  for (const Line &l : tokenize(text))
    if (!b.take(l))
      unknown(l);
  return b.build();
}

LabeledLattice parse_lattice(std::string_view text) {
  PosetBuilder b;
  std::vector<std::pair<const Line *, std::pair<int, int>>> dims;
  const auto lines = tokenize(text);
  for (const Line &l : lines) {
    if (b.take(l))
      continue;
    if (l.words[0] != "dim")
      unknown(l);
    expect_args(l, 2);
    dims.push_back({&l, {to_int(l, 1), to_int(l, 2)}});
  }
  Poset p = b.build();
  std::vector<std::optional<int>> label(p.size());
  for (const auto &[l, d] : dims) {
    check_range(*l, d.first, p.size(), "element");
    if (label[d.first])
      throw ParseError(l->number, "duplicate dim for element " +
                                      std::to_string(d.first));
    label[d.first] = d.second;
  }
  std::vector<int> dim;
  for (int x = 0; x < p.size(); ++x) {
    if (!label[x])
      throw ParseError(0, "missing dim for element " + std::to_string(x));
    dim.push_back(*label[x]);
  }
  return make_labeled_lattice(std::move(p), std::move(dim));
}

std::vector<CatAutomorphism> parse_generators(std::string_view text,
                                              const FiniteCategory &c) {
  std::vector<CatAutomorphism> gens;
  std::vector<bool> has_mor;
  std::vector<int> obj_line;
  for (const Line &l : tokenize(text)) {
    if (l.words[0] != "gen")
      unknown(l);
    if (l.words.size() < 2)
      throw ParseError(l.number, "'gen' needs 'obj' or 'mor'");
    if (l.words[1] == "obj") {
      auto perm = int_list(l, 2);
      check_permutation(l, perm, c.n_objects(), "object");
      gens.push_back({std::move(perm), {}});
      has_mor.push_back(false);
      obj_line.push_back(l.number);
    } else if (l.words[1] == "mor") {
      if (gens.empty() || has_mor.back())
        throw ParseError(l.number, "'gen mor' must follow a 'gen obj' line");
      auto perm = int_list(l, 2);
      check_permutation(l, perm, c.n_morphisms(), "morphism");
      gens.back().mor_map = std::move(perm);
      has_mor.back() = true;
    } else {
      throw ParseError(l.number, "'gen' needs 'obj' or 'mor'");
    }
  }
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (!has_mor[k]) {
      try {
        gens[k] = automorphism_from_object_permutation(c, gens[k].obj_map);
      } catch (const InputError &e) {
        throw ParseError(obj_line[k], e.what());
      }
    }
  return gens;
}

SubgroupFamily parse_family(std::string_view text, const ActionGroup &a) {
  const FiniteCategory &c = a.target();
  SubgroupFamily family(c.n_morphisms(), std::vector<GroupElement>{0});
  std::vector<char> seen(c.n_morphisms(), 0);
  for (const Line &l : tokenize(text)) {
    if (l.words[0] != "sub")
      unknown(l);
    const int m = to_int(l, 1);
    check_range(l, m, c.n_morphisms(), "morphism");
    if (seen[m]++)
      throw ParseError(l.number, "duplicate 'sub' for morphism " + std::to_string(m));
    std::vector<GroupElement> elems = int_list(l, 2);
    for (int g : elems)
      check_range(l, g, a.order(), "group element");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    family[m] = std::move(elems);
  }
  return family;
}

Instance parse_instance(std::string_view text) {
  PosetBuilder b;
  std::vector<std::pair<int, std::vector<int>>> gens;
  for (const Line &l : tokenize(text)) {
    if (b.take(l))
      continue;
    if (l.words[0] != "gen" || l.words.size() < 2 || l.words[1] != "obj")
      unknown(l);
    gens.emplace_back(l.number, int_list(l, 2));
  }
  Instance inst{b.build(), {}};
  for (auto &[line, perm] : gens) {
    Line l{line, {}};
    check_permutation(l, perm, inst.poset.size(), "object");
    inst.generators.push_back(std::move(perm));
  }
  return inst;
}

std::string format_category(const FiniteCategory &c) {
  std::ostringstream out;
  out << "objects " << c.n_objects() << '\n';
  for (MorphismId m = c.n_objects(); m < c.n_morphisms(); ++m)
    out << "mor " << m << ' ' << c.source(m) << ' ' << c.target(m) << '\n';
  for (MorphismId f = c.n_objects(); f < c.n_morphisms(); ++f)
    for (MorphismId g = c.n_objects(); g < c.n_morphisms(); ++g)
      if (c.composable(f, g))
        out << "comp " << f << ' ' << g << ' ' << c.compose(f, g) << '\n';
  return out.str();
}

std::string format_poset(const Poset &p) {
  std::ostringstream out;
  out << "elements " << p.size() << '\n';
  for (auto [a, b] : p.covers())
    out << "rel " << a << ' ' << b << '\n';
  return out.str();
}

std::string format_instance(const Instance &inst) {
  std::string s = format_poset(inst.poset);
  for (const auto &g : inst.generators) {
    s += "gen obj";
    for (int v : g)
      s += ' ' + std::to_string(v);
    s += '\n';
  }
  return s;
}

std::string format_quotient(const QuotientCategory &q) {
  std::string s = format_category(q.category);
  for (std::size_t m = 0; m < q.mor_class.size(); ++m)
    s += "class " + std::to_string(m) + ' ' + std::to_string(q.mor_class[m]) + '\n';
  return s;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace catquot
