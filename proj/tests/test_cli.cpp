#include "catquot/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace catquot;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return std::string(CATQUOT_TEST_DATA) + "/" + name; }

bool contains(const std::string &s, const std::string &part) {
  return s.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("validate") {
  const auto ok = run({"validate", "--poset", data("bowtie.poset"), "--action", data("bowtie.action")});
  CHECK(ok.code == cli::kExitOk);
  CHECK(contains(ok.out, "action ok order 2"));

  const auto cat = run({"validate", "--category", data("bowtie.category")});
  CHECK(cat.code == cli::kExitOk);

  const auto missing = run({"validate", "--category", data("missing_comp.category")});
  CHECK(missing.code == cli::kExitInput);
  CHECK(contains(missing.out, "violation composition not total"));

  const auto bad = run({"validate", "--poset", data("bowtie.poset"), "--action",
                        data("bad_generator.action")});
  CHECK(bad.code == cli::kExitInput);
}

TEST_CASE("input errors") {
  CHECK(run({"validate", "--poset", data("nope.poset")}).code == cli::kExitInput);
  CHECK(run({"frobnicate"}).code == cli::kExitInput);
  CHECK(run({"conditions", "--check", "q", "--poset", data("bowtie.poset")}).code ==
        cli::kExitInput);
}

TEST_CASE("conditions") {
  const auto c = run({"conditions", "--machine", "--check", "c", "--poset", data("stacked3.poset"),
                      "--action", data("stacked3.action")});
  CHECK(c.code == cli::kExitFailed);
  CHECK(contains(c.out, "C FAIL t=2"));

  const auto sr = run({"conditions", "--check", "sr", "--poset", data("bowtie.poset"),
                       "--action", data("bowtie.action")});
  CHECK(sr.code == cli::kExitFailed);

  const auto s = run({"conditions", "--check", "s", "--family-builtin", "upset", "--poset",
                      data("boolean3.poset"), "--action", data("boolean3.action")});
  CHECK(s.code == cli::kExitOk);
}

TEST_CASE("numerical commands") {
  const auto h = run({"homology", "--machine", "--poset", data("bowtie.poset")});
  CHECK(h.code == cli::kExitOk);
  CHECK(contains(h.out, "betti 1 1"));

  const auto m = run({"mobius", "--machine", "--poset", data("bowtie.poset"), "--action",
                      data("bowtie.action")});
  CHECK(contains(m.out, "mobius -1"));

  const auto l = run({"lambda-check", "--poset", data("stacked3.poset"), "--action",
                      data("stacked3.action")});
  CHECK(l.code == cli::kExitFailed);
  CHECK(contains(l.out, "lambda 2 surjective=true injective=false"));

  const auto gm = run({"formulas", "--machine", "--identity", "gm", "--i", "2", "--lattice",
                       data("partition3.lattice"), "--action", data("partition3.action")});
  CHECK(gm.code == cli::kExitOk);
  CHECK(contains(gm.out, "left=1 right=1 equal=true"));

  const auto refused = run({"formulas", "--identity", "mobius", "--poset", data("stacked3.poset"),
                            "--action", data("stacked3.action")});
  CHECK(refused.code == cli::kExitFailed);
  CHECK(contains(refused.out, "REFUSED"));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"fuzz", "--machine", "--seed", "4", "--instances", "30"};
  const auto first = run(args);
  CHECK(first.code == cli::kExitOk);
  CHECK(first.out == run(args).out);

  const std::vector<std::string> q{"quotient", "--poset", data("boolean3.poset"), "--action",
                                   data("boolean3.action")};
  CHECK(run(q).out == run(q).out);
}
