#pragma once

#include "catquot/textio.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace catquot {

struct FuzzConfig {
  std::uint64_t seed = 1;
  int instances = 100;
  int max_elements = 7;
  int max_group_order = 8;
  /// Failing instances are written here as `fuzz-<seed>-<index>.txt`; empty
  /// disables writing.
  std::string replay_dir;
};

/// One evaluated property. Properties whose hypothesis does not hold on an
/// instance are not listed for it.
struct CheckOutcome {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct InstanceReport {
  int index = 0;
  Instance instance;
  int group_order = 1;
  std::vector<CheckOutcome> checks;

  bool ok() const;
  /// Deterministic multi-line text: a header line, then one line per check.
  std::string text() const;
};

/// Random poset of 1..max_elements elements (graded DAG plus transitive
/// closure) with generators of a random subgroup of its automorphism group
/// of order at most max_group_order. Determined by (seed, index).
Instance random_instance(std::uint64_t seed, int index, const FuzzConfig &config);

/// All order automorphisms of p, identity first, by exhaustive search.
std::vector<std::vector<int>> poset_automorphisms(const Poset &p);

/// Runs every property on one instance. `salt` drives the random choices
/// inside the battery (which orbit unions to restrict to).
InstanceReport run_battery(const Instance &inst, int index, std::uint64_t salt);

struct Tally {
  int evaluated = 0;
  int violated = 0;
};

struct FuzzSummary {
  std::vector<InstanceReport> reports;
  std::map<std::string, Tally> tally;
  int passed = 0;
  std::vector<std::string> replay_files;
};

/// Instances run in parallel; reports are kept in instance order.
FuzzSummary run_fuzz(const FuzzConfig &config);

} // namespace catquot
