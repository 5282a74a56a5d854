#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hdeg {

struct SweepOptions {
  int max_n = -1;                // family / identity bound override
  int exhaustive = -1;           // labeled connected corpus cap override
  int exhaustive_bipartite = -1; // labeled bipartite corpus cap override
  int samples = -1;              // random corpus size override
  std::uint64_t seed = 20250607;
  int jobs = 0;                  // 0 = hardware concurrency
  int subset_cap = 24;           // q_report budget, in bits of u_l_bar
  int homology_cap = 18;         // regularity vertex budget
};

struct SweepReport {
  std::string theorem_id;
  std::string corpus_spec;
  std::uint64_t instances_checked = 0;
  std::vector<std::string> violations;  // graph6 or parameter tokens, sorted
  double wall_time = 0.0;               // seconds
  bool pass() const { return violations.empty(); }
};

// Known check ids, in display order.
const std::vector<std::string>& known_checks();
std::string check_description(const std::string& id);

// Runs one named check.  Unknown ids throw NotApplicable.
SweepReport run_check(const std::string& id, const SweepOptions& opts = {});

}  // namespace hdeg
