#pragma once

#include <string>
#include <vector>

#include "wildram/io.hpp"

namespace wildram {

// One cover of the acceptance grid, as constructor input.
struct GridEntry {
  int p;
  int e;
  std::vector<std::string> rhs;
};

// p in {2,3}, e in {1,2}, heights 1 and 2, generator breaks from {1,2,3,5}
// coprime to p. Height-2 entries pair distinct breaks; over e = 2 they also
// pair a break with its g-twist so equal-break towers are represented.
std::vector<GridEntry> acceptance_grid();

// Height-3 stress covers outside the grid proper: the break-one tower over
// F_8 and the mixed-break tower over F_2.
std::vector<GridEntry> extra_towers();

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  long checks = 0;
  std::vector<std::string> failures;  // capped at a handful per criterion
};

struct SweepOptions {
  unsigned long long seed = 12022;
  long window = 64;
  int samples = 1000;  // random displacement samples per grid tower
};

struct SweepResult {
  std::vector<CriterionResult> criteria;
  long towers = 0;
  bool all_pass = false;
  // Observation, not a criterion: how often the break-line containment
  // bound at index i >= 2 is an equality against the computed chain.
  long gi_equal = 0;
  long gi_strict = 0;
  SweepOptions options;
};

SweepResult run_sweep(const SweepOptions& opts = {});

json sweep_json(const SweepResult& r);

}  // namespace wildram
