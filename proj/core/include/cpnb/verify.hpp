#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpnb/types.hpp"

namespace cpnb::verify {

enum class Status { pass, fail, finding };

/// One named verification check. pass iff |measured - expected| <= tolerance;
/// "finding" entries document expected paper discrepancies and never fail a
/// run (expected is null for them).
struct Check {
  std::string name;
  Status status = Status::pass;
  double measured = 0.0;
  std::optional<double> expected;
  double tolerance = 0.0;
};

struct Provenance {
  std::uint64_t seed = 0;
  int radial_order = 64;
  std::string w_oracle_order = "(2nu+2m+k)/2+2";
  std::string build_id;
};

struct Report {
  std::string schema_version = "1";
  std::string suite;
  std::string grid;
  std::vector<Check> checks;
  Provenance provenance;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }
};

enum class Grid { small, full };

struct Options {
  Grid grid = Grid::small;
  std::uint64_t seed = 42;
};

/// Parameter triples covered by a grid: small is n <= 2, 2nu <= 2, m <= 2;
/// full is n <= 3, 2nu <= 4, m <= 4.
std::vector<LevelParams> grid_points(Grid grid);

const std::vector<std::string>& suite_names();  // specfun, geometry, spectra, berezin

/// Run one named suite ("all" concatenates them in order).
Report run_suite(const std::string& name, const Options& options);

}  // namespace cpnb::verify
