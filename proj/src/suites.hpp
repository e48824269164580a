#pragma once

// Seeded verification suites shared by the C API and the acceptance runner.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasipf/ring.hpp"

namespace qpf::suites {

struct Config {
  RingSpec spec{RingKind::Block, 2};
  int n_max = 2;        // largest level for the moment-based suites
  int nodes = 0;        // 0: 2 n_max + 4
  std::uint64_t seed = 7;
  int instances = 3;    // per size / level
};

struct Row {
  std::string suite;
  std::string theorem;
  std::uint64_t seed = 0;
  int n = 0;
  int i = 0;
  int j = 0;
  bool zero = false;
};

struct Report {
  std::vector<Row> rows;
  int reseeds = 0;
  int exhausted = 0;          // instances abandoned after the reseed budget
  int diagonal_witnesses = 0; // Pf(•,[i,i]) != 0 seen in the symmetry suite

  bool passed() const;
  void sort();
};

/// classical, ratio, condensation, symmetry, derivatives, btoda, sop, solver.
const std::vector<std::string>& names();

/// Runs one suite, or every suite for "all". Throws BadInput on an unknown
/// name. Singular instances are re-seeded, up to a fixed budget.
Report run(std::string_view name, const Config& cfg);

/// Seed of instance k, attempt a, of a suite.
std::uint64_t instance_seed(std::uint64_t base, std::string_view suite, int k, int attempt);

int default_nodes(int n_max);

nlohmann::json to_json(const Report& r, const Config& cfg, std::string_view suite);
std::string to_text(const Report& r);

}  // namespace qpf::suites
