#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twistindex/braid.hpp"

namespace twistindex {

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CensusEntry {
  BraidHom rep;
  HomLabel label;
  std::string fingerprint;  // sigma_1 cycle type, orbit sizes, group order
};

struct CensusOptions {
  bool enforce_guard = true;       // k <= 10 and n <= 8
  std::size_t leaf_budget = 5'000'000;
};

// Complete list of conjugacy classes of transitive homomorphisms
// B_n -> Sym_k, canonically sorted. sigma_1 is pinned to one class
// representative per cycle type; later generators are drawn from its
// conjugacy class subject to the commute/braid constraints; finished tuples
// are deduplicated by simultaneous conjugacy.
std::vector<CensusEntry> enumerate_transitive(int n, int k,
                                              const CensusOptions& opts = {});

// Number of classes in enumerate_transitive(n, n) that are neither cyclic
// nor conjugate to the standard homomorphism; guard n in {4, 5, 6}.
int count_exceptional(int n);

std::string census_fingerprint(const BraidHom& h);
nlohmann::json census_entry_to_json(const CensusEntry& e);

}  // namespace twistindex
