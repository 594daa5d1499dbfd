#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twistindex/perm.hpp"

namespace twistindex {

// Brute-force closure of a generating set under multiplication; the
// independent oracle for stabilizer chains. Throws BudgetExceeded past cap.
std::vector<Perm> brute_force_closure(const std::vector<Perm>& gens, int degree,
                                      std::size_t cap = 100'000);

struct SelfcheckSuite {
  std::string name;
  std::function<bool(std::string& detail)> run;
};

// The oracle suites behind `selfcheck`: chains vs closure, constrained
// search vs full scans, the forced-equal lemma, and the tiny census oracle.
std::vector<SelfcheckSuite> selfcheck_suites(uint64_t seed = 12345);

// Runs every suite, prints one line per suite to out; true iff all pass.
bool run_selfcheck(std::ostream& out, uint64_t seed = 12345);

}  // namespace twistindex
