#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "twistindex/perm.hpp"

namespace twistindex {

// Constraint system for the tau_0 image search: elements of Sym_degree that
// commute with everything in commute_with, have the required cycle type when
// one is given, and braid with braid_with when one is given.
struct SearchSpec {
  int degree = 1;
  std::vector<Perm> commute_with;
  std::optional<CycleType> required_type;
  std::optional<Perm> braid_with;
  std::size_t candidate_cap = 1'000'000;
};

struct StagedSearchResult {
  bool budget_exceeded = false;
  // Survivors of the commute-only stage; nullopt when that stage alone would
  // exceed candidate_cap and only the type-pruned search was enumerable.
  std::optional<std::size_t> commute_count;
  std::size_t commute_type_count = 0;
  std::vector<Perm> survivors;  // all constraints applied, sorted
};

StagedSearchResult constrained_elements(const SearchSpec& spec);

// Finds u with u*a[i]*u^-1 == b[i] for all i, or nullopt if none exists.
std::optional<Perm> simultaneous_conjugator(const std::vector<Perm>& a,
                                            const std::vector<Perm>& b);

// Generators of the commutator subgroup: commutators of generator pairs,
// closed under conjugation by the original generators.
std::vector<Perm> derived_subgroup(const std::vector<Perm>& gens, int degree);

bool is_perfect(const std::vector<Perm>& gens, int degree);

// One representative per partition of `degree`, cycles laid out on
// consecutive points, longest first.
std::vector<std::pair<CycleType, Perm>> class_reps(int degree);

// Full conjugacy class of rep, sorted.
std::vector<Perm> conjugacy_class(const Perm& rep);

// Every element of Sym_degree; guard degree <= 9.
std::vector<Perm> all_permutations(int degree);

}  // namespace twistindex
