#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twistindex/braid.hpp"
#include "twistindex/group_search.hpp"

namespace twistindex {

// Relation scheme for the twists tau_0..tau_{2g+1} of a genus-g surface:
// tau_0 commutes with every tau_i except tau_4, braids with tau_4, and the
// tau_i for i >= 1 carry the braid-generator relations. tau_0..tau_{2g}
// (the Humphries subset) generate the whole group, and f = tau_4 tau_0
// conjugates tau_4 to tau_0.
struct TwistPresentation {
  explicit TwistPresentation(int genus);

  int genus;
  int n;                  // 2*genus + 2 braid strands
  int braid_partner = 4;  // tau_0 braids with tau_4, commutes with the rest
  std::vector<int> commuting_indices() const;  // 1..n-1 without 4
  std::vector<int> humphries_indices() const;  // 0..2*genus
};

enum class CaseConclusion { NoExtension, ForcesTrivial, Inconclusive };
std::string to_string(CaseConclusion c);

struct CandidateVerdict {
  Perm u0;
  bool image_trivial = false;
  bool image_perfect = false;
};

struct CaseReport {
  std::string shape;       // "a", "b[w=[2,1,...]]", "c", "d1", "d2", "d3"
  int analysis_case = 0;   // 1..6
  bool symbolic = false;   // shape (a) sweep entry, no concrete w
  bool parity_fired = false;
  bool cyclic_forced = false;
  bool budget_exceeded = false;
  std::optional<std::size_t> commute_count;
  std::size_t commute_type_count = 0;
  std::vector<CandidateVerdict> candidates;  // final-stage survivors
  CaseConclusion conclusion = CaseConclusion::Inconclusive;
  double wall_ms = 0.0;
};

struct TheoremVerdict {
  int genus = 0;
  std::vector<CaseReport> cases;
  bool no_nontrivial_hom = false;
};

struct CheckOptions {
  bool use_parity_fastpath = true;
  bool use_cyclic_fastpath = true;
  std::size_t candidate_cap = 1'000'000;
};

// Search for admissible images of tau_0: commute with psi(sigma_i) for
// i != 4, share the cycle type of psi(sigma_4), braid with psi(sigma_4).
StagedSearchResult tau0_search(const BraidHom& psi,
                               std::size_t candidate_cap = 1'000'000);

// Same constraint recipe with a configurable braid partner index; the
// surrogate-oracle tests use this with small strand counts.
StagedSearchResult tau0_search_at(const BraidHom& psi, int braid_index,
                                  std::size_t candidate_cap);

CaseReport check_case(const BraidHom& psi, const CheckOptions& opts = {});

// In any group, u commuting and braiding with w forces u = w; verified
// exhaustively over Sym_m x Sym_m.
bool forced_equal_lemma_check(int m);

TheoremVerdict verify_theorem(int genus, int workers = 1,
                              const CheckOptions& opts = {});

nlohmann::json verdict_to_json(const TheoremVerdict& v);
std::string verdict_to_text(const TheoremVerdict& v);

}  // namespace twistindex
