#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "twistindex/braid.hpp"
#include "twistindex/group_search.hpp"
#include "twistindex/verifier.hpp"

using namespace twistindex;

namespace {

Perm random_perm(int degree, std::mt19937& rng) {
  std::vector<uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<uint8_t>(i);
  for (int i = degree - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(img[i], img[d(rng)]);
  }
  return Perm::from_images(std::move(img));
}

Perm full_pairing(int n) {  // (1,n+1)(2,n+2)...(n,2n)
  std::vector<std::vector<int>> cycles;
  for (int j = 1; j <= n; ++j) cycles.push_back({j, n + j});
  return perm_from_cycles(2 * n, cycles);
}

}  // namespace

TEST_CASE("twist presentation data") {
  const TwistPresentation pres(3);
  CHECK(pres.n == 8);
  CHECK(pres.commuting_indices() == std::vector<int>{1, 2, 3, 5, 6, 7});
  CHECK(pres.humphries_indices().size() == 7);  // tau_0..tau_6, tau_7 excluded
  CHECK_THROWS_AS(TwistPresentation(2), std::invalid_argument);
  CHECK_THROWS_AS(TwistPresentation(16), std::invalid_argument);
}

TEST_CASE("forced equal lemma") {
  CHECK(forced_equal_lemma_check(4));
  CHECK(forced_equal_lemma_check(5));
  CHECK(forced_equal_lemma_check(1));
}

TEST_CASE("tau0_search pinned outcomes at n = 8") {
  SUBCASE("lin variant 3: forced pairing, then the braid filter empties it") {
    const auto res = tau0_search(lin_hom(3, 8));
    REQUIRE_FALSE(res.budget_exceeded);
    CHECK(res.commute_type_count == 1);
    CHECK(res.survivors.empty());
    // re-run without the braid filter to see the forced candidate itself
    SearchSpec spec;
    spec.degree = 16;
    for (int i = 1; i <= 7; ++i)
      if (i != 4) spec.commute_with.push_back(lin_hom(3, 8).image(i));
    spec.required_type = lin_hom(3, 8).image(4).cycle_type();
    const auto no_braid = constrained_elements(spec);
    REQUIRE(no_braid.survivors.size() == 1);
    CHECK(no_braid.survivors[0] == full_pairing(8));
  }
  SUBCASE("standard x standard: empty") {
    const auto res = tau0_search(product_hom(standard_hom(8), standard_hom(8)));
    CHECK(res.survivors.empty());
  }
  SUBCASE("standard x cyclic: empty for every class representative") {
    for (const auto& [type, w] : class_reps(8)) {
      const auto res =
          tau0_search(product_hom(standard_hom(8), cyclic_hom(w, 8)));
      REQUIRE_FALSE(res.budget_exceeded);
      CHECK(res.survivors.empty());
    }
  }
}

TEST_CASE("tau0 constraint recipe matches a full scan on a surrogate instance") {
  // 4 strands, degree 8, braid partner sigma_2
  const BraidHom psi = product_hom(standard_hom(4), standard_hom(4));
  const auto res = tau0_search_at(psi, 2, 1'000'000);
  REQUIRE_FALSE(res.budget_exceeded);
  std::vector<Perm> expected;
  std::size_t commute = 0, commute_type = 0;
  const CycleType want = psi.image(2).cycle_type();
  for (const Perm& u : all_permutations(8)) {
    bool ok = true;
    for (int i = 1; i <= 3; ++i)
      if (i != 2 && !u.commutes_with(psi.image(i))) ok = false;
    if (!ok) continue;
    ++commute;
    if (u.cycle_type() != want) continue;
    ++commute_type;
    if (u.braids_with(psi.image(2))) expected.push_back(u);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(res.commute_count == std::optional<std::size_t>(commute));
  CHECK(res.commute_type_count == commute_type);
  CHECK(res.survivors == expected);
}

TEST_CASE("check_case fast paths at n = 8") {
  SUBCASE("lin 1 and 2 close via parity") {
    for (int j : {1, 2}) {
      const CaseReport r = check_case(lin_hom(j, 8));
      CHECK(r.parity_fired);
      CHECK(r.conclusion == CaseConclusion::NoExtension);
      CHECK(lin_hom(j, 8).image(1).sign() == -1);
    }
  }
  SUBCASE("cyclic forces the trivial image") {
    std::mt19937 rng(2);
    const Perm w = random_perm(16, rng);
    CheckOptions opts;
    opts.use_parity_fastpath = false;  // reach the cyclic path for any parity
    const CaseReport r = check_case(cyclic_hom(w, 8), opts);
    CHECK(r.cyclic_forced);
    CHECK(r.conclusion == CaseConclusion::ForcesTrivial);
    REQUIRE(r.candidates.size() == 1);
    CHECK(r.candidates[0].u0 == w);
  }
  SUBCASE("standard x standard closes by search") {
    const CaseReport r = check_case(product_hom(standard_hom(8), standard_hom(8)));
    CHECK_FALSE(r.parity_fired);
    CHECK(r.conclusion == CaseConclusion::NoExtension);
    CHECK(r.candidates.empty());
  }
}

TEST_CASE("parity fast path is subsumed by the full pipeline") {
  CheckOptions full;
  full.use_parity_fastpath = false;
  full.use_cyclic_fastpath = false;
  // every genus-3 shape where parity fires must close without it too
  std::vector<BraidHom> shapes{lin_hom(1, 8), lin_hom(2, 8)};
  for (const auto& [type, w] : class_reps(8)) {
    const BraidHom psi = product_hom(standard_hom(8), cyclic_hom(w, 8));
    if (psi.image(1).sign() == -1) shapes.push_back(psi);
  }
  for (const BraidHom& psi : shapes) {
    CHECK(check_case(psi).parity_fired);
    const CaseReport r = check_case(psi, full);
    CHECK_FALSE(r.parity_fired);
    CHECK(r.conclusion == CaseConclusion::NoExtension);
  }
}

TEST_CASE("cyclic fast path agrees with direct search for small supports") {
  CheckOptions direct;
  direct.use_parity_fastpath = false;
  direct.use_cyclic_fastpath = false;
  for (const char* text : {"(1,2)", "(1,2,3)", "(1,2)(3,4)", "(1,2,3,4,5)"}) {
    const Perm w = parse_perm(text, 12);
    const auto res = tau0_search(cyclic_hom(w, 6), 1'000'000);
    REQUIRE_FALSE(res.budget_exceeded);
    REQUIRE(res.survivors.size() == 1);
    CHECK(res.survivors[0] == w);
  }
}

TEST_CASE("conjugation equivariance of check_case") {
  std::mt19937 rng(9);
  std::vector<BraidHom> shapes{
      cyclic_hom(parse_perm("(1,2,3)(4,5)", 16), 8),
      product_hom(standard_hom(8), cyclic_hom(parse_perm("(1,2)", 8), 8)),
      product_hom(standard_hom(8), standard_hom(8)), lin_hom(3, 8)};
  for (const BraidHom& psi : shapes) {
    const CaseReport base = check_case(psi);
    for (int trial = 0; trial < 3; ++trial) {
      const Perm u = random_perm(16, rng);
      const CaseReport r = check_case(conjugate_hom(psi, u));
      CHECK(r.conclusion == base.conclusion);
      CHECK(r.commute_count == base.commute_count);
      CHECK(r.commute_type_count == base.commute_type_count);
      CHECK(r.candidates.size() == base.candidates.size());
    }
  }
}

TEST_CASE("verify_theorem at genus 3") {
  const TheoremVerdict v = verify_theorem(3, 2);
  CHECK(v.no_nontrivial_hom);
  CHECK(v.cases.size() == 27);  // 1 + p(8)=22 + 1 + 3
  for (const CaseReport& r : v.cases)
    CHECK(r.conclusion != CaseConclusion::Inconclusive);
  const nlohmann::json j = verdict_to_json(v);
  CHECK(j.at("schema") == "twist-index/1");
  CHECK(j.at("conclusion") == "NoNontrivialHom");
  CHECK(j.at("cases").size() == 27);
  CHECK(verdict_to_text(v).find("NoNontrivialHom") != std::string::npos);
}

TEST_CASE("verify_theorem rejects out-of-range genus") {
  CHECK_THROWS_AS(verify_theorem(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem(16), std::invalid_argument);
}

TEST_CASE("verify_theorem closes at genus 4 and 5") {
  for (int genus : {4, 5}) {
    const TheoremVerdict v = verify_theorem(genus, 4);
    CHECK(v.no_nontrivial_hom);
    for (const CaseReport& r : v.cases)
      CHECK(r.conclusion != CaseConclusion::Inconclusive);
  }
}
