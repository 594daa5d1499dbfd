#include "twistindex/selfcheck.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "twistindex/braid.hpp"
#include "twistindex/census.hpp"
#include "twistindex/group_search.hpp"
#include "twistindex/stabilizer_chain.hpp"
#include "twistindex/verifier.hpp"

namespace twistindex {

std::vector<Perm> brute_force_closure(const std::vector<Perm>& gens, int degree,
                                      std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Perm p = queue[head];
    for (const Perm& g : gens) {
      Perm q = g * p;
      if (seen.insert(q).second) {
        if (seen.size() > cap)
          throw BudgetExceeded("brute-force closure cap exceeded");
        queue.push_back(std::move(q));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

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

bool chains_vs_closure(std::string& detail, uint64_t seed) {
  std::mt19937 rng(static_cast<uint32_t>(seed));
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dd(3, 7), dg(1, 3);
    const int degree = dd(rng);
    std::vector<Perm> gens;
    for (int i = 0, m = dg(rng); i < m; ++i) gens.push_back(random_perm(degree, rng));
    const auto closure = brute_force_closure(gens, degree);
    const StabilizerChain chain = StabilizerChain::build(degree, gens);
    if (chain.order() != static_cast<GroupOrder>(closure.size())) {
      detail = "order mismatch at trial " + std::to_string(trial);
      return false;
    }
    std::unordered_set<Perm, PermHash> members(closure.begin(), closure.end());
    for (int probe = 0; probe < 20; ++probe) {
      const Perm p = random_perm(degree, rng);
      if (chain.contains(p) != (members.count(p) > 0)) {
        detail = "membership mismatch at trial " + std::to_string(trial);
        return false;
      }
    }
    for (const Perm& p : closure)
      if (!chain.contains(p)) {
        detail = "missing member at trial " + std::to_string(trial);
        return false;
      }
  }
  return true;
}

bool constrained_vs_scan(std::string& detail, uint64_t seed) {
  std::mt19937 rng(static_cast<uint32_t>(seed) + 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dk(3, 7), dc(0, 2), coin(0, 1);
    SearchSpec spec;
    spec.degree = dk(rng);
    for (int i = 0, m = dc(rng); i < m; ++i)
      spec.commute_with.push_back(random_perm(spec.degree, rng));
    if (coin(rng)) spec.required_type = random_perm(spec.degree, rng).cycle_type();
    if (coin(rng)) spec.braid_with = random_perm(spec.degree, rng);
    const StagedSearchResult got = constrained_elements(spec);
    if (got.budget_exceeded) {
      detail = "unexpected budget overrun at trial " + std::to_string(trial);
      return false;
    }

    std::size_t commute = 0, commute_type = 0;
    std::vector<Perm> survivors;
    for (const Perm& u : all_permutations(spec.degree)) {
      bool ok = true;
      for (const Perm& c : spec.commute_with)
        if (!u.commutes_with(c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ++commute;
      if (spec.required_type) {
        CycleType t = *spec.required_type;
        std::sort(t.begin(), t.end(), std::greater<int>());
        if (u.cycle_type() != t) continue;
      }
      ++commute_type;
      if (spec.braid_with && !u.braids_with(*spec.braid_with)) continue;
      survivors.push_back(u);
    }
    std::sort(survivors.begin(), survivors.end());
    if (got.commute_count != std::optional<std::size_t>(commute) ||
        got.commute_type_count != commute_type || got.survivors != survivors) {
      detail = "stage mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool forced_equal(std::string& detail) {
  if (!forced_equal_lemma_check(4)) {
    detail = "counterexample at m=4";
    return false;
  }
  if (!forced_equal_lemma_check(5)) {
    detail = "counterexample at m=5";
    return false;
  }
  return true;
}

bool tiny_census(std::string& detail) {
  // Naive oracle: all 36 generator-image pairs in Sym_3.
  const auto all = all_permutations(3);
  std::vector<std::vector<Perm>> classes;
  for (const Perm& a : all)
    for (const Perm& b : all) {
      if (!a.braids_with(b)) continue;
      std::vector<Perm> tuple{a, b};
      if (orbits(tuple, 3).size() != 1) continue;
      bool known = false;
      for (const auto& rep : classes)
        for (const Perm& u : all)
          if (rep[0].conjugated_by(u) == a && rep[1].conjugated_by(u) == b) {
            known = true;
            break;
          }
      if (!known) classes.push_back(tuple);
    }
  const auto census = enumerate_transitive(3, 3);
  if (classes.size() != census.size() || census.size() != 2) {
    detail = "class count: naive=" + std::to_string(classes.size()) +
             ", census=" + std::to_string(census.size());
    return false;
  }
  for (const auto& rep : classes) {
    bool matched = false;
    for (const CensusEntry& e : census)
      if (simultaneous_conjugator(rep, e.rep.images())) matched = true;
    if (!matched) {
      detail = "naive class not represented in census";
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<SelfcheckSuite> selfcheck_suites(uint64_t seed) {
  return {
      {"chain-order-and-membership-vs-closure",
       [seed](std::string& d) { return chains_vs_closure(d, seed); }},
      {"constrained-search-vs-full-scan",
       [seed](std::string& d) { return constrained_vs_scan(d, seed); }},
      {"forced-equal-lemma", [](std::string& d) { return forced_equal(d); }},
      {"tiny-census-vs-naive-scan", [](std::string& d) { return tiny_census(d); }},
  };
}

bool run_selfcheck(std::ostream& out, uint64_t seed) {
  bool all_ok = true;
  for (const SelfcheckSuite& suite : selfcheck_suites(seed)) {
    std::string detail;
    const bool ok = suite.run(detail);
    out << (ok ? "PASS" : "FAIL") << " " << suite.name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok;
}

}  // namespace twistindex
