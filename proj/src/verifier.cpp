#include "twistindex/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "twistindex/stabilizer_chain.hpp"

namespace twistindex {

TwistPresentation::TwistPresentation(int genus_) : genus(genus_), n(2 * genus_ + 2) {
  if (genus < 3)
    throw std::invalid_argument("theorem hypotheses need genus >= 3");
  if (2 * n > Perm::kMaxDegree)
    throw std::invalid_argument("degree cap needs genus <= 15");
}

std::vector<int> TwistPresentation::commuting_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i)
    if (i != braid_partner) out.push_back(i);
  return out;
}

std::vector<int> TwistPresentation::humphries_indices() const {
  std::vector<int> out(2 * genus + 1);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::string to_string(CaseConclusion c) {
  switch (c) {
    case CaseConclusion::NoExtension:
      return "NoExtension";
    case CaseConclusion::ForcesTrivial:
      return "ForcesTrivial";
    case CaseConclusion::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

StagedSearchResult tau0_search_at(const BraidHom& psi, int braid_index,
                                  std::size_t candidate_cap) {
  if (braid_index < 1 || braid_index > psi.strands() - 1)
    throw std::invalid_argument("braid index out of range");
  SearchSpec spec;
  spec.degree = psi.target_degree();
  for (int i = 1; i <= psi.strands() - 1; ++i)
    if (i != braid_index) spec.commute_with.push_back(psi.image(i));
  spec.required_type = psi.image(braid_index).cycle_type();
  spec.braid_with = psi.image(braid_index);
  spec.candidate_cap = candidate_cap;
  return constrained_elements(spec);
}

StagedSearchResult tau0_search(const BraidHom& psi, std::size_t candidate_cap) {
  if (psi.target_degree() != 2 * psi.strands())
    throw std::invalid_argument("tau0_search needs target degree 2n");
  return tau0_search_at(psi, 4, candidate_cap);
}

CaseReport check_case(const BraidHom& psi, const CheckOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  CaseReport r;
  const int n = psi.strands();
  const int degree = psi.target_degree();

  auto humphries_gens = [&](const Perm& u0) {
    // Images of the Humphries generators tau_0, tau_1, ..., tau_{2g};
    // tau_{2g+1} = sigma_{n-1} is deliberately excluded.
    std::vector<Perm> gens{u0};
    for (int i = 1; i <= n - 2; ++i) gens.push_back(psi.image(i));
    return gens;
  };

  if (opts.use_parity_fastpath && psi.image(1).sign() == -1) {
    // An odd generator image makes the signature character surjective,
    // which no image of a perfect group allows.
    r.parity_fired = true;
    r.conclusion = CaseConclusion::NoExtension;
  } else if (opts.use_cyclic_fastpath && psi.is_cyclic()) {
    // All images equal w: commuting and braiding with w forces u0 = w, so
    // the whole image is the abelian group <w>, which must be trivial.
    const Perm& w = psi.image(1);
    r.cyclic_forced = true;
    r.commute_count = 1;
    r.commute_type_count = 1;
    r.candidates.push_back({w, w.is_identity(), w.is_identity()});
    r.conclusion = CaseConclusion::ForcesTrivial;
  } else {
    StagedSearchResult res = tau0_search(psi, opts.candidate_cap);
    if (res.budget_exceeded) {
      r.budget_exceeded = true;
      r.conclusion = CaseConclusion::Inconclusive;
    } else {
      r.commute_count = res.commute_count;
      r.commute_type_count = res.commute_type_count;
      bool any_unresolved = false, any_trivial = false;
      for (const Perm& u0 : res.survivors) {
        std::vector<Perm> gens = humphries_gens(u0);
        const bool trivial = group_order(gens, degree) == 1;
        const bool perfect = is_perfect(gens, degree);
        r.candidates.push_back({u0, trivial, perfect});
        if (trivial) any_trivial = true;
        if (perfect && !trivial) any_unresolved = true;
      }
      if (any_unresolved)
        r.conclusion = CaseConclusion::Inconclusive;
      else if (any_trivial)
        r.conclusion = CaseConclusion::ForcesTrivial;
      else
        r.conclusion = CaseConclusion::NoExtension;
    }
  }

  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

bool forced_equal_lemma_check(int m) {
  if (m < 1 || m > 6)
    throw std::invalid_argument("forced_equal_lemma_check guard: m <= 6");
  const std::vector<Perm> all = all_permutations(m);
  for (const Perm& u : all)
    for (const Perm& w : all)
      if (u.commutes_with(w) && u.braids_with(w) && !(u == w)) return false;
  return true;
}

TheoremVerdict verify_theorem(int genus, int workers, const CheckOptions& opts) {
  const TwistPresentation pres(genus);
  const int n = pres.n;

  struct Task {
    std::string shape;
    int analysis_case;
    std::optional<BraidHom> psi;  // nullopt: symbolic shape (a)
  };
  std::vector<Task> tasks;
  tasks.push_back({"a", 1, std::nullopt});
  const BraidHom std_n = standard_hom(n);
  for (const auto& [type, w] : class_reps(n))
    tasks.push_back({"b[w=" + cycle_type_to_string(type) + "]", 2,
                     product_hom(std_n, cyclic_hom(w, n))});
  tasks.push_back({"c", 3, product_hom(std_n, std_n)});
  for (int j = 1; j <= 3; ++j)
    tasks.push_back({"d" + std::to_string(j), 3 + j, lin_hom(j, n)});

  std::vector<CaseReport> reports(tasks.size());
  auto run_task = [&](std::size_t idx) {
    const Task& t = tasks[idx];
    CaseReport r;
    if (!t.psi) {
      // Shape (a) covers every w in Sym_2n at once: u0 = w is forced, the
      // image is the abelian group <w>, and perfectness forces it trivial.
      r.symbolic = true;
      r.cyclic_forced = true;
      r.commute_count = 1;
      r.commute_type_count = 1;
      r.conclusion = CaseConclusion::ForcesTrivial;
    } else {
      r = check_case(*t.psi, opts);
    }
    r.shape = t.shape;
    r.analysis_case = t.analysis_case;
    reports[idx] = std::move(r);
  };

  if (workers < 1) workers = 1;
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  TheoremVerdict v;
  v.genus = genus;
  v.cases = std::move(reports);
  v.no_nontrivial_hom =
      std::all_of(v.cases.begin(), v.cases.end(), [](const CaseReport& r) {
        return r.conclusion != CaseConclusion::Inconclusive;
      });
  return v;
}

nlohmann::json verdict_to_json(const TheoremVerdict& v) {
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseReport& r : v.cases) {
    nlohmann::json survivors = nlohmann::json::array();
    for (const CandidateVerdict& c : r.candidates)
      survivors.push_back({{"u0", format_perm(c.u0)},
                           {"image_trivial", c.image_trivial},
                           {"image_perfect", c.image_perfect}});
    nlohmann::json stages = {
        {"commute", r.commute_count ? nlohmann::json(*r.commute_count)
                                    : nlohmann::json(nullptr)},
        {"commute_type", r.commute_type_count},
        {"final", r.candidates.size()}};
    cases.push_back({{"shape", r.shape},
                     {"case", r.analysis_case},
                     {"symbolic", r.symbolic},
                     {"parity_fired", r.parity_fired},
                     {"cyclic_forced", r.cyclic_forced},
                     {"budget_exceeded", r.budget_exceeded},
                     {"stages", stages},
                     {"survivors", survivors},
                     {"conclusion", to_string(r.conclusion)},
                     {"wall_ms", r.wall_ms}});
  }
  return {{"schema", "twist-index/1"},
          {"genus", v.genus},
          {"degree", 4 * v.genus + 4},
          {"conclusion", v.no_nontrivial_hom ? "NoNontrivialHom" : "Inconclusive"},
          {"cases", cases}};
}

std::string verdict_to_text(const TheoremVerdict& v) {
  std::ostringstream os;
  os << "genus " << v.genus << ", target degree " << 4 * v.genus + 4 << "\n";
  for (const CaseReport& r : v.cases) {
    os << "  case " << r.analysis_case << " shape " << r.shape << ": "
       << to_string(r.conclusion);
    if (r.symbolic) os << " [symbolic: u0 = w forced, image <w> abelian]";
    if (r.parity_fired) os << " [parity obstruction]";
    if (r.cyclic_forced && !r.symbolic) os << " [cyclic forced solution]";
    if (r.budget_exceeded) os << " [search budget exceeded]";
    if (!r.symbolic && !r.parity_fired && !r.cyclic_forced) {
      os << " [stages: commute=";
      if (r.commute_count)
        os << *r.commute_count;
      else
        os << ">cap";
      os << ", commute+type=" << r.commute_type_count
         << ", final=" << r.candidates.size() << "]";
      for (const CandidateVerdict& c : r.candidates)
        os << " survivor " << format_perm(c.u0)
           << (c.image_trivial ? " (trivial image)"
                               : c.image_perfect ? " (perfect image)"
                                                 : " (non-perfect image)");
    }
    os << "\n";
  }
  os << "conclusion: "
     << (v.no_nontrivial_hom ? "NoNontrivialHom" : "Inconclusive") << "\n";
  return os.str();
}

}  // namespace twistindex
