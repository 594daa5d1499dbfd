#include "twistindex/group_search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "twistindex/stabilizer_chain.hpp"

namespace twistindex {
namespace {

// Backtracking search for bijections u of {0..deg-1} subject to
// equivariance constraints u*g == h*u. Assigning u(x) propagates along the
// orbit of x, so the branch factor lives on orbit representatives only.
class MapSearch {
 public:
  explicit MapSearch(int degree)
      : deg_(degree), uimg_(degree, -1), upre_(degree, -1) {}

  std::vector<std::pair<const Perm*, const Perm*>> pairs;  // (g, h)
  const CycleType* required_type = nullptr;
  const Perm* braid = nullptr;
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  bool first_only = false;

  bool overflow = false;
  std::vector<Perm> results;

  void run() { dfs(); }

 private:
  bool assign(int x0, int y0, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{x0, y0}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (uimg_[x] != -1) {
        if (uimg_[x] != y) return false;
        continue;
      }
      if (upre_[y] != -1) return false;
      uimg_[x] = y;
      upre_[y] = x;
      trail.push_back(x);
      for (const auto& [g, h] : pairs) queue.emplace_back((*g)(x), (*h)(y));
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      upre_[uimg_[*it]] = -1;
      uimg_[*it] = -1;
    }
  }

  // Partial-map pruning against required_type: every closed cycle must fit
  // the multiset, and every open chain must fit inside some remaining part.
  bool type_feasible() const {
    std::vector<int> remaining = *required_type;  // descending
    std::vector<char> visited(deg_, 0);
    std::vector<int> chains;
    for (int x = 0; x < deg_; ++x) {
      if (uimg_[x] == -1 || upre_[x] != -1) continue;  // chain starts only
      int len = 0, y = x;
      for (;;) {
        visited[y] = 1;
        ++len;
        if (uimg_[y] == -1) break;
        y = uimg_[y];
      }
      chains.push_back(len);
    }
    for (int x = 0; x < deg_; ++x) {
      if (uimg_[x] == -1 || visited[x]) continue;
      int len = 0, y = x;  // closed cycle
      do {
        visited[y] = 1;
        ++len;
        y = uimg_[y];
      } while (y != x);
      auto it = std::find(remaining.begin(), remaining.end(), len);
      if (it == remaining.end()) return false;
      remaining.erase(it);
    }
    const int max_part = remaining.empty() ? 0 : remaining.front();
    for (int len : chains)
      if (len > max_part) return false;
    return true;
  }

  void dfs() {
    if (overflow || (first_only && !results.empty())) return;
    int x = 0;
    while (x < deg_ && uimg_[x] != -1) ++x;
    if (x == deg_) {
      std::vector<uint8_t> img(uimg_.begin(), uimg_.end());
      Perm u = Perm::from_images(std::move(img));
      if (required_type && u.cycle_type() != *required_type) return;
      if (braid && !u.braids_with(*braid)) return;
      if (results.size() >= cap) {
        overflow = true;
        return;
      }
      results.push_back(std::move(u));
      return;
    }
    std::vector<int> trail;
    for (int y = 0; y < deg_; ++y) {
      if (upre_[y] != -1) continue;
      trail.clear();
      if (assign(x, y, trail) && (!required_type || type_feasible())) dfs();
      undo(trail);
      if (overflow || (first_only && !results.empty())) return;
    }
  }

  int deg_;
  std::vector<int> uimg_, upre_;
};

CycleType normalized_type(CycleType t, int degree) {
  std::sort(t.begin(), t.end(), std::greater<int>());
  int sum = 0;
  for (int p : t) {
    if (p < 1) throw std::invalid_argument("cycle type part must be positive");
    sum += p;
  }
  if (sum != degree)
    throw std::invalid_argument("cycle type does not sum to the degree");
  return t;
}

}  // namespace

StagedSearchResult constrained_elements(const SearchSpec& spec) {
  if (spec.degree < 1 || spec.degree > Perm::kMaxDegree)
    throw std::invalid_argument("degree out of range");
  for (const Perm& c : spec.commute_with)
    if (c.degree() != spec.degree)
      throw std::invalid_argument("degree mismatch in commute_with");
  if (spec.braid_with && spec.braid_with->degree() != spec.degree)
    throw std::invalid_argument("degree mismatch in braid_with");
  std::optional<CycleType> type;
  if (spec.required_type)
    type = normalized_type(*spec.required_type, spec.degree);

  StagedSearchResult out;

  // Stage 1: commute-only survivors.
  MapSearch commute_stage(spec.degree);
  for (const Perm& c : spec.commute_with) commute_stage.pairs.push_back({&c, &c});
  commute_stage.cap = spec.candidate_cap;
  commute_stage.run();

  std::vector<Perm> commute_type;
  if (commute_stage.overflow) {
    out.commute_count = std::nullopt;
    if (!type) {
      out.budget_exceeded = true;
      return out;
    }
    // Stage 2 with the type bound folded into the backtracking.
    MapSearch typed_stage(spec.degree);
    for (const Perm& c : spec.commute_with) typed_stage.pairs.push_back({&c, &c});
    typed_stage.required_type = &*type;
    typed_stage.cap = spec.candidate_cap;
    typed_stage.run();
    if (typed_stage.overflow) {
      out.budget_exceeded = true;
      return out;
    }
    commute_type = std::move(typed_stage.results);
  } else {
    out.commute_count = commute_stage.results.size();
    if (type) {
      for (Perm& u : commute_stage.results)
        if (u.cycle_type() == *type) commute_type.push_back(std::move(u));
    } else {
      commute_type = std::move(commute_stage.results);
    }
  }
  out.commute_type_count = commute_type.size();

  if (spec.braid_with) {
    for (Perm& u : commute_type)
      if (u.braids_with(*spec.braid_with)) out.survivors.push_back(std::move(u));
  } else {
    out.survivors = std::move(commute_type);
  }
  std::sort(out.survivors.begin(), out.survivors.end());
  return out;
}

std::optional<Perm> simultaneous_conjugator(const std::vector<Perm>& a,
                                            const std::vector<Perm>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("tuple length mismatch");
  if (a.empty()) throw std::invalid_argument("empty tuples");
  const int degree = a.front().degree();
  for (const Perm& p : a)
    if (p.degree() != degree) throw std::invalid_argument("degree mismatch");
  for (const Perm& p : b)
    if (p.degree() != degree) throw std::invalid_argument("degree mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].cycle_type() != b[i].cycle_type()) return std::nullopt;

  MapSearch search(degree);
  for (std::size_t i = 0; i < a.size(); ++i) search.pairs.push_back({&a[i], &b[i]});
  search.first_only = true;
  search.run();
  if (search.results.empty()) return std::nullopt;
  return search.results.front();
}

std::vector<Perm> derived_subgroup(const std::vector<Perm>& gens, int degree) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("degree mismatch");
  std::vector<Perm> dgens;
  StabilizerChain chain = StabilizerChain::build(degree, {});
  auto add_if_new = [&](const Perm& c) {
    if (c.is_identity() || chain.contains(c)) return;
    dgens.push_back(c);
    chain = StabilizerChain::build(degree, dgens);
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      add_if_new(gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse());
    }
  // Normal closure under conjugation by the original generators.
  for (std::size_t head = 0; head < dgens.size(); ++head) {
    const Perm d = dgens[head];
    for (const Perm& g : gens) add_if_new(g * d * g.inverse());
  }
  return dgens;
}

bool is_perfect(const std::vector<Perm>& gens, int degree) {
  const GroupOrder whole = group_order(gens, degree);
  if (whole == 1) return true;
  return group_order(derived_subgroup(gens, degree), degree) == whole;
}

std::vector<std::pair<CycleType, Perm>> class_reps(int degree) {
  if (degree < 1 || degree > Perm::kMaxDegree)
    throw std::invalid_argument("degree out of range");
  std::vector<std::pair<CycleType, Perm>> out;
  CycleType parts;
  auto emit = [&] {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int p : parts) {
      std::vector<int> cyc(p);
      std::iota(cyc.begin(), cyc.end(), next);
      next += p;
      if (p > 1) cycles.push_back(std::move(cyc));
    }
    out.emplace_back(parts, perm_from_cycles(degree, cycles));
  };
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, degree, degree);
  return out;
}

std::vector<Perm> conjugacy_class(const Perm& rep) {
  const int degree = rep.degree();
  std::vector<Perm> adjacent;
  for (int i = 0; i + 1 < degree; ++i)
    adjacent.push_back(perm_from_cycles(degree, {{i + 1, i + 2}}));
  std::unordered_set<Perm, PermHash> seen{rep};
  std::vector<Perm> queue{rep};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Perm p = queue[head];
    for (const Perm& t : adjacent) {
      Perm q = p.conjugated_by(t);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Perm> all_permutations(int degree) {
  if (degree < 1 || degree > 9)
    throw std::invalid_argument("all_permutations guard: degree <= 9");
  std::vector<uint8_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace twistindex
