#include "twistindex/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twistindex/group_search.hpp"
#include "twistindex/stabilizer_chain.hpp"

namespace twistindex {

std::string census_fingerprint(const BraidHom& h) {
  std::ostringstream os;
  os << "type=" << cycle_type_to_string(h.image(1).cycle_type());
  os << ";orbits=[";
  auto blocks = orbits(h.images(), h.target_degree());
  std::vector<int> sizes;
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) os << ',';
    os << sizes[i];
  }
  os << "];order=" << order_to_string(group_order(h.images(), h.target_degree()));
  return os.str();
}

std::vector<CensusEntry> enumerate_transitive(int n, int k,
                                              const CensusOptions& opts) {
  if (n < 2 || k < 1) throw std::invalid_argument("need n >= 2 and k >= 1");
  if (opts.enforce_guard && (k > 10 || n > 8))
    throw GuardExceeded("enumerate_transitive guard: k <= 10 and n <= 8");

  struct Candidate {
    std::vector<Perm> images;
    std::string fingerprint;
  };
  std::vector<Candidate> found;
  // fingerprint -> indices into `found`, for cheap conjugacy bucketing
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::size_t leaves = 0;

  auto record = [&](const std::vector<Perm>& images) {
    if (++leaves > opts.leaf_budget)
      throw BudgetExceeded("enumerate_transitive leaf budget exceeded");
    if (orbits(images, k).size() != 1) return;
    BraidHom h = BraidHom::create(n, k, images);
    Candidate cand{images, census_fingerprint(h)};
    for (std::size_t idx : buckets[cand.fingerprint])
      if (simultaneous_conjugator(found[idx].images, cand.images)) return;
    buckets[cand.fingerprint].push_back(found.size());
    found.push_back(std::move(cand));
  };

  for (const auto& [type, rep] : class_reps(k)) {
    if (rep.is_identity() && k > 1) continue;  // never transitive
    const std::vector<Perm> cls = conjugacy_class(rep);
    std::vector<Perm> tuple{rep};
    auto dfs = [&](auto&& self) -> void {
      if (static_cast<int>(tuple.size()) == n - 1) {
        record(tuple);
        return;
      }
      for (const Perm& c : cls) {
        if (!c.braids_with(tuple.back())) continue;
        bool ok = true;
        for (std::size_t t = 0; t + 1 < tuple.size(); ++t)
          if (!c.commutes_with(tuple[t])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        tuple.push_back(c);
        self(self);
        tuple.pop_back();
      }
    };
    if (n == 2) {
      record(tuple);
    } else {
      dfs(dfs);
    }
  }

  std::vector<CensusEntry> out;
  for (auto& cand : found) {
    BraidHom h = BraidHom::create(n, k, std::move(cand.images));
    HomLabel label = classify(h).label;
    out.push_back({std::move(h), std::move(label), std::move(cand.fingerprint)});
  }
  std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
    if (a.fingerprint != b.fingerprint) return a.fingerprint < b.fingerprint;
    return a.rep.images() < b.rep.images();
  });
  return out;
}

int count_exceptional(int n) {
  if (n < 4 || n > 6)
    throw GuardExceeded("count_exceptional guard: n in {4, 5, 6}");
  int count = 0;
  for (const CensusEntry& e : enumerate_transitive(n, n))
    if (e.label.kind != HomLabel::Kind::Cyclic &&
        e.label.kind != HomLabel::Kind::Standard)
      ++count;
  return count;
}

nlohmann::json census_entry_to_json(const CensusEntry& e) {
  nlohmann::json j = hom_to_json(e.rep);
  j["label"] = label_to_json(e.label);
  j["label_text"] = e.label.to_string();
  j["fingerprint"] = e.fingerprint;
  return j;
}

}  // namespace twistindex
