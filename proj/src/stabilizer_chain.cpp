#include "twistindex/stabilizer_chain.hpp"

#include <set>
#include <stdexcept>

namespace twistindex {

std::string order_to_string(GroupOrder n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  return s;
}

StabilizerChain::StabilizerChain(int degree) : degree_(degree) {
  levels_.resize(degree);
  for (int j = 0; j < degree; ++j) {
    levels_[j].base_point = j;
    levels_[j].transversal.resize(degree);
    levels_[j].transversal[j] = Perm(degree);
    levels_[j].orbit.push_back(j);
  }
}

StabilizerChain StabilizerChain::build(int degree, const std::vector<Perm>& gens) {
  if (degree < 1 || degree > Perm::kMaxDegree)
    throw std::invalid_argument("degree out of range");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("degree mismatch in build_chain");
  StabilizerChain chain(degree);
  for (const Perm& g : gens) chain.add_strong_gen(g);
  chain.close();
  return chain;
}

void StabilizerChain::add_strong_gen(const Perm& g) {
  if (g.is_identity()) return;
  const int id = static_cast<int>(strong_.size());
  strong_.push_back(g);
  const int f = g.smallest_moved();
  // g fixes points 0..f-1, so it generates at levels 0..f.
  for (int j = 0; j <= f && j < degree_; ++j) {
    levels_[j].gen_ids.push_back(id);
    extend_orbit(j);
  }
}

void StabilizerChain::extend_orbit(int level) {
  Level& lv = levels_[level];
  // BFS that only appends: existing witnesses are never replaced, so
  // Schreier-generator bookkeeping stays valid across extensions.
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const int p = lv.orbit[head];
    for (int gid : lv.gen_ids) {
      const int q = strong_[gid](p);
      if (!lv.transversal[q]) {
        lv.transversal[q] = strong_[gid] * (*lv.transversal[p]);
        lv.orbit.push_back(q);
      }
    }
  }
}

std::pair<Perm, int> StabilizerChain::sift(int from, Perm p) const {
  for (int j = from; j < static_cast<int>(levels_.size()); ++j) {
    const int image = p(levels_[j].base_point);
    if (!levels_[j].transversal[image]) return {std::move(p), j};
    p = levels_[j].transversal[image]->inverse() * p;
  }
  return {std::move(p), static_cast<int>(levels_.size())};
}

void StabilizerChain::close() {
  // Fixpoint over Schreier generators; processed (point, gen) pairs are
  // remembered per level, valid because orbits and gen lists only grow.
  std::vector<std::set<std::pair<int, int>>> processed(levels_.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < static_cast<int>(levels_.size()); ++j) {
      Level& lv = levels_[j];
      for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        const int p = lv.orbit[head];
        for (std::size_t gi = 0; gi < lv.gen_ids.size(); ++gi) {
          const int gid = lv.gen_ids[gi];
          if (!processed[j].insert({p, gid}).second) continue;
          const Perm& s = strong_[gid];
          const Perm schreier =
              lv.transversal[s(p)]->inverse() * s * (*lv.transversal[p]);
          if (schreier.is_identity()) continue;
          auto [residue, stuck] = sift(j + 1, schreier);
          if (!residue.is_identity()) {
            add_strong_gen(residue);
            changed = true;
          }
          (void)stuck;
        }
      }
    }
  }
}

GroupOrder StabilizerChain::order() const {
  GroupOrder n = 1;
  for (const Level& lv : levels_) n *= static_cast<GroupOrder>(lv.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in member");
  auto [residue, stuck] = sift(0, p);
  (void)stuck;
  return residue.is_identity();
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  for (const Level& lv : levels_) b.push_back(lv.base_point);
  return b;
}

GroupOrder group_order(const std::vector<Perm>& gens, int degree) {
  return StabilizerChain::build(degree, gens).order();
}

}  // namespace twistindex
