#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistindex/perm.hpp"

namespace twistindex {

using GroupOrder = unsigned __int128;

std::string order_to_string(GroupOrder n);

// Base-and-strong-generating-set structure for an exact permutation group.
// The base is the full point sequence 0, 1, ..., degree-1 in natural order;
// levels with singleton orbits are kept so the structure is deterministic.
class StabilizerChain {
public:
  static StabilizerChain build(int degree, const std::vector<Perm>& gens);

  int degree() const { return degree_; }
  GroupOrder order() const;
  bool contains(const Perm& p) const;
  std::vector<int> base() const;

private:
  struct Level {
    int base_point = 0;
    std::vector<int> gen_ids;                   // strong gens fixing all earlier base points
    std::vector<std::optional<Perm>> transversal;  // transversal[p]: u with u(base)=p
    std::vector<int> orbit;
  };

  explicit StabilizerChain(int degree);
  void add_strong_gen(const Perm& g);
  void extend_orbit(int level);
  // Strips p through levels starting at `from`; returns the residue and the
  // level where sifting stuck (levels_.size() if it ran through).
  std::pair<Perm, int> sift(int from, Perm p) const;
  void close();

  int degree_ = 0;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

// Convenience: order of the group generated by gens.
GroupOrder group_order(const std::vector<Perm>& gens, int degree);

}  // namespace twistindex
