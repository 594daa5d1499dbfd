#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "twistindex/perm.hpp"

namespace twistindex {

struct RelationViolation {
  enum class Kind { Commute, Braid };
  int i = 0, j = 0;  // 1-based generator indices
  Kind kind = Kind::Commute;
};

// Empty iff the images satisfy the braid-group presentation relations.
std::vector<RelationViolation> check_relations(int n, int k,
                                               const std::vector<Perm>& images);

// Degree-k images of the braid generators sigma_1..sigma_{n-1}. The defining
// relations are enforced at construction.
class BraidHom {
 public:
  static BraidHom create(int n, int k, std::vector<Perm> images);

  int strands() const { return n_; }
  int target_degree() const { return k_; }
  const Perm& image(int i) const { return images_[i - 1]; }  // sigma_i, 1-based
  const std::vector<Perm>& images() const { return images_; }

  bool is_cyclic() const;     // all generator images equal
  bool is_transitive() const;

  bool operator==(const BraidHom&) const = default;

 private:
  BraidHom() = default;
  int n_ = 2, k_ = 1;
  std::vector<Perm> images_;
};

BraidHom cyclic_hom(const Perm& w, int n);
BraidHom standard_hom(int n);
BraidHom lin_hom(int variant, int n);  // variant in {1,2,3}, degree 2n
BraidHom product_hom(const BraidHom& h1, const BraidHom& h2);
BraidHom conjugate_hom(const BraidHom& h, const Perm& u);

struct Constituent {
  std::vector<int> block;  // 0-based points of the orbit, ascending
  BraidHom hom;            // restriction relabeled to 0..block.size()-1
};
std::vector<Constituent> constituents(const BraidHom& h);

struct HomLabel {
  enum class Kind { Cyclic, Standard, Lin, Product, Exceptional };
  Kind kind = Kind::Exceptional;
  CycleType cyclic_type;  // Kind::Cyclic
  int lin_variant = 0;    // Kind::Lin
  std::vector<std::pair<int, HomLabel>> factors;  // Kind::Product: (size, label)

  bool operator==(const HomLabel&) const = default;
  std::string to_string() const;
};

struct Classification {
  HomLabel label;
  bool small_n = false;  // n < 7: taxonomy not exhaustive
};
Classification classify(const BraidHom& h);

nlohmann::json hom_to_json(const BraidHom& h);
BraidHom hom_from_json(const nlohmann::json& j);
nlohmann::json label_to_json(const HomLabel& l);

}  // namespace twistindex
