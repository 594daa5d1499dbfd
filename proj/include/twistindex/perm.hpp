#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twistindex {

// Cycle lengths in descending order; fixed points appear as parts of size 1.
using CycleType = std::vector<int>;

std::string cycle_type_to_string(const CycleType& t);

// A bijection on {0, ..., degree-1}. All external text (cycle notation,
// JSON) is 1-based; the internal array is 0-based.
class Perm {
public:
  static constexpr int kMaxDegree = 64;

  Perm() = default;
  explicit Perm(int degree);  // identity
  static Perm from_images(std::vector<uint8_t> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<uint8_t>& images() const { return img_; }

  bool is_identity() const;

  // (p*q)(x) = p(q(x)): right-to-left application, fixed globally.
  Perm operator*(const Perm& q) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& u) const;  // u * p * u^-1
  bool commutes_with(const Perm& q) const;
  bool braids_with(const Perm& q) const;  // p q p == q p q

  CycleType cycle_type() const;
  int sign() const;                  // +1 or -1
  uint64_t support_mask() const;     // bit x set iff x is moved
  std::vector<int> support() const;  // moved points, ascending, 0-based
  int smallest_moved() const;        // degree() if identity

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

private:
  std::vector<uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

// Builds a permutation from 1-based disjoint cycles, e.g. {{1,10,9,2}}.
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

// Parses disjoint-cycle notation with 1-based points ("(1,10,9,2)(3,5)"),
// or the token "id". Throws std::invalid_argument on malformed input,
// repeated points, or points out of range.
Perm parse_perm(const std::string& text, int degree);

// Emits cycles sorted by smallest moved point, each cycle starting at its
// smallest point; the identity formats as "id".
std::string format_perm(const Perm& p);

// Orbit partition of {0..degree-1} under the group generated by gens.
// Blocks are sorted internally and by smallest element.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree);

}  // namespace twistindex
