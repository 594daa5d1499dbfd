#include "twistindex/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twistindex {

std::string cycle_type_to_string(const CycleType& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ']';
  return os.str();
}

Perm::Perm(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree out of range");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<uint8_t> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("permutation degree out of range");
  uint64_t seen = 0;
  for (uint8_t v : images) {
    if (v >= n || (seen >> v) & 1)
      throw std::invalid_argument("image array is not a bijection");
    seen |= uint64_t{1} << v;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::operator*(const Perm& q) const {
  if (degree() != q.degree())
    throw std::invalid_argument("degree mismatch in composition");
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < degree(); ++x) r.img_[x] = img_[q.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < degree(); ++x) r.img_[img_[x]] = static_cast<uint8_t>(x);
  return r;
}

Perm Perm::conjugated_by(const Perm& u) const {
  if (degree() != u.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  Perm r;
  r.img_.resize(img_.size());
  for (int x = 0; x < degree(); ++x) r.img_[u.img_[x]] = u.img_[img_[x]];
  return r;
}

bool Perm::commutes_with(const Perm& q) const {
  if (degree() != q.degree())
    throw std::invalid_argument("degree mismatch");
  for (int x = 0; x < degree(); ++x)
    if (img_[q.img_[x]] != q.img_[img_[x]]) return false;
  return true;
}

bool Perm::braids_with(const Perm& q) const {
  if (degree() != q.degree())
    throw std::invalid_argument("degree mismatch");
  for (int x = 0; x < degree(); ++x)
    if (img_[q.img_[img_[x]]] != q.img_[img_[q.img_[x]]]) return false;
  return true;
}

CycleType Perm::cycle_type() const {
  CycleType t;
  uint64_t seen = 0;
  for (int x = 0; x < degree(); ++x) {
    if ((seen >> x) & 1) continue;
    int len = 0, y = x;
    do {
      seen |= uint64_t{1} << y;
      y = img_[y];
      ++len;
    } while (y != x);
    t.push_back(len);
  }
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

int Perm::sign() const {
  int cycles = 0;
  uint64_t seen = 0;
  for (int x = 0; x < degree(); ++x) {
    if ((seen >> x) & 1) continue;
    ++cycles;
    for (int y = x; !((seen >> y) & 1); y = img_[y]) seen |= uint64_t{1} << y;
  }
  return ((degree() - cycles) % 2 == 0) ? 1 : -1;
}

uint64_t Perm::support_mask() const {
  uint64_t m = 0;
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) m |= uint64_t{1} << x;
  return m;
}

std::vector<int> Perm::support() const {
  std::vector<int> s;
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) s.push_back(x);
  return s;
}

int Perm::smallest_moved() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return x;
  return degree();
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ p.degree();
  for (uint8_t v : p.images()) h = h * 0x100000001b3ull ^ v;
  return h;
}

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm id(degree);
  std::vector<uint8_t> img(id.images());
  uint64_t seen = 0;
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree)
        throw std::invalid_argument("cycle point out of range");
      if ((seen >> (a - 1)) & 1)
        throw std::invalid_argument("repeated point in cycles");
      seen |= uint64_t{1} << (a - 1);
      img[a - 1] = static_cast<uint8_t>(b - 1);
    }
  }
  return Perm::from_images(std::move(img));
}

Perm parse_perm(const std::string& text, int degree) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing text after 'id'");
    return Perm(degree);
  }
  std::vector<std::vector<int>> cycles;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("expected '('");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("expected a point");
      cyc.push_back(std::stoi(text.substr(start, pos - start)));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ')'");
    }
    if (cyc.empty()) throw std::invalid_argument("empty cycle");
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (cycles.empty()) throw std::invalid_argument("empty permutation text");
  return perm_from_cycles(degree, cycles);
}

std::string format_perm(const Perm& p) {
  std::ostringstream os;
  uint64_t seen = 0;
  bool any = false;
  for (int x = 0; x < p.degree(); ++x) {
    if (((seen >> x) & 1) || p(x) == x) continue;
    any = true;
    os << '(';
    int y = x;
    bool first = true;
    do {
      if (!first) os << ',';
      first = false;
      os << (y + 1);
      seen |= uint64_t{1} << y;
      y = p(y);
    } while (y != x);
    os << ')';
  }
  return any ? os.str() : "id";
}

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("degree mismatch in orbits");
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : gens)
    for (int x = 0; x < degree; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> blocks(degree);
  for (int x = 0; x < degree; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& b : blocks)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

}  // namespace twistindex
