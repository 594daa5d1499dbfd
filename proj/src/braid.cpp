#include "twistindex/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "twistindex/group_search.hpp"

namespace twistindex {

std::vector<RelationViolation> check_relations(int n, int k,
                                               const std::vector<Perm>& images) {
  if (n < 2) throw std::invalid_argument("need at least 2 strands");
  if (static_cast<int>(images.size()) != n - 1)
    throw std::invalid_argument("expected n-1 generator images");
  for (const Perm& p : images)
    if (p.degree() != k) throw std::invalid_argument("image degree mismatch");
  std::vector<RelationViolation> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) {
      if (j - i >= 2) {
        if (!images[i - 1].commutes_with(images[j - 1]))
          out.push_back({i, j, RelationViolation::Kind::Commute});
      } else {
        if (!images[i - 1].braids_with(images[j - 1]))
          out.push_back({i, j, RelationViolation::Kind::Braid});
      }
    }
  return out;
}

BraidHom BraidHom::create(int n, int k, std::vector<Perm> images) {
  auto violations = check_relations(n, k, images);
  if (!violations.empty())
    throw std::invalid_argument("images violate the braid relations");
  BraidHom h;
  h.n_ = n;
  h.k_ = k;
  h.images_ = std::move(images);
  return h;
}

bool BraidHom::is_cyclic() const {
  return std::all_of(images_.begin(), images_.end(),
                     [&](const Perm& p) { return p == images_.front(); });
}

bool BraidHom::is_transitive() const {
  return orbits(images_, k_).size() == 1;
}

BraidHom cyclic_hom(const Perm& w, int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 strands");
  return BraidHom::create(n, w.degree(), std::vector<Perm>(n - 1, w));
}

BraidHom standard_hom(int n) {
  std::vector<Perm> images;
  for (int i = 1; i <= n - 1; ++i)
    images.push_back(perm_from_cycles(n, {{i, i + 1}}));
  return BraidHom::create(n, n, std::move(images));
}

BraidHom lin_hom(int variant, int n) {
  if (variant < 1 || variant > 3)
    throw std::invalid_argument("lin_hom variant must be 1, 2 or 3");
  if (n < 2) throw std::invalid_argument("need at least 2 strands");
  const int k = 2 * n;
  std::vector<Perm> images;
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<std::vector<int>> cycles;
    if (variant != 1) {
      for (int j = 1; j <= i - 1; ++j) cycles.push_back({j, n + j});
      for (int j = i + 2; j <= n; ++j) cycles.push_back({j, n + j});
    }
    if (variant == 3) {
      cycles.push_back({i, n + i + 1});
      cycles.push_back({i + 1, n + i});
    } else {
      cycles.push_back({i, n + i + 1, n + i, i + 1});
    }
    images.push_back(perm_from_cycles(k, cycles));
  }
  return BraidHom::create(n, k, std::move(images));
}

BraidHom product_hom(const BraidHom& h1, const BraidHom& h2) {
  if (h1.strands() != h2.strands())
    throw std::invalid_argument("strand-count mismatch in product");
  const int k1 = h1.target_degree(), k2 = h2.target_degree();
  std::vector<Perm> images;
  for (int i = 1; i <= h1.strands() - 1; ++i) {
    std::vector<uint8_t> img(k1 + k2);
    for (int x = 0; x < k1; ++x) img[x] = static_cast<uint8_t>(h1.image(i)(x));
    for (int x = 0; x < k2; ++x)
      img[k1 + x] = static_cast<uint8_t>(k1 + h2.image(i)(x));
    images.push_back(Perm::from_images(std::move(img)));
  }
  return BraidHom::create(h1.strands(), k1 + k2, std::move(images));
}

BraidHom conjugate_hom(const BraidHom& h, const Perm& u) {
  std::vector<Perm> images;
  for (const Perm& p : h.images()) images.push_back(p.conjugated_by(u));
  return BraidHom::create(h.strands(), h.target_degree(), std::move(images));
}

std::vector<Constituent> constituents(const BraidHom& h) {
  std::vector<Constituent> out;
  for (const auto& block : orbits(h.images(), h.target_degree())) {
    std::vector<int> local(h.target_degree(), -1);
    for (std::size_t i = 0; i < block.size(); ++i) local[block[i]] = static_cast<int>(i);
    std::vector<Perm> images;
    for (const Perm& p : h.images()) {
      std::vector<uint8_t> img(block.size());
      for (int x : block) img[local[x]] = static_cast<uint8_t>(local[p(x)]);
      images.push_back(Perm::from_images(std::move(img)));
    }
    out.push_back({block, BraidHom::create(h.strands(),
                                           static_cast<int>(block.size()),
                                           std::move(images))});
  }
  return out;
}

std::string HomLabel::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "Cyclic(" + cycle_type_to_string(cyclic_type) + ")";
    case Kind::Standard:
      return "Standard";
    case Kind::Lin:
      return "Lin(" + std::to_string(lin_variant) + ")";
    case Kind::Exceptional:
      return "Exceptional";
    case Kind::Product: {
      std::ostringstream os;
      os << "Product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " x ";
        os << factors[i].second.to_string();
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

namespace {

HomLabel label_transitive_block(const BraidHom& b) {
  if (b.is_cyclic()) {
    HomLabel l;
    l.kind = HomLabel::Kind::Cyclic;
    l.cyclic_type = b.image(1).cycle_type();
    return l;
  }
  const int n = b.strands();
  if (b.target_degree() == n &&
      simultaneous_conjugator(b.images(), standard_hom(n).images())) {
    HomLabel l;
    l.kind = HomLabel::Kind::Standard;
    return l;
  }
  if (b.target_degree() == 2 * n) {
    for (int j = 1; j <= 3; ++j) {
      if (simultaneous_conjugator(b.images(), lin_hom(j, n).images())) {
        HomLabel l;
        l.kind = HomLabel::Kind::Lin;
        l.lin_variant = j;
        return l;
      }
    }
  }
  HomLabel l;
  l.kind = HomLabel::Kind::Exceptional;
  return l;
}

}  // namespace

Classification classify(const BraidHom& h) {
  Classification c;
  c.small_n = h.strands() < 7;
  // Cyclic blocks are merged into one cyclic factor: a product of cyclic
  // homomorphisms is itself cyclic, with the union of the cycle types.
  CycleType cyclic_parts;
  std::vector<std::pair<int, HomLabel>> others;
  for (const auto& blk : constituents(h)) {
    HomLabel l = label_transitive_block(blk.hom);
    if (l.kind == HomLabel::Kind::Cyclic)
      cyclic_parts.insert(cyclic_parts.end(), l.cyclic_type.begin(),
                          l.cyclic_type.end());
    else
      others.emplace_back(static_cast<int>(blk.block.size()), std::move(l));
  }
  std::sort(cyclic_parts.begin(), cyclic_parts.end(), std::greater<int>());
  if (others.empty()) {
    c.label.kind = HomLabel::Kind::Cyclic;
    c.label.cyclic_type = std::move(cyclic_parts);
    return c;
  }
  if (cyclic_parts.empty() && others.size() == 1) {
    c.label = std::move(others.front().second);
    return c;
  }
  c.label.kind = HomLabel::Kind::Product;
  c.label.factors = std::move(others);
  if (!cyclic_parts.empty()) {
    HomLabel cyc;
    cyc.kind = HomLabel::Kind::Cyclic;
    int size = 0;
    for (int p : cyclic_parts) size += p;
    cyc.cyclic_type = std::move(cyclic_parts);
    c.label.factors.emplace_back(size, std::move(cyc));
  }
  return c;
}

nlohmann::json hom_to_json(const BraidHom& h) {
  nlohmann::json images = nlohmann::json::array();
  for (const Perm& p : h.images()) {
    nlohmann::json row = nlohmann::json::array();
    for (int x = 0; x < p.degree(); ++x) row.push_back(p(x) + 1);
    images.push_back(std::move(row));
  }
  return {{"n", h.strands()}, {"k", h.target_degree()}, {"images", images}};
}

BraidHom hom_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  std::vector<Perm> images;
  for (const auto& row : j.at("images")) {
    std::vector<uint8_t> img(row.size());
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("image row length does not match k");
    for (std::size_t x = 0; x < row.size(); ++x) {
      const int v = row[x].get<int>();
      if (v < 1 || v > k) throw std::invalid_argument("image point out of range");
      img[x] = static_cast<uint8_t>(v - 1);
    }
    images.push_back(Perm::from_images(std::move(img)));
  }
  return BraidHom::create(n, k, std::move(images));
}

nlohmann::json label_to_json(const HomLabel& l) {
  nlohmann::json j;
  switch (l.kind) {
    case HomLabel::Kind::Cyclic:
      j["kind"] = "cyclic";
      j["cycle_type"] = l.cyclic_type;
      break;
    case HomLabel::Kind::Standard:
      j["kind"] = "standard";
      break;
    case HomLabel::Kind::Lin:
      j["kind"] = "lin";
      j["variant"] = l.lin_variant;
      break;
    case HomLabel::Kind::Exceptional:
      j["kind"] = "exceptional";
      break;
    case HomLabel::Kind::Product: {
      j["kind"] = "product";
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& [size, sub] : l.factors)
        factors.push_back({{"size", size}, {"label", label_to_json(sub)}});
      j["factors"] = std::move(factors);
      break;
    }
  }
  return j;
}

}  // namespace twistindex
