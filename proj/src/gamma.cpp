#include "hamlab/gamma.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamlab/conditions.hpp"

namespace hamlab {

namespace {

// Slot layout: loops 11..66 at bits 0..5, then pairs (i<j) in lexicographic
// order at bits 6..20.
int slot_of(int i, int j) {
  if (i < 1 || i > 6 || j < 1 || j > 6) throw std::invalid_argument("gamma position out of 1..6");
  if (i > j) std::swap(i, j);
  if (i == j) return i - 1;
  static constexpr int pair_base[7] = {0, 0, 5, 9, 12, 14, 15};
  // pairs with first coordinate i start at 6 + pair_base[i]
  return 6 + pair_base[i] + (j - i - 1);
}

std::pair<int, int> slot_pair(int slot) {
  if (slot < 6) return {slot + 1, slot + 1};
  int s = slot - 6;
  for (int i = 1; i <= 5; ++i) {
    int cnt = 6 - i;
    if (s < cnt) return {i, i + s + 1};
    s -= cnt;
  }
  throw std::logic_error("bad slot");
}

std::uint32_t mirror_mask(std::uint32_t mask) {
  std::uint32_t out = 0;
  for (int slot = 0; slot < 21; ++slot) {
    if (!(mask >> slot & 1)) continue;
    auto [i, j] = slot_pair(slot);
    out |= std::uint32_t{1} << slot_of(7 - i, 7 - j);
  }
  return out;
}

}  // namespace

GammaPattern GammaPattern::from_mask(std::uint32_t mask) {
  if (mask >> 21) throw std::invalid_argument("gamma mask out of range");
  GammaPattern g;
  g.mask_ = mask;
  return g;
}

GammaPattern GammaPattern::full() { return from_mask((std::uint32_t{1} << 21) - 1); }

bool GammaPattern::contains(int i, int j) const { return mask_ >> slot_of(i, j) & 1; }

GammaPattern& GammaPattern::add(int i, int j) {
  mask_ |= std::uint32_t{1} << slot_of(i, j);
  return *this;
}

int GammaPattern::edge_count() const { return std::popcount(mask_); }

GammaPattern GammaPattern::symmetric_image() const { return from_mask(mirror_mask(mask_)); }

std::vector<std::pair<int, int>> GammaPattern::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

GammaPattern GammaPattern::parse(const std::string& text) {
  GammaPattern g;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    if (token.size() != 2 || token[0] < '1' || token[0] > '6' || token[1] < '1' || token[1] > '6')
      throw std::invalid_argument("bad gamma token \"" + token + "\" (expected two digits 1..6)");
    g.add(token[0] - '0', token[1] - '0');
  }
  return g;
}

std::string GammaPattern::to_string() const {
  std::string out;
  for (auto [i, j] : edge_list()) {
    if (!out.empty()) out += ',';
    out += static_cast<char>('0' + i);
    out += static_cast<char>('0' + j);
  }
  return out;
}

const GammaConstants& gamma_constants() {
  static const GammaConstants c = [] {
    GammaConstants k;
    k.gamma1 = GammaPattern::parse("14,15,16,24,25,26,34,35,36");
    k.gamma2 = GammaPattern::parse("11,12,14,15,16,25,26,36,56,66");
    k.gamma3 = GammaPattern::parse("13,14,15,25,26,36,46");
    return k;
  }();
  return c;
}

const GammaPattern& gamma_sigma() {
  static const GammaPattern s = [] {
    GammaPattern g;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 2; j <= 6; ++j) g.add(i, j);
    return g;
  }();
  return s;
}

void enumerate_symmetrical(const std::function<bool(const GammaPattern&)>& visit) {
  // Orbits of the reversal involution on the 21 slots: 3 fixed pairs and 9
  // two-element orbits, so 4096 symmetrical patterns.
  static const std::vector<std::uint32_t> orbits = [] {
    std::vector<std::uint32_t> out;
    std::uint32_t seen = 0;
    for (int slot = 0; slot < 21; ++slot) {
      if (seen >> slot & 1) continue;
      std::uint32_t orbit = std::uint32_t{1} << slot;
      orbit |= mirror_mask(orbit);
      seen |= orbit;
      out.push_back(orbit);
    }
    return out;
  }();
  for (std::uint32_t bits = 0; bits < (1u << orbits.size()); ++bits) {
    std::uint32_t mask = 0;
    for (size_t k = 0; k < orbits.size(); ++k)
      if (bits >> k & 1) mask |= orbits[k];
    if (!visit(GammaPattern::from_mask(mask))) return;
  }
}

std::vector<GammaPattern> all_symmetrical() {
  std::vector<GammaPattern> out;
  out.reserve(4096);
  enumerate_symmetrical([&](const GammaPattern& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

bool guarantees_hamiltonicity(const GammaPattern& gamma) {
  if (!gamma.is_symmetrical()) throw std::invalid_argument("pattern not symmetrical");
  const auto& c = gamma_constants();
  return gamma.is_subset_of(c.gamma1) || gamma.is_subset_of(c.gamma2) || gamma.is_subset_of(c.gamma3);
}

P6HeavySignature heavy_signature(const Graph& g, const Embedding& e) {
  if (!is_induced_embedding(g, patterns().p6, e))
    throw std::invalid_argument("embedding is not an induced P6");
  GammaPattern sig;
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j)
      if (g.degree(e.map[static_cast<size_t>(i - 1)]) + g.degree(e.map[static_cast<size_t>(j - 1)]) >= g.n())
        sig.add(i, j);
  return sig;
}

bool essentially_same(const Graph& g, const Embedding& e1, const Embedding& e2) {
  P6HeavySignature s1 = heavy_signature(g, e1);
  P6HeavySignature s2 = heavy_signature(g, e2);
  return s1 == s2 || s1 == s2.symmetric_image();
}

std::vector<P6HeavySignature> signature_classes(const Graph& g) {
  std::set<std::uint32_t> masks;
  enumerate_induced(g, patterns().p6, [&](const Embedding& e) {
    masks.insert(heavy_signature(g, e).mask());
    return true;
  });
  std::vector<P6HeavySignature> out;
  for (auto m : masks) out.push_back(GammaPattern::from_mask(m));
  return out;
}

bool is_p6_gamma_heavy(const Graph& g, const GammaPattern& gamma) {
  // An embedding counts as satisfied when either of its two labelings hits a
  // prescribed pair, i.e. when its signature meets gamma or gamma's mirror.
  GammaPattern either = GammaPattern::from_mask(gamma.mask() | gamma.symmetric_image().mask());
  for (const auto& sig : signature_classes(g))
    if (!sig.intersects(either)) return false;
  return true;
}

std::optional<Embedding> find_bad_p6(const Graph& g, const GammaPattern& gamma) {
  GammaPattern either = GammaPattern::from_mask(gamma.mask() | gamma.symmetric_image().mask());
  std::optional<Embedding> out;
  enumerate_induced(g, patterns().p6, [&](const Embedding& e) {
    if (!heavy_signature(g, e).intersects(either)) {
      out = e;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace hamlab
