#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// A graph with loops on the position set {1,...,6}, stored as a 21-bit mask
/// (6 loops + 15 unordered pairs). Used both for heaviness prescriptions and
/// for the heavy-pair signatures of concrete induced six-vertex paths.
class GammaPattern {
 public:
  GammaPattern() = default;
  static GammaPattern from_mask(std::uint32_t mask);
  static GammaPattern empty() { return GammaPattern(); }
  static GammaPattern full();

  /// Parses sorted two-digit tokens, e.g. "11,12,14". Whitespace is allowed
  /// around tokens; the empty string is the empty pattern.
  static GammaPattern parse(const std::string& text);
  std::string to_string() const;

  bool contains(int i, int j) const;
  GammaPattern& add(int i, int j);
  int edge_count() const;
  std::uint32_t mask() const { return mask_; }
  bool is_subset_of(const GammaPattern& o) const { return (mask_ & ~o.mask_) == 0; }
  bool intersects(const GammaPattern& o) const { return (mask_ & o.mask_) != 0; }

  /// Image under the position reversal i -> 7-i.
  GammaPattern symmetric_image() const;
  bool is_symmetrical() const { return symmetric_image().mask_ == mask_; }

  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const GammaPattern& o) const { return mask_ == o.mask_; }
  bool operator!=(const GammaPattern& o) const { return mask_ != o.mask_; }
  bool operator<(const GammaPattern& o) const { return mask_ < o.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

struct GammaConstants {
  GammaPattern gamma1, gamma2, gamma3;
};

/// The three prescription patterns whose subgraphs are exactly the
/// symmetrical patterns that guarantee hamiltonicity.
const GammaConstants& gamma_constants();

/// Positions at distance >= 2 along the path; prescribing it is the same as
/// the P6 Ore-type heaviness condition.
const GammaPattern& gamma_sigma();

/// All 4096 patterns fixed by the reversal involution, in a deterministic
/// order. The visitor returns false to stop.
void enumerate_symmetrical(const std::function<bool(const GammaPattern&)>& visit);
std::vector<GammaPattern> all_symmetrical();

/// True iff gamma is a subgraph of one of the three constants. Rejects
/// non-symmetrical input.
bool guarantees_hamiltonicity(const GammaPattern& gamma);

using P6HeavySignature = GammaPattern;

/// Positional heavy-pair signature of an induced six-vertex path embedding:
/// pair ij is present when d(v_i)+d(v_j) >= n, loops when 2 d(v_i) >= n.
/// Rejects embeddings that are not induced copies of P6.
P6HeavySignature heavy_signature(const Graph& g, const Embedding& e);

/// Signatures equal up to the reversal involution (both orientations of both
/// embeddings are considered).
bool essentially_same(const Graph& g, const Embedding& e1, const Embedding& e2);

/// Distinct signatures over all oriented induced P6 embeddings of g. The set
/// is closed under the reversal involution.
std::vector<P6HeavySignature> signature_classes(const Graph& g);

/// Every induced P6 has a heavy pair at a prescribed position in at least
/// one of its two orientations.
bool is_p6_gamma_heavy(const Graph& g, const GammaPattern& gamma);

/// An induced P6 embedding with no prescribed heavy pair in either
/// orientation; absent exactly when is_p6_gamma_heavy holds.
std::optional<Embedding> find_bad_p6(const Graph& g, const GammaPattern& gamma);

}  // namespace hamlab
