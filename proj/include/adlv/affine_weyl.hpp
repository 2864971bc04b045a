#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "adlv/root_system.hpp"

namespace adlv {

/// Element t_lambda * w of the affine Weyl group W~ = W x Q^vee.
/// lambda is a coweight (translation part), w indexes the finite part.
struct AffineWeylElt {
  Coweight lambda;
  int w = 0;
};

inline bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
  return a.w == b.w && a.lambda.size() == b.lambda.size() &&
         (a.lambda.array() == b.lambda.array()).all();
}
inline bool operator!=(const AffineWeylElt& a, const AffineWeylElt& b) {
  return !(a == b);
}

struct AffineEltHash {
  std::size_t operator()(const AffineWeylElt& x) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(x.w));
    for (Eigen::Index i = 0; i < x.lambda.size(); ++i)
      mix(static_cast<std::uint64_t>(x.lambda(i)));
    return static_cast<std::size_t>(h);
  }
};

/// Affine Weyl group machinery over a fixed root system: group arithmetic,
/// Iwahori-Matsumoto length, reduced words, alcove geometry, and the wall
/// data used by the gallery folding automaton.
///
/// Generators are indexed 0..rank: index i >= 1 is the finite simple
/// reflection s_i, index 0 is the affine reflection s_0 = t_{theta^vee} s_theta.
/// Right multiplication by generator i moves an alcove across its type-i wall.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootSystem> rs);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  int num_generators() const { return rank() + 1; }

  AffineWeylElt identity() const;
  AffineWeylElt translation(const Coweight& nu) const;
  AffineWeylElt from_finite(int w) const;
  AffineWeylElt multiply(const AffineWeylElt& x, const AffineWeylElt& y) const;
  AffineWeylElt inverse(const AffineWeylElt& x) const;
  AffineWeylElt right_mult_gen(const AffineWeylElt& x, int i) const;
  AffineWeylElt left_mult_gen(int i, const AffineWeylElt& x) const;
  AffineWeylElt from_word(std::span<const int> word) const;

  /// Iwahori-Matsumoto length: the number of affine hyperplanes separating
  /// the base alcove from its image.
  Int im_length(const Coweight& lambda, int w) const;
  Int length(const AffineWeylElt& x) const { return im_length(x.lambda, x.w); }

  /// Greedy right-descent reduced word (smallest generator index first).
  std::vector<int> reduced_word(AffineWeylElt x) const;

  int eta1(const AffineWeylElt& x) const { return x.w; }
  /// The finite chamber containing the alcove of x: the unique u in W with
  /// barycenter(x) in u(C_0).
  int eta2(const AffineWeylElt& x) const;

  /// Exact rational barycenter of the alcove of x.
  RatVec barycenter(const AffineWeylElt& x) const;
  /// Per-positive-root floors: k_a < <alpha_a, barycenter> < k_a + 1.
  IntVec floor_vector(const AffineWeylElt& x) const;
  /// True iff for every positive root, the alcove of x and the base alcove
  /// are separated by {alpha = 0} or by {alpha = 1}.
  bool in_shrunken(const AffineWeylElt& x) const;

  /// True iff every reduced word for the finite element w uses all simple
  /// reflections.
  bool support_full(int w) const;
  int finite_order(int w) const;

  std::vector<Int> power_lengths(const AffineWeylElt& x, int n_max) const;

  /// Wall data for the step z -> z*s_i (independent of the translation part
  /// except through the finite part of z): the wall's positive-root index,
  /// whether the pairing with that root increases along the step, and the
  /// finite part of z*s_i.
  struct Edge {
    int next_w;
    int wall_root;
    bool ascending;
  };
  const Edge& edge(int w, int i) const {
    return edges_[static_cast<std::size_t>(w) * num_generators_ + i];
  }

  struct EnumElt {
    AffineWeylElt x;
    int len;
    std::vector<int> word;
  };
  /// All elements of length <= max_len, sorted by (length, word lex).
  std::vector<EnumElt> enumerate(int max_len) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  int num_generators_;
  std::vector<Edge> edges_;
};

}  // namespace adlv
