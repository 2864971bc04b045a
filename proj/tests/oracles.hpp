#pragma once

// Independent test oracles: brute-force or first-principles computations
// kept deliberately separate from the library implementation paths.

#include <map>
#include <set>
#include <vector>

#include "adlv/affine_weyl.hpp"
#include "adlv/folding.hpp"

namespace oracles {

using namespace adlv;

/// Number of affine hyperplanes {<alpha,.> = k} strictly separating the
/// base-alcove barycenter from the barycenter of x, by exact rational
/// comparisons root by root.
inline Int separating_hyperplanes(const AffineWeylGroup& aw,
                                  const AffineWeylElt& x) {
  const RootSystem& rs = aw.rs();
  RatVec b0 = rs.base_barycenter();
  RatVec bx = aw.barycenter(x);
  Int count = 0;
  for (int a = 0; a < rs.num_positive_roots(); ++a) {
    Rat p0 = rs.pair_pos(a, b0);
    Rat px = rs.pair_pos(a, bx);
    Rat lo = p0 < px ? p0 : px;
    Rat hi = p0 < px ? px : p0;
    // integers k with lo < k < hi
    Int k_lo = lo.floor() + 1;
    Int k_hi = hi.floor() + (hi.is_integer() ? -1 : 0);
    if (k_hi >= k_lo) count += k_hi - k_lo + 1;
  }
  return count;
}

/// Cayley-graph BFS distances from the identity up to the given depth.
inline std::map<std::vector<Int>, Int> bfs_lengths(const AffineWeylGroup& aw,
                                                   int depth) {
  auto key = [](const AffineWeylElt& x) {
    std::vector<Int> k(x.lambda.data(), x.lambda.data() + x.lambda.size());
    k.push_back(x.w);
    return k;
  };
  std::map<std::vector<Int>, Int> dist;
  std::vector<AffineWeylElt> level{aw.identity()};
  dist[key(aw.identity())] = 0;
  for (int d = 0; d < depth; ++d) {
    std::vector<AffineWeylElt> next;
    for (const auto& x : level)
      for (int i = 0; i <= aw.rank(); ++i) {
        AffineWeylElt y = aw.right_mult_gen(x, i);
        auto k = key(y);
        if (!dist.count(k)) {
          dist[k] = d + 1;
          next.push_back(y);
        }
      }
    level = std::move(next);
  }
  return dist;
}

inline std::vector<Int> elt_key(const AffineWeylElt& x) {
  std::vector<Int> k(x.lambda.data(), x.lambda.data() + x.lambda.size());
  k.push_back(x.w);
  return k;
}

/// All reduced words of x, by descent recursion.
inline std::vector<std::vector<int>> all_reduced_words(
    const AffineWeylGroup& aw, const AffineWeylElt& x) {
  if (aw.length(x) == 0) return {{}};
  std::vector<std::vector<int>> out;
  Int len = aw.length(x);
  for (int i = 0; i <= aw.rank(); ++i) {
    AffineWeylElt y = aw.right_mult_gen(x, i);
    if (aw.length(y) != len - 1) continue;
    for (auto w : all_reduced_words(aw, y)) {
      w.push_back(i);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Unmerged gallery enumeration: every branch choice expanded into its own
/// piece, no state merging.  Returns per-end-alcove (max dimension, exact
/// point count).  Exponential; for short words only.
inline std::map<std::vector<Int>, std::pair<int, QPoly>> fold_oracle(
    const AffineWeylGroup& aw, const std::vector<int>& word, Orientation o) {
  struct Piece {
    AffineWeylElt z;
    int lines;
    int cuts;
  };
  std::vector<Piece> pieces{{aw.identity(), 0, 0}};
  for (int letter : word) {
    std::vector<Piece> next;
    for (const Piece& p : pieces) {
      int sign = crossing_sign(aw, p.z, letter, o);
      AffineWeylElt z2 = aw.right_mult_gen(p.z, letter);
      if (sign < 0) {
        next.push_back({z2, p.lines + 1, p.cuts});
      } else {
        next.push_back({z2, p.lines, p.cuts});        // the crossing point
        next.push_back({p.z, p.lines, p.cuts + 1});   // the folded rest
      }
    }
    pieces = std::move(next);
  }
  std::map<std::vector<Int>, std::pair<int, QPoly>> table;
  for (const Piece& p : pieces) {
    auto k = elt_key(p.z);
    QPoly q = QPoly::constant(1);
    for (int i = 0; i < p.lines; ++i) q.mul_q();
    for (int i = 0; i < p.cuts; ++i) q.mul_q_minus_one();
    auto it = table.find(k);
    if (it == table.end()) {
      table.emplace(k, std::make_pair(p.lines + p.cuts, q));
    } else {
      it->second.first = std::max(it->second.first, p.lines + p.cuts);
      it->second.second += q;
    }
  }
  return table;
}

/// Kostant partition function: number of ways to write v as a nonnegative
/// integral combination of the positive coroots.
inline Int kostant_partition(const RootSystem& rs, const IntVec& v,
                             int from_root = 0) {
  // expressible vectors have nonnegative coroot coordinates
  if ((v.array() < 0).any()) return 0;
  if ((v.array() == 0).all()) return 1;
  if (from_root >= rs.num_positive_roots()) return 0;
  Int total = 0;
  const IntVec& beta = rs.positive_coroot(from_root);
  IntVec rest = v;
  for (;;) {
    total += kostant_partition(rs, rest, from_root + 1);
    rest -= beta;
    if ((rest.array() < 0).any()) break;
  }
  return total;
}

/// Weight multiplicity via the alternating sum over the Weyl group with the
/// Kostant partition function (dual-side module with highest weight mu).
inline Int weight_mult_oracle(const RootSystem& rs, const Coweight& mu,
                              const Coweight& lam) {
  // rho_hat = half-sum of positive coroots
  IntVec two_rho = rs.two_rho_vee();
  Int total = 0;
  for (int w = 0; w < rs.order(); ++w) {
    // w(mu + rho_hat) - (lam + rho_hat), doubled to stay integral
    IntVec arg2 = rs.w_apply(w, IntVec(2 * mu + two_rho)) -
                  (2 * lam + two_rho);
    bool even = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (arg2(j) % 2 != 0) even = false;
    if (!even) continue;
    IntVec arg = arg2 / 2;
    if ((arg.array() < 0).any()) continue;  // partition needs nonneg coords
    Int p = kostant_partition(rs, arg);
    total += (rs.w_length(w) % 2 == 0 ? 1 : -1) * p;
  }
  return total;
}

}  // namespace oracles
