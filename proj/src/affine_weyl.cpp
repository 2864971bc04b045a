#include "adlv/affine_weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace adlv {

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)), num_generators_(rs_->rank() + 1) {
  const RootSystem& r = *rs_;
  edges_.resize(static_cast<std::size_t>(r.order()) * num_generators_);
  for (int w = 0; w < r.order(); ++w) {
    for (int i = 0; i < num_generators_; ++i) {
      Edge e{};
      if (i == 0) {
        SignedRoot img = r.w_root_image(w, r.theta());
        e.wall_root = img.index;
        e.ascending = img.sign > 0;
        e.next_w = r.w_mult(w, r.theta_reflection());
      } else {
        SignedRoot img = r.w_root_image(w, i - 1);
        e.wall_root = img.index;
        e.ascending = img.sign < 0;
        e.next_w = r.w_mult(w, r.simple(i));
      }
      edges_[static_cast<std::size_t>(w) * num_generators_ + i] = e;
    }
  }
}

AffineWeylElt AffineWeylGroup::identity() const {
  return {Coweight::Zero(rank()), 0};
}

AffineWeylElt AffineWeylGroup::translation(const Coweight& nu) const {
  if (nu.size() != rank()) throw ConfigError("coweight has wrong rank");
  return {nu, 0};
}

AffineWeylElt AffineWeylGroup::from_finite(int w) const {
  return {Coweight::Zero(rank()), w};
}

AffineWeylElt AffineWeylGroup::multiply(const AffineWeylElt& x,
                                        const AffineWeylElt& y) const {
  if (x.lambda.size() != y.lambda.size())
    throw ConfigError("elements from different root systems");
  // t_l u * t_m v = t_{l + u(m)} (uv)
  return {x.lambda + rs_->w_apply(x.w, y.lambda), rs_->w_mult(x.w, y.w)};
}

AffineWeylElt AffineWeylGroup::inverse(const AffineWeylElt& x) const {
  int wi = rs_->w_inv(x.w);
  return {-rs_->w_apply(wi, x.lambda), wi};
}

AffineWeylElt AffineWeylGroup::right_mult_gen(const AffineWeylElt& x,
                                              int i) const {
  const Edge& e = edge(x.w, i);
  if (i == 0) return {x.lambda + rs_->w_theta_coroot(x.w), e.next_w};
  return {x.lambda, e.next_w};
}

AffineWeylElt AffineWeylGroup::left_mult_gen(int i,
                                             const AffineWeylElt& x) const {
  AffineWeylElt s = i == 0
                        ? AffineWeylElt{rs_->theta_coroot(),
                                        rs_->theta_reflection()}
                        : from_finite(rs_->simple(i));
  return multiply(s, x);
}

AffineWeylElt AffineWeylGroup::from_word(std::span<const int> word) const {
  AffineWeylElt x = identity();
  for (int i : word) x = right_mult_gen(x, i);
  return x;
}

Int AffineWeylGroup::im_length(const Coweight& lambda, int w) const {
  const RootSystem& r = *rs_;
  Int len = 0;
  for (int a = 0; a < r.num_positive_roots(); ++a) {
    Int p = r.pair_pos(a, lambda);
    if (r.w_neg(w, a)) p -= 1;
    len += p < 0 ? -p : p;
  }
  return len;
}

std::vector<int> AffineWeylGroup::reduced_word(AffineWeylElt x) const {
  std::vector<int> word;
  Int len = length(x);
  word.reserve(static_cast<std::size_t>(len));
  while (len > 0) {
    int found = -1;
    for (int i = 0; i < num_generators_; ++i) {
      AffineWeylElt y = right_mult_gen(x, i);
      if (length(y) == len - 1) {
        found = i;
        x = y;
        break;
      }
    }
    if (found < 0) throw InvariantError("no descent on non-identity element");
    word.push_back(found);
    --len;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int AffineWeylGroup::eta2(const AffineWeylElt& x) const {
  auto [dom, u] = dominant_rep(*rs_, barycenter(x));
  (void)dom;
  return rs_->w_inv(u);
}

RatVec AffineWeylGroup::barycenter(const AffineWeylElt& x) const {
  RatVec b = rs_->w_apply(x.w, rs_->base_barycenter());
  for (int i = 0; i < rank(); ++i) b(i) += Rat(x.lambda(i));
  return b;
}

IntVec AffineWeylGroup::floor_vector(const AffineWeylElt& x) const {
  const RootSystem& r = *rs_;
  IntVec k(r.num_positive_roots());
  for (int a = 0; a < r.num_positive_roots(); ++a)
    k(a) = r.pair_pos(a, x.lambda) - (r.w_neg(x.w, a) ? 1 : 0);
  return k;
}

bool AffineWeylGroup::in_shrunken(const AffineWeylElt& x) const {
  // base alcove has every floor 0; opposite sides of {alpha=0} means
  // floor <= -1, opposite sides of {alpha=1} means floor >= 1
  const RootSystem& r = *rs_;
  for (int a = 0; a < r.num_positive_roots(); ++a) {
    Int k = r.pair_pos(a, x.lambda) - (r.w_neg(x.w, a) ? 1 : 0);
    if (k == 0) return false;
  }
  return true;
}

bool AffineWeylGroup::support_full(int w) const {
  const auto& word = rs_->w_word(w);
  std::vector<bool> used(static_cast<std::size_t>(rank()) + 1, false);
  int count = 0;
  for (int letter : word)
    if (!used[letter]) {
      used[letter] = true;
      ++count;
    }
  return count == rank();
}

int AffineWeylGroup::finite_order(int w) const {
  int p = w, n = 1;
  while (p != 0) {
    p = rs_->w_mult(p, w);
    ++n;
    if (n > rs_->order()) throw InvariantError("finite order runaway");
  }
  return n;
}

std::vector<Int> AffineWeylGroup::power_lengths(const AffineWeylElt& x,
                                                int n_max) const {
  if (n_max < 1) throw ConfigError("power_lengths: n_max must be >= 1");
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n_max));
  AffineWeylElt p = x;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(length(p));
    if (n < n_max) p = multiply(p, x);
  }
  return out;
}

std::vector<AffineWeylGroup::EnumElt> AffineWeylGroup::enumerate(
    int max_len) const {
  std::vector<EnumElt> out;
  std::unordered_map<AffineWeylElt, int, AffineEltHash> seen;
  std::vector<AffineWeylElt> level{identity()};
  seen.emplace(identity(), 0);
  out.push_back({identity(), 0, {}});
  for (int len = 0; len < max_len; ++len) {
    std::vector<AffineWeylElt> next;
    for (const auto& x : level) {
      for (int i = 0; i < num_generators_; ++i) {
        AffineWeylElt y = right_mult_gen(x, i);
        if (seen.count(y)) continue;
        if (length(y) != len + 1) continue;
        seen.emplace(y, 0);
        next.push_back(y);
      }
    }
    for (const auto& y : next) out.push_back({y, len + 1, reduced_word(y)});
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const EnumElt& a, const EnumElt& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.word < b.word;
  });
  return out;
}

}  // namespace adlv
