#include "adlv/levi.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace adlv {

namespace {

IntVec pair_row_sum(const RootSystem& rs, const std::vector<int>& roots) {
  IntVec row = IntVec::Zero(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    Coweight e = Coweight::Zero(rs.rank());
    e(j) = 1;
    for (int a : roots) row(j) += rs.pair_pos(a, e);
  }
  return row;
}

Rat half_dot(const IntVec& row2, const Coweight& cw) {
  return Rat(row2.dot(cw), 2);
}

Rat half_dot(const IntVec& row2, const RatVec& v) {
  Rat s(0);
  for (int j = 0; j < v.size(); ++j) s += Rat(row2(j)) * v(j);
  return s / Rat(2);
}

}  // namespace

LeviDatum::LeviDatum(std::shared_ptr<const RootSystem> rs,
                     std::vector<int> simple_indices)
    : rs_(std::move(rs)), delta_(std::move(simple_indices)) {
  std::sort(delta_.begin(), delta_.end());
  delta_.erase(std::unique(delta_.begin(), delta_.end()), delta_.end());
  in_delta_.assign(static_cast<std::size_t>(rs_->rank()), false);
  for (int i : delta_) {
    if (i < 1 || i > rs_->rank()) throw ConfigError("bad Levi simple index");
    in_delta_[static_cast<std::size_t>(i - 1)] = true;
  }
  for (int a = 0; a < rs_->num_positive_roots(); ++a) {
    const IntVec& coords = rs_->positive_root(a);
    bool in_m = true;
    for (int j = 0; j < rs_->rank(); ++j)
      if (coords(j) != 0 && !in_delta_[static_cast<std::size_t>(j)]) {
        in_m = false;
        break;
      }
    (in_m ? m_pos_ : r_n_).push_back(a);
  }
  rho_m_row2_ = pair_row_sum(*rs_, m_pos_);
  rho_n_row2_ = pair_row_sum(*rs_, r_n_);

  IntMat gens(rs_->rank(), static_cast<Eigen::Index>(delta_.size()));
  gens.setZero();
  for (std::size_t c = 0; c < delta_.size(); ++c)
    gens(delta_[c] - 1, static_cast<Eigen::Index>(c)) = 1;
  quotient_ = LatticeQuotient::from_generators(rs_->rank(), gens);
}

Rat LeviDatum::rho_m_pairing(const Coweight& cw) const {
  return half_dot(rho_m_row2_, cw);
}
Rat LeviDatum::rho_m_pairing(const RatVec& v) const {
  return half_dot(rho_m_row2_, v);
}
Rat LeviDatum::rho_n_pairing(const Coweight& cw) const {
  return half_dot(rho_n_row2_, cw);
}
Rat LeviDatum::rho_n_pairing(const RatVec& v) const {
  return half_dot(rho_n_row2_, v);
}

bool LeviDatum::m_dominant(const Coweight& cw) const {
  for (int i : delta_)
    if (rs_->pair_pos(i - 1, cw) < 0) return false;
  return true;
}

bool LeviDatum::m_dominant(const RatVec& v) const {
  for (int i : delta_)
    if (rs_->pair_pos(i - 1, v) < Rat(0)) return false;
  return true;
}

bool LeviDatum::leq_m(const Coweight& nu, const Coweight& mu) const {
  IntVec d = mu - nu;
  for (int j = 0; j < rs_->rank(); ++j) {
    if (in_delta_[static_cast<std::size_t>(j)]) {
      if (d(j) < 0) return false;
    } else if (d(j) != 0) {
      return false;
    }
  }
  return true;
}

bool LeviDatum::leq_m_rational(const RatVec& nu_bar, const Coweight& mu) const {
  for (int j = 0; j < rs_->rank(); ++j) {
    Rat d = Rat(mu(j)) - nu_bar(j);
    if (in_delta_[static_cast<std::size_t>(j)]) {
      if (d < Rat(0)) return false;
    } else if (d != Rat(0)) {
      return false;
    }
  }
  return true;
}

Coweight LeviDatum::m_dominant_rep(const Coweight& cw) const {
  Coweight v = cw;
  for (;;) {
    bool moved = false;
    for (int i : delta_) {
      Int p = rs_->pair_pos(i - 1, v);
      if (p < 0) {
        v(i - 1) -= p;
        moved = true;
        break;
      }
    }
    if (!moved) return v;
  }
}

RatVec LeviDatum::m_dominant_rep(const RatVec& in) const {
  RatVec v = in;
  for (;;) {
    bool moved = false;
    for (int i : delta_) {
      Rat p = rs_->pair_pos(i - 1, v);
      if (p < Rat(0)) {
        v(i - 1) -= p;
        moved = true;
        break;
      }
    }
    if (!moved) return v;
  }
}

std::string LeviDatum::name() const {
  if (delta_.empty()) return "A";
  if (is_full()) return "G";
  std::string s = "{";
  for (std::size_t k = 0; k < delta_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(delta_[k]);
  }
  return s + "}";
}

std::vector<LeviDatum> all_standard_levis(
    std::shared_ptr<const RootSystem> rs) {
  const int r = rs->rank();
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  std::vector<LeviDatum> out;
  out.reserve(subsets.size());
  for (auto& s : subsets) out.emplace_back(rs, std::move(s));
  return out;
}

std::vector<Coweight> dominant_below(const RootSystem& rs,
                                     const Coweight& mu) {
  if (!is_dominant(rs, mu)) throw ConfigError("mu must be dominant");
  const int r = rs.rank();
  Int budget = rs.rho_pairing(mu).floor();
  std::vector<Coweight> out;
  IntVec d = IntVec::Zero(r);
  // enumerate drops d with sum <= budget; nu = mu - d kept when dominant
  std::function<void(int, Int)> rec = [&](int pos, Int left) {
    if (pos == r) {
      Coweight nu = mu - d;
      if (is_dominant(rs, nu)) out.push_back(nu);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      d(pos) = v;
      rec(pos + 1, left - v);
    }
    d(pos) = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end(),
            [](const Coweight& a, const Coweight& b) { return lex_less(a, b); });
  return out;
}

std::vector<Coweight> sigma_mu(const RootSystem& rs, const Coweight& mu) {
  std::set<std::vector<Int>> acc;
  for (const Coweight& nu : dominant_below(rs, mu))
    for (const Coweight& x : weyl_orbit(rs, nu)) acc.insert(to_std(x));
  std::vector<Coweight> out;
  out.reserve(acc.size());
  for (const auto& k : acc) out.push_back(from_std(k));
  return out;
}

MSubsets m_subsets(const RootSystem& rs, const Coweight& mu,
                   const LeviDatum& levi) {
  MSubsets out;
  for (const Coweight& x : sigma_mu(rs, mu))
    if (levi.m_dominant(x)) out.m_dom.push_back(x);
  for (const Coweight& x : out.m_dom) {
    bool maximal = true;
    for (const Coweight& y : out.m_dom)
      if (!(x == y) && levi.leq_m(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.m_max.push_back(x);
  }
  return out;
}

namespace {

// Freudenthal recursion for the (dual-side) module with highest weight mu,
// restricted to the subsystem given by a positive-root subset and the
// matching simple indices.  Works in ambient coweight coordinates with the
// global W-invariant form; values are exact and divisions must be exact.
WeightMults freudenthal(const RootSystem& rs,
                        const std::vector<int>& pos_roots,
                        const std::vector<int>& simples, const Coweight& mu) {
  const int r = rs.rank();
  IntVec two_rho_hat = IntVec::Zero(r);
  for (int a : pos_roots) two_rho_hat += rs.positive_coroot(a);

  // dominant weights: mu - (nonneg combination of simple coroots in Delta),
  // kept when dominant for the subsystem
  Int budget = 0;
  {
    Rat b(0);
    for (int a : pos_roots) b += Rat(rs.pair_pos(a, mu));
    budget = (b / Rat(2)).floor();  // <rho_hat-dual, mu>
  }
  auto sub_dominant = [&](const Coweight& v) {
    for (int i : simples)
      if (rs.pair_pos(i - 1, v) < 0) return false;
    return true;
  };
  std::vector<Coweight> dom;
  {
    IntVec d = IntVec::Zero(r);
    std::function<void(std::size_t, Int)> rec = [&](std::size_t pos,
                                                    Int left) {
      if (pos == simples.size()) {
        Coweight nu = mu;
        for (std::size_t k = 0; k < simples.size(); ++k)
          nu -= d(simples[k] - 1) *
                rs.positive_coroot(simples[k] - 1);
        if (sub_dominant(nu)) dom.push_back(nu);
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        d(simples[pos] - 1) = v;
        rec(pos + 1, left - v);
      }
      d(simples[pos] - 1) = 0;
    };
    rec(0, budget);
  }
  // process in decreasing height order (increasing drop)
  std::sort(dom.begin(), dom.end(), [&](const Coweight& a, const Coweight& b) {
    Int ha = two_rho_hat.dot(IntVec(mu - a));
    Int hb = two_rho_hat.dot(IntVec(mu - b));
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });

  auto sub_dominant_rep = [&](Coweight v) {
    for (;;) {
      bool moved = false;
      for (int i : simples) {
        Int p = rs.pair_pos(i - 1, v);
        if (p < 0) {
          v(i - 1) -= p;
          moved = true;
          break;
        }
      }
      if (!moved) return v;
    }
  };

  std::map<std::vector<Int>, Int> dom_mult;
  IntVec top2 = 2 * mu + two_rho_hat;
  Int top_norm = rs.form(top2, top2);
  for (const Coweight& lam : dom) {
    if (lam == mu) {
      dom_mult[to_std(lam)] = 1;
      continue;
    }
    Int num = 0;
    for (int a : pos_roots) {
      const IntVec& beta = rs.positive_coroot(a);
      for (Int k = 1;; ++k) {
        Coweight kappa = lam + k * beta;
        auto it = dom_mult.find(to_std(sub_dominant_rep(kappa)));
        if (it == dom_mult.end()) break;
        num += it->second * rs.form(kappa, beta);
      }
    }
    IntVec lam2 = 2 * lam + two_rho_hat;
    Int den = top_norm - rs.form(lam2, lam2);
    if (den <= 0) throw InvariantError("Freudenthal: nonpositive denominator");
    Int num8 = 8 * num;
    if (num8 % den != 0)
      throw InvariantError("Freudenthal: inexact division");
    dom_mult[to_std(lam)] = num8 / den;
  }

  // expand to the full orbit under the subsystem reflections
  WeightMults full;
  for (const auto& [key, m] : dom_mult) {
    Coweight v = from_std(key);
    std::set<std::vector<Int>> orbit{key};
    std::vector<Coweight> queue{v};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Coweight x = queue[h];
      for (int i : simples) {
        Coweight y = x;
        y(i - 1) -= rs.pair_pos(i - 1, x);
        if (orbit.insert(to_std(y)).second) queue.push_back(y);
      }
    }
    for (const auto& k : orbit) full[k] = m;
  }
  return full;
}

std::vector<int> all_simples(const RootSystem& rs) {
  std::vector<int> s(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) s[static_cast<std::size_t>(i)] = i + 1;
  return s;
}

std::vector<int> all_positive(const RootSystem& rs) {
  std::vector<int> p(static_cast<std::size_t>(rs.num_positive_roots()));
  for (int a = 0; a < rs.num_positive_roots(); ++a)
    p[static_cast<std::size_t>(a)] = a;
  return p;
}

}  // namespace

WeightMults weight_multiplicities(const RootSystem& rs, const Coweight& mu) {
  if (!is_dominant(rs, mu)) throw ConfigError("mu must be dominant");
  return freudenthal(rs, all_positive(rs), all_simples(rs), mu);
}

WeightMults weight_multiplicities_levi(const RootSystem& rs,
                                       const LeviDatum& levi,
                                       const Coweight& mu_m) {
  if (!levi.m_dominant(mu_m)) throw ConfigError("mu_M must be M-dominant");
  return freudenthal(rs, levi.m_positive(), levi.delta(), mu_m);
}

namespace {

Int weyl_dim_impl(const RootSystem& rs, const std::vector<int>& pos_roots,
                  const Coweight& mu) {
  // product over positive roots of <alpha, mu + rho_hat> / <alpha, rho_hat>
  // where rho_hat is the half-sum of the positive coroots of the subsystem
  RatVec rho_hat = RatVec::Constant(rs.rank(), Rat(0));
  for (int a : pos_roots)
    for (int j = 0; j < rs.rank(); ++j)
      rho_hat(j) += Rat(rs.positive_coroot(a)(j), 2);
  Rat prod(1);
  for (int a : pos_roots) {
    Rat h = rs.pair_pos(a, rho_hat);
    Rat v = Rat(rs.pair_pos(a, mu)) + h;
    prod *= v / h;
  }
  if (!prod.is_integer() || prod.num() <= 0)
    throw InvariantError("Weyl dimension not a positive integer: " +
                         prod.str());
  return prod.to_int();
}

}  // namespace

Int weyl_dim(const RootSystem& rs, const Coweight& mu) {
  if (!is_dominant(rs, mu)) throw ConfigError("mu must be dominant");
  return weyl_dim_impl(rs, all_positive(rs), mu);
}

Int weyl_dim_levi(const RootSystem& rs, const LeviDatum& levi,
                  const Coweight& mu_m) {
  if (!levi.m_dominant(mu_m)) throw ConfigError("mu_M must be M-dominant");
  return weyl_dim_impl(rs, levi.m_positive(), mu_m);
}

MCharacter branching(const RootSystem& rs, const Coweight& mu,
                     const LeviDatum& levi) {
  WeightMults chr = weight_multiplicities(rs, mu);
  MCharacter out;
  while (!chr.empty()) {
    // lexicographically largest remaining M-dominant weight
    auto pick = chr.rend();
    for (auto it = chr.rbegin(); it != chr.rend(); ++it) {
      if (it->second == 0) continue;
      if (levi.m_dominant(from_std(it->first))) {
        pick = it;
        break;
      }
    }
    if (pick == chr.rend()) {
      // only zero entries left
      bool all_zero = true;
      for (const auto& [k, m] : chr)
        if (m != 0) {
          all_zero = false;
          break;
        }
      if (!all_zero)
        throw InvariantError("branching: leftover weights with no M-dominant "
                             "member");
      break;
    }
    Int a = pick->second;
    if (a < 0) throw InvariantError("branching: negative multiplicity");
    Coweight lam = from_std(pick->first);
    out[pick->first] = a;
    for (const auto& [k, m] : weight_multiplicities_levi(rs, levi, lam)) {
      auto it = chr.find(k);
      if (it == chr.end())
        throw InvariantError("branching: M-character leaves the support");
      it->second -= a * m;
      if (it->second < 0)
        throw InvariantError("branching: negative intermediate multiplicity");
      if (it->second == 0) chr.erase(it);
    }
  }
  return out;
}

DIntersection d_intersection(const RootSystem& rs, const Coweight& mu,
                             const Coweight& mu_m, const LeviDatum& levi) {
  if (!is_dominant(rs, mu)) throw ConfigError("mu must be dominant");
  if (!levi.m_dominant(mu_m)) throw ConfigError("mu_M must be M-dominant");
  DIntersection out;
  out.bound = rs.rho_pairing(Coweight(mu + mu_m)) - Rat(2) * levi.rho_m_pairing(mu_m);
  MCharacter br = branching(rs, mu, levi);
  auto it = br.find(to_std(mu_m));
  out.components = it == br.end() ? 0 : it->second;
  out.attained = out.components > 0;
  return out;
}

LeviContext make_levi_context(const RootSystem& rs, const Coweight& mu,
                              const LeviDatum& levi) {
  return LeviContext{m_subsets(rs, mu, levi), branching(rs, mu, levi)};
}

Thm581Result thm581_eval(const RootSystem& rs, const Coweight& mu,
                         const LeviDatum& levi, const IntVec& nu_class,
                         const RatVec& nu_bar, int defect) {
  return thm581_eval_ctx(rs, mu, levi, make_levi_context(rs, mu, levi),
                         nu_class, nu_bar, defect);
}

Thm581Result thm581_eval_ctx(const RootSystem& rs, const Coweight& mu,
                             const LeviDatum& levi, const LeviContext& ctx,
                             const IntVec& nu_class, const RatVec& nu_bar,
                             int defect) {
  if (!is_dominant(rs, mu)) throw ConfigError("mu must be dominant");
  if (!levi.m_dominant(nu_bar))
    throw ConfigError("Newton point must be M-dominant");
  Thm581Result res;

  const MSubsets& subs = ctx.subs;
  auto class_key = to_std(nu_class);
  bool in_image = false;
  for (const Coweight& lam : subs.m_dom)
    if (to_std(levi.p_m(lam)) == class_key) {
      in_image = true;
      break;
    }
  if (!in_image) {
    res.nonempty = false;
    res.note = "nu not in the image of the M-dominant stratum";
    return res;
  }
  res.nonempty = true;

  Rat half_defect = Rat(defect, 2);
  auto [nu_bar_dom, witness] = dominant_rep(rs, nu_bar);
  (void)witness;
  RatVec mu_minus(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) mu_minus(j) = Rat(mu(j)) - nu_bar_dom(j);
  Rat closed = rs.rho_pairing(mu_minus) - half_defect;

  const MCharacter& br = ctx.br;
  bool have_term = false;
  Rat best(0);
  std::string note;
  for (const Coweight& lam : subs.m_max) {
    if (to_std(levi.p_m(lam)) != class_key) continue;
    if (!levi.leq_m_rational(nu_bar, lam)) continue;
    auto it = br.find(to_std(lam));
    Int comps = it == br.end() ? 0 : it->second;
    if (comps <= 0) {
      note += "maximal element without attained bound; ";
      continue;
    }
    Rat m_side = levi.rho_m_pairing(lam) - levi.rho_m_pairing(nu_bar) -
                 half_defect;
    Rat bound = rs.rho_pairing(Coweight(mu + lam)) - Rat(2) * levi.rho_m_pairing(lam);
    Rat term = m_side + bound;
    if (!have_term || term > best) best = term;
    have_term = true;
  }
  if (!have_term) {
    res.consistent = false;
    res.note = "no usable maximal stratum in the fiber; " + note;
    return res;
  }
  Rat corr = rs.rho_pairing(nu_bar) - rs.rho_pairing(nu_bar_dom) -
             Rat(2) * levi.rho_n_pairing(nu_bar);
  Rat value = best + corr;
  if (!value.is_integer() || !closed.is_integer()) {
    res.consistent = false;
    res.note = "non-integral dimension value; " + note;
    return res;
  }
  res.dim_sup = value.to_int();
  res.dim_closed = closed.to_int();
  res.consistent = res.dim_sup == res.dim_closed && note.empty();
  res.note = note;
  return res;
}

bool lem3subsets_check(const RootSystem& rs, const Coweight& mu,
                       const LeviDatum& levi) {
  MSubsets subs = m_subsets(rs, mu, levi);
  std::set<std::vector<Int>> dom_img, max_img;
  for (const Coweight& x : subs.m_dom) dom_img.insert(to_std(levi.p_m(x)));
  for (const Coweight& x : subs.m_max) max_img.insert(to_std(levi.p_m(x)));
  return dom_img == max_img;
}

}  // namespace adlv
