#include "adlv/adlv_flag.hpp"

namespace adlv {

std::optional<Int> dim_flag_word(const AffineWeylGroup& aw,
                                 std::span<const int> word,
                                 const Coweight& nu) {
  const RootSystem& rs = aw.rs();
  if (nu.size() != rs.rank()) throw ConfigError("nu has wrong rank");
  std::optional<int> best;
  for (int w = 0; w < rs.order(); ++w) {
    // the Iwahori fixes the dominant base alcove, so the U(L)-orbits of
    // w B w^{-1} are read off by retracting towards the chamber w w_0 (C_0)
    Orientation o{rs.w_mult(w, rs.longest())};
    AffineWeylElt target = aw.translation(rs.w_apply(w, nu));
    auto d = fold_all(aw, word, o, FoldMode::MaxDim).dim_at(target);
    if (d && (!best || *d > *best)) best = d;
  }
  if (!best) return std::nullopt;
  Coweight nu_dom = dominant_rep(rs, nu).first;
  Rat corr = rs.rho_pairing(Coweight(nu + nu_dom));
  Int dim = Int(*best) - corr.to_int();
  if (dim < 0 || dim > static_cast<Int>(word.size()))
    throw InvariantError("flag dimension out of range");
  return dim;
}

std::optional<Int> dim_flag(const AffineWeylGroup& aw, const AffineWeylElt& x,
                            const Coweight& nu) {
  return dim_flag_word(aw, aw.reduced_word(x), nu);
}

ReumanPrediction reuman_predict(const AffineWeylGroup& aw,
                                const AffineWeylElt& x) {
  const RootSystem& rs = aw.rs();
  ReumanPrediction out;
  out.applicable = aw.in_shrunken(x);
  int e1 = aw.eta1(x);
  int e2 = aw.eta2(x);
  int sigma = rs.w_mult(rs.w_mult(rs.w_inv(e2), e1), e2);
  out.nonempty = aw.support_full(sigma);
  if (out.nonempty) {
    Int total = aw.length(x) + rs.w_length(sigma);
    if (total % 2 != 0)
      throw InvariantError("half-sum formula is not an integer");
    out.dim = total / 2;
  }
  return out;
}

bool lau_nonempty(const AffineWeylGroup& aw, const AffineWeylElt& x) {
  const RootSystem& rs = aw.rs();
  if (rs.label() != "A2") throw ConfigError("power criterion is A2-only");
  Int len = aw.length(x);
  if (len <= 1) throw ConfigError("power criterion needs length > 1");
  Int n_max = Int(aw.finite_order(aw.eta1(x))) * (len + 2);
  AffineWeylElt p = x;
  for (Int n = 1; n <= n_max; ++n) {
    if (n > 1) p = aw.multiply(p, x);
    if (aw.length(p) < len - 1) return true;
  }
  return false;
}

CompareBRow compare_b(const AffineWeylGroup& aw, const AffineWeylElt& x,
                      const Coweight& nu) {
  return compare_b_word(aw, aw.reduced_word(x), nu);
}

CompareBRow compare_b_word(const AffineWeylGroup& aw,
                           std::span<const int> word, const Coweight& nu) {
  CompareBRow row;
  auto db = dim_flag_word(aw, word, nu);
  auto d1 = dim_flag_word(aw, word, Coweight::Zero(aw.rank()));
  row.nonempty_b = db.has_value();
  row.dim_b = db;
  row.nonempty_1 = d1.has_value();
  row.dim_1 = d1;
  row.len_tnu = aw.im_length(nu, 0);
  if (row.nonempty_b != row.nonempty_1) {
    row.match = false;
  } else if (!row.nonempty_b) {
    row.match = true;
  } else {
    row.match = row.len_tnu % 2 == 0 && *db == *d1 - row.len_tnu / 2;
  }
  return row;
}

std::vector<std::optional<Int>> partial_fold_dims(const AffineWeylGroup& aw,
                                                  const AffineWeylElt& x) {
  const RootSystem& rs = aw.rs();
  auto word = aw.reduced_word(x);
  std::vector<std::optional<Int>> out(static_cast<std::size_t>(rs.order()));
  for (int w = 0; w < rs.order(); ++w) {
    // for the opposite Borel w B^- w^{-1} the retraction chamber is w(C_0)
    auto d = fold_all(aw, word, Orientation{w}, FoldMode::MaxDim)
                 .dim_at(aw.identity());
    if (d) out[static_cast<std::size_t>(w)] = Int(*d);
  }
  return out;
}

FoldClass partial_fold_class(const AffineWeylGroup& aw, const AffineWeylElt& x,
                             int w) {
  if (w < 0 || w >= aw.rs().order()) throw ConfigError("bad orientation index");
  auto dims = partial_fold_dims(aw, x);
  std::optional<Int> max;
  for (const auto& d : dims)
    if (d && (!max || *d > *max)) max = d;
  if (!max) return FoldClass::White;  // X_x(1) empty
  const auto& dw = dims[static_cast<std::size_t>(w)];
  if (!dw) return FoldClass::Light;
  return *dw < *max ? FoldClass::Medium : FoldClass::Dark;
}

const char* fold_class_name(FoldClass c) {
  switch (c) {
    case FoldClass::White:
      return "white";
    case FoldClass::Light:
      return "light";
    case FoldClass::Medium:
      return "medium";
    case FoldClass::Dark:
      return "dark";
  }
  return "?";
}

AdlvRecord make_record(const AffineWeylGroup& aw, const AffineWeylElt& x,
                       const Coweight& nu) {
  return make_record_word(aw, x, aw.reduced_word(x), nu);
}

AdlvRecord make_record_word(const AffineWeylGroup& aw, const AffineWeylElt& x,
                            std::span<const int> word, const Coweight& nu) {
  AdlvRecord rec;
  rec.nu = nu;
  auto d = dim_flag_word(aw, word, nu);
  rec.nonempty = d.has_value();
  rec.dim = d;
  ReumanPrediction rp = reuman_predict(aw, x);
  rec.reuman_applicable = rp.applicable;
  rec.reuman_nonempty = rp.nonempty;
  rec.reuman_dim = rp.dim;
  if (aw.rs().label() == "A2" && nu.isZero() && aw.length(x) > 1)
    rec.lau = lau_nonempty(aw, x);
  return rec;
}

}  // namespace adlv
