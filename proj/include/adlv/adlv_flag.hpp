#pragma once

#include <optional>

#include "adlv/folding.hpp"

namespace adlv {

/// dim X_x(eps^nu) in the affine flag manifold: for each w in W fold with
/// orientation w and read the entry at the alcove of eps^{w nu}; empty iff
/// every entry is absent, else the maximum minus <rho, nu + nu_dom>.
std::optional<Int> dim_flag(const AffineWeylGroup& aw, const AffineWeylElt& x,
                            const Coweight& nu);
/// Same, given a reduced word for x (avoids recomputing it).
std::optional<Int> dim_flag_word(const AffineWeylGroup& aw,
                                 std::span<const int> word,
                                 const Coweight& nu);

struct ReumanPrediction {
  bool applicable = false;  // shrunken-chamber membership
  bool nonempty = false;    // full-support criterion
  std::optional<Int> dim;   // half-sum formula, present iff nonempty
};
ReumanPrediction reuman_predict(const AffineWeylGroup& aw,
                                const AffineWeylElt& x);

/// Power-length criterion for non-emptiness (type A2 only, length > 1):
/// some power drops in length by more than one.
bool lau_nonempty(const AffineWeylGroup& aw, const AffineWeylElt& x);

struct CompareBRow {
  bool nonempty_b = false;
  std::optional<Int> dim_b;
  bool nonempty_1 = false;
  std::optional<Int> dim_1;
  Int len_tnu = 0;
  bool match = false;
};
CompareBRow compare_b(const AffineWeylGroup& aw, const AffineWeylElt& x,
                      const Coweight& nu);
CompareBRow compare_b_word(const AffineWeylGroup& aw,
                           std::span<const int> word, const Coweight& nu);

enum class FoldClass { White, Light, Medium, Dark };

/// d(x, 1, w' B^- w'^{-1}) for every w' in W (indexed by w').
std::vector<std::optional<Int>> partial_fold_dims(const AffineWeylGroup& aw,
                                                  const AffineWeylElt& x);
FoldClass partial_fold_class(const AffineWeylGroup& aw, const AffineWeylElt& x,
                             int w);
const char* fold_class_name(FoldClass c);

/// Per-element verdict row: emptiness/dimension, the Reuman prediction, and
/// the power-length criterion where it applies.
struct AdlvRecord {
  Coweight nu;
  bool nonempty = false;
  std::optional<Int> dim;
  bool reuman_applicable = false;
  bool reuman_nonempty = false;
  std::optional<Int> reuman_dim;
  std::optional<bool> lau;  // present only for A2, nu = 0, length > 1
};
AdlvRecord make_record(const AffineWeylGroup& aw, const AffineWeylElt& x,
                       const Coweight& nu);
AdlvRecord make_record_word(const AffineWeylGroup& aw, const AffineWeylElt& x,
                            std::span<const int> word, const Coweight& nu);

}  // namespace adlv
