#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "adlv/affine_weyl.hpp"
#include "adlv/qpoly.hpp"

namespace adlv {

/// A chamber orientation: the Borel B_w = w B w^{-1}, whose retraction
/// chamber at infinity is w(C_0).
struct Orientation {
  int w = 0;
};

enum class FoldMode { MaxDim, PointCount };

/// Result of running the folding automaton over one reduced word: for each
/// reachable end alcove, the maximal piece dimension and (in point-count
/// mode) the exact number of points of the union of pieces ending there.
class FoldTable {
 public:
  struct Entry {
    int dim = -1;
    QPoly count;
  };
  using Key = std::vector<Int>;  // lambda coords followed by finite-part index

  static Key key_of(const AffineWeylElt& x);

  std::optional<int> dim_at(const AffineWeylElt& y) const;
  const QPoly* count_at(const AffineWeylElt& y) const;
  const std::map<Key, Entry>& entries() const { return entries_; }
  QPoly total() const;  // sum of all point counts

  std::map<Key, Entry> entries_;
};

/// Sign of the gallery step z -> z*s_i relative to the orientation chamber:
/// positive iff the step crosses the wall towards the chamber at infinity.
/// Evaluated from exact rational barycenters; the table-driven fast path in
/// fold_all is checked against this in the test suite.
int crossing_sign(const AffineWeylGroup& aw, const AffineWeylElt& z, int i,
                  Orientation o);

/// The folding automaton.  Starting from the single state (base alcove),
/// each letter either moves every piece across the wall (negative crossing,
/// a full affine-line factor) or splits each piece into a folded part that
/// stays (an affine-line-minus-a-point factor) and a single point that
/// crosses.  States with equal end alcove are merged.
FoldTable fold_all(const AffineWeylGroup& aw, std::span<const int> word,
                   Orientation o, FoldMode mode);

/// d(x, y, B_w) = dim of the intersection of the Iwahori orbit of the
/// x-alcove with the U-orbit of the y-alcove; empty encoded as nullopt.
std::optional<int> d_dim(const AffineWeylGroup& aw, const AffineWeylElt& x,
                         const AffineWeylElt& y, Orientation o);

/// Exact point count of that intersection over a residue field with q
/// elements.
QPoly point_count(const AffineWeylGroup& aw, const AffineWeylElt& x,
                  const AffineWeylElt& y, Orientation o);

/// Number of fold_all invocations in this process (cache tests).
std::uint64_t fold_invocations();

}  // namespace adlv
