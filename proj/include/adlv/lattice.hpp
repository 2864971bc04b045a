#pragma once

#include <vector>

#include "adlv/root_system.hpp"

namespace adlv {

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... .  Only U and the diagonal are returned; that is all a
/// quotient projection needs.
struct SmithResult {
  IntMat u;              // unimodular row transform
  std::vector<Int> diag;  // nonnegative, divisibility chain, length min(n,m)
  int rank = 0;           // number of nonzero diagonal entries
};
SmithResult smith_normal_form(const IntMat& a);

/// Quotient of Z^n by the column span of a generator matrix, with a
/// canonical-representative projection.  Class representatives live in
/// U-coordinates: torsion coordinates reduced into [0, d_i), free
/// coordinates kept as integers.
class LatticeQuotient {
 public:
  static LatticeQuotient from_generators(int ambient_rank, const IntMat& gens);

  int ambient_rank() const { return ambient_; }
  const IntMat& generators() const { return gens_; }
  const std::vector<Int>& invariant_factors() const { return diag_; }
  int free_rank() const { return ambient_ - rank_; }
  bool is_trivial() const;

  /// Canonical representative of the class of v.
  IntVec project(const IntVec& v) const;
  /// Group law on canonical representatives.
  IntVec rep_add(const IntVec& a, const IntVec& b) const;
  bool classes_equal(const IntVec& a, const IntVec& b) const {
    return project(a) == project(b);
  }

 private:
  int ambient_ = 0;
  IntMat gens_;
  IntMat u_;
  std::vector<Int> diag_;
  int rank_ = 0;
};

}  // namespace adlv
