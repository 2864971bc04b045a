#include "adlv/lattice.hpp"

#include <cstdlib>

namespace adlv {

namespace {

Int iabs(Int v) { return v < 0 ? -v : v; }

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(a.cols());
  IntMat d = a;
  IntMat u = IntMat::Identity(n, n);

  int t = 0;
  const int lim = std::min(n, m);
  while (t < lim) {
    // pivot: smallest nonzero |entry| in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (d(i, j) != 0 &&
            (pi < 0 || iabs(d(i, j)) < iabs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    d.row(t).swap(d.row(pi));
    u.row(t).swap(u.row(pi));
    d.col(t).swap(d.col(pj));

    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      if (d(i, t) == 0) continue;
      Int q = d(i, t) / d(t, t);
      d.row(i) -= q * d.row(t);
      u.row(i) -= q * u.row(t);
      if (d(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m; ++j) {
      if (d(t, j) == 0) continue;
      Int q = d(t, j) / d(t, t);
      d.col(j) -= q * d.col(t);
      if (d(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainder became the new smaller pivot candidate

    // divisibility: d(t,t) must divide everything below-right
    bool fixed = true;
    for (int i = t + 1; i < n && fixed; ++i)
      for (int j = t + 1; j < m && fixed; ++j)
        if (d(i, j) % d(t, t) != 0) {
          d.row(t) += d.row(i);
          u.row(t) += u.row(i);
          fixed = false;
        }
    if (!fixed) continue;

    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
    ++t;
  }

  SmithResult res;
  res.u = u;
  res.rank = t;
  res.diag.assign(lim, 0);
  for (int i = 0; i < t; ++i) res.diag[i] = d(i, i);
  return res;
}

LatticeQuotient LatticeQuotient::from_generators(int ambient_rank,
                                                 const IntMat& gens) {
  if (gens.size() > 0 && gens.rows() != ambient_rank)
    throw ConfigError("generator matrix has wrong ambient rank");
  LatticeQuotient q;
  q.ambient_ = ambient_rank;
  q.gens_ = gens;
  if (gens.cols() == 0) {
    q.u_ = IntMat::Identity(ambient_rank, ambient_rank);
    q.rank_ = 0;
    return q;
  }
  SmithResult s = smith_normal_form(gens);
  q.u_ = s.u;
  q.diag_ = s.diag;
  q.rank_ = s.rank;
  return q;
}

bool LatticeQuotient::is_trivial() const {
  if (free_rank() != 0) return false;
  for (int i = 0; i < rank_; ++i)
    if (diag_[i] != 1) return false;
  return true;
}

IntVec LatticeQuotient::project(const IntVec& v) const {
  if (v.size() != ambient_) throw ConfigError("projection: wrong dimension");
  IntVec w = u_ * v;
  for (int i = 0; i < rank_; ++i) {
    Int d = diag_[i];
    Int r = w(i) % d;
    if (r < 0) r += d;
    w(i) = r;
  }
  return w;
}

IntVec LatticeQuotient::rep_add(const IntVec& a, const IntVec& b) const {
  IntVec w = a + b;
  for (int i = 0; i < rank_; ++i) {
    Int d = diag_[i];
    Int r = w(i) % d;
    if (r < 0) r += d;
    w(i) = r;
  }
  return w;
}

}  // namespace adlv
