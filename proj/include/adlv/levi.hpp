#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adlv/lattice.hpp"
#include "adlv/root_system.hpp"

namespace adlv {

/// A standard Levi subgroup M, given by a subset of the simple roots:
/// its positive roots, the complement R_N, rho_M and rho_N pairings, and
/// the lattice quotient Lambda_M = X_*(A) / Q^vee_M with projection p_M.
class LeviDatum {
 public:
  LeviDatum(std::shared_ptr<const RootSystem> rs,
            std::vector<int> simple_indices /* values in 1..rank */);

  const RootSystem& rs() const { return *rs_; }
  const std::vector<int>& delta() const { return delta_; }
  /// Indices into the ambient positive roots.
  const std::vector<int>& m_positive() const { return m_pos_; }
  const std::vector<int>& r_n() const { return r_n_; }
  bool is_full() const { return static_cast<int>(delta_.size()) == rs_->rank(); }

  Rat rho_m_pairing(const Coweight& cw) const;
  Rat rho_m_pairing(const RatVec& v) const;
  Rat rho_n_pairing(const Coweight& cw) const;
  Rat rho_n_pairing(const RatVec& v) const;

  const LatticeQuotient& lambda_m() const { return quotient_; }
  IntVec p_m(const Coweight& cw) const { return quotient_.project(cw); }

  bool m_dominant(const Coweight& cw) const;
  bool m_dominant(const RatVec& v) const;
  /// nu <=_M mu: mu - nu a nonnegative integral combination of the simple
  /// coroots of M.
  bool leq_m(const Coweight& nu, const Coweight& mu) const;
  /// mu - nu_bar lies in the nonnegative rational cone over the simple
  /// coroots of M (the rational form used with Newton points).
  bool leq_m_rational(const RatVec& nu_bar, const Coweight& mu) const;
  /// M-dominant representative of the W_M-orbit.
  Coweight m_dominant_rep(const Coweight& cw) const;
  RatVec m_dominant_rep(const RatVec& v) const;

  std::string name() const;  // e.g. "{1,3}", "A" for empty, "G" for full

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> delta_;          // 1..rank, sorted
  std::vector<bool> in_delta_;      // by simple index 0..rank-1
  std::vector<int> m_pos_, r_n_;
  IntVec rho_m_row2_, rho_n_row2_;  // rows of <2 rho_M, .>, <2 rho_N, .>
  LatticeQuotient quotient_;
};

/// All standard Levi data for a root system (all subsets of the simple
/// roots), in a deterministic order: by size, then lexicographic.
std::vector<LeviDatum> all_standard_levis(std::shared_ptr<const RootSystem> rs);

/// Sigma(mu): every coweight whose dominant representative is <= mu.
/// Sorted lexicographically.
std::vector<Coweight> sigma_mu(const RootSystem& rs, const Coweight& mu);
/// The dominant coweights <= mu (orbit representatives of Sigma(mu)).
std::vector<Coweight> dominant_below(const RootSystem& rs, const Coweight& mu);

struct MSubsets {
  std::vector<Coweight> m_dom;
  std::vector<Coweight> m_max;
};
MSubsets m_subsets(const RootSystem& rs, const Coweight& mu,
                   const LeviDatum& levi);

/// Weight multiplicities of the irreducible highest-weight module (for the
/// dual group) with highest weight mu, by the Freudenthal recursion.
/// Keys are coweight coordinate vectors; every W-orbit member is present.
using WeightMults = std::map<std::vector<Int>, Int>;
WeightMults weight_multiplicities(const RootSystem& rs, const Coweight& mu);
/// Same for the Levi M and an M-dominant highest weight.
WeightMults weight_multiplicities_levi(const RootSystem& rs,
                                       const LeviDatum& levi,
                                       const Coweight& mu_m);

/// Dimension by the Weyl formula (exact rational product, asserted integral).
Int weyl_dim(const RootSystem& rs, const Coweight& mu);
Int weyl_dim_levi(const RootSystem& rs, const LeviDatum& levi,
                  const Coweight& mu_m);

/// Branching multiplicities a_{lambda mu}: decomposition of the restriction
/// of the mu-character into M-characters, by iterated extraction of the
/// lexicographically largest remaining M-dominant weight.
using MCharacter = std::map<std::vector<Int>, Int>;
MCharacter branching(const RootSystem& rs, const Coweight& mu,
                     const LeviDatum& levi);

/// The intersection-dimension bound <rho, mu + mu_M> - 2<rho_M, mu_M>,
/// whether it is attained (the branching multiplicity is positive), and the
/// number of top-dimensional components (that multiplicity).
struct DIntersection {
  Rat bound;
  bool attained = false;
  Int components = 0;
};
DIntersection d_intersection(const RootSystem& rs, const Coweight& mu,
                             const Coweight& mu_m, const LeviDatum& levi);

/// Evaluates the Levi reduction of the dimension formula: the supremum of
/// M-side dimension plus intersection dimension over the maximal stratum in
/// the fiber of nu_class, plus the Newton-point correction, and checks it
/// against the closed formula <rho, mu - nu_bar_dom> - defect/2.
struct Thm581Result {
  bool nonempty = false;
  Int dim_sup = 0;
  Int dim_closed = 0;
  bool consistent = false;
  std::string note;
};
Thm581Result thm581_eval(const RootSystem& rs, const Coweight& mu,
                         const LeviDatum& levi, const IntVec& nu_class,
                         const RatVec& nu_bar, int defect);

/// Precomputed per-(mu, M) data for evaluating many nu classes.
struct LeviContext {
  MSubsets subs;
  MCharacter br;
};
LeviContext make_levi_context(const RootSystem& rs, const Coweight& mu,
                              const LeviDatum& levi);
Thm581Result thm581_eval_ctx(const RootSystem& rs, const Coweight& mu,
                             const LeviDatum& levi, const LeviContext& ctx,
                             const IntVec& nu_class, const RatVec& nu_bar,
                             int defect);

/// Image equality of the three subsets under p_M (a proved fact; asserted
/// by the acceptance suite).
bool lem3subsets_check(const RootSystem& rs, const Coweight& mu,
                       const LeviDatum& levi);

}  // namespace adlv
