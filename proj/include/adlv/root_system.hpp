#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "adlv/rational.hpp"

namespace adlv {

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

/// Coweight in the basis of simple coroots.  Pairings with roots go through
/// the Cartan matrix, so every value below is integer-exact.
using Coweight = IntVec;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Image of a root under a Weyl element: +/- a positive root.
struct SignedRoot {
  int index;
  int sign;  // +1 or -1
};

/// Immutable tables for one of the supported finite root systems
/// (A1..A4, B2..B3, C2..C4, D4, G2): positive roots and coroots, Cartan
/// pairings, the full finite Weyl group with action matrices on the coweight
/// lattice, fundamental coweights and the base-alcove barycenter.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(char type, int rank);
  static std::shared_ptr<const RootSystem> build(const std::string& label);

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }

  /// cartan()(i,j) = <alpha_{i+1}, alpha_{j+1}^vee>.
  const IntMat& cartan() const { return cartan_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  /// Simple-root coordinates of the a-th positive root (0-based index).
  const IntVec& positive_root(int a) const { return roots_[a].root; }
  /// Simple-coroot coordinates of its coroot.
  const IntVec& positive_coroot(int a) const { return roots_[a].coroot; }
  int root_height(int a) const { return roots_[a].height; }

  /// Index of the highest root theta.
  int theta() const { return theta_; }
  const IntVec& theta_coroot() const { return roots_[theta_].coroot; }

  /// <alpha, cw> for a root given in simple-root coordinates.
  Int pairing(const IntVec& root_coords, const Coweight& cw) const;
  /// <alpha_a, cw> for the a-th positive root.
  Int pair_pos(int a, const Coweight& cw) const;
  Rat pair_pos(int a, const RatVec& v) const;
  /// <rho, cw> = half the sum of <alpha, cw> over positive roots.
  Rat rho_pairing(const Coweight& cw) const;
  Rat rho_pairing(const RatVec& v) const;

  /// W-invariant form B(x, y) = sum over positive roots of <a,x><a,y>.
  Int form(const Coweight& x, const Coweight& y) const;

  /// Fundamental coweight dual to alpha_i (i in 1..rank).
  const RatVec& fundamental_coweight(int i) const { return fund_cw_[i - 1]; }
  /// Barycenter of the base alcove (interior point, off every wall).
  const RatVec& base_barycenter() const { return base_bary_; }
  /// Sum of all positive coroots (= 2 rho^vee).
  const IntVec& two_rho_vee() const { return two_rho_vee_; }

  // --- finite Weyl group (elements indexed 0..order-1, 0 = identity) ---
  int order() const { return static_cast<int>(welts_.size()); }
  const IntMat& w_matrix(int w) const { return welts_[w].mat; }
  /// One reduced word, letters in 1..rank.
  const std::vector<int>& w_word(int w) const { return welts_[w].word; }
  int w_length(int w) const { return static_cast<int>(welts_[w].word.size()); }
  int w_mult(int a, int b) const { return mult_[a * order() + b]; }
  int w_inv(int w) const { return welts_[w].inv; }
  /// Index of the simple reflection s_i (i in 1..rank).
  int simple(int i) const { return simple_[i - 1]; }
  int longest() const { return longest_; }
  int theta_reflection() const { return s_theta_; }
  /// w(alpha_a) as a signed positive root.
  SignedRoot w_root_image(int w, int a) const {
    return root_image_[w * num_positive_roots() + a];
  }
  /// True iff w^{-1}(alpha_a) is a negative root.
  bool w_neg(int w, int a) const {
    return w_root_image(welts_[w].inv, a).sign < 0;
  }
  Coweight w_apply(int w, const Coweight& cw) const {
    return welts_[w].mat * cw;
  }
  RatVec w_apply(int w, const RatVec& v) const;
  /// w(theta^vee), cached.
  const IntVec& w_theta_coroot(int w) const { return welts_[w].theta_cw; }

 private:
  struct RootData {
    IntVec root;    // simple-root coordinates
    IntVec coroot;  // simple-coroot coordinates
    int height;
  };
  struct WeylData {
    IntMat mat;  // action on the coweight lattice
    std::vector<int> word;
    int inv;
    IntVec theta_cw;
  };

  RootSystem() = default;
  void init(char type, int rank);
  void build_roots();
  void build_weyl();

  std::string label_;
  int rank_ = 0;
  IntMat cartan_;
  std::vector<RootData> roots_;
  int theta_ = -1;
  IntMat pair_rows_;  // row a = alpha_a^T * cartan
  IntVec two_rho_row_;
  IntVec two_rho_vee_;
  std::vector<RatVec> fund_cw_;
  RatVec base_bary_;

  std::vector<WeylData> welts_;
  std::vector<int> mult_;
  std::vector<int> simple_;
  std::vector<SignedRoot> root_image_;
  int longest_ = -1;
  int s_theta_ = -1;
};

/// Spec operation: build_root_system(type_label, rank).
std::shared_ptr<const RootSystem> build_root_system(char type, int rank);

bool is_dominant(const RootSystem& rs, const Coweight& cw);
bool is_dominant(const RootSystem& rs, const RatVec& v);

/// Unique dominant element of the W-orbit together with a witness w such
/// that w(cw) is the returned coweight.
std::pair<Coweight, int> dominant_rep(const RootSystem& rs, const Coweight& cw);
std::pair<RatVec, int> dominant_rep(const RootSystem& rs, const RatVec& v);

/// nu <= mu in the dominance order: mu - nu is a nonnegative integral
/// combination of simple coroots.
bool leq_dominance(const Coweight& nu, const Coweight& mu);

/// Full W-orbit, sorted lexicographically (deterministic).
std::vector<Coweight> weyl_orbit(const RootSystem& rs, const Coweight& cw);

bool lex_less(const IntVec& a, const IntVec& b);
std::vector<Int> to_std(const IntVec& v);
IntVec from_std(const std::vector<Int>& v);

}  // namespace adlv
