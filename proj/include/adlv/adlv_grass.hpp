#pragma once

#include <optional>

#include "adlv/root_system.hpp"

namespace adlv {

/// Caller-supplied data for a general sigma-conjugacy class: the dominant
/// rational Newton point and the defect.  Never computed from group
/// elements here.
struct NewtonInput {
  RatVec nu_bar;
  int defect = 0;
};

/// dim X_mu(eps^nu) in the affine Grassmannian: empty unless
/// nu_dom <= mu, else <rho, mu - nu_dom>.
std::optional<Int> dim_grass(const RootSystem& rs, const Coweight& mu,
                             const Coweight& nu);

/// Mirkovic-Vilonen: dim of the intersection of the K-orbit of mu with the
/// U(L)-orbit of nu: <rho, mu + nu> when nu_dom <= mu.
std::optional<Int> mv_dim(const RootSystem& rs, const Coweight& mu,
                          const Coweight& nu);

/// The U(L) form of the same count: dim K eps^mu K eps^{-nu} cap U(L)
/// = <rho, mu - nu>.
std::optional<Int> mv_dim_u_form(const RootSystem& rs, const Coweight& mu,
                                 const Coweight& nu);

/// Dimension formula evaluator <rho, mu - nu_bar> - defect/2 for a
/// non-empty X_mu(b); the caller asserts non-emptiness.
Int rapoport_dim(const RootSystem& rs, const Coweight& mu,
                 const NewtonInput& nb);

}  // namespace adlv
