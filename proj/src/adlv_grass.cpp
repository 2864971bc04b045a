#include "adlv/adlv_grass.hpp"

namespace adlv {

namespace {

void require_dominant(const RootSystem& rs, const Coweight& mu) {
  if (!is_dominant(rs, mu)) throw ConfigError("mu must be dominant");
}

}  // namespace

std::optional<Int> dim_grass(const RootSystem& rs, const Coweight& mu,
                             const Coweight& nu) {
  require_dominant(rs, mu);
  Coweight nu_dom = dominant_rep(rs, nu).first;
  if (!leq_dominance(nu_dom, mu)) return std::nullopt;
  Int d = rs.rho_pairing(Coweight(mu - nu_dom)).to_int();
  if (d < 0) throw InvariantError("negative Grassmannian dimension");
  return d;
}

std::optional<Int> mv_dim(const RootSystem& rs, const Coweight& mu,
                          const Coweight& nu) {
  require_dominant(rs, mu);
  Coweight nu_dom = dominant_rep(rs, nu).first;
  if (!leq_dominance(nu_dom, mu)) return std::nullopt;
  return rs.rho_pairing(Coweight(mu + nu)).to_int();
}

std::optional<Int> mv_dim_u_form(const RootSystem& rs, const Coweight& mu,
                                 const Coweight& nu) {
  require_dominant(rs, mu);
  Coweight nu_dom = dominant_rep(rs, nu).first;
  if (!leq_dominance(nu_dom, mu)) return std::nullopt;
  return rs.rho_pairing(Coweight(mu - nu)).to_int();
}

Int rapoport_dim(const RootSystem& rs, const Coweight& mu,
                 const NewtonInput& nb) {
  require_dominant(rs, mu);
  if (!is_dominant(rs, nb.nu_bar))
    throw ConfigError("Newton point must be dominant");
  if (nb.defect < 0 || nb.defect > rs.rank())
    throw ConfigError("defect out of range");
  RatVec diff(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) diff(i) = Rat(mu(i)) - nb.nu_bar(i);
  Rat v = rs.rho_pairing(diff) - Rat(nb.defect, 2);
  if (!v.is_integer())
    throw InvariantError("dimension formula value is not an integer: " +
                         v.str());
  return v.to_int();
}

}  // namespace adlv
