#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlv/adlv_flag.hpp"

namespace adlv {

/// One alcove of a rank-2 apartment figure.
struct RenderCell {
  AffineWeylElt x;
  enum class Fill { Empty, NonEmpty, Base, Light, Medium, Dark } fill;
  std::optional<Int> dim_label;
};

/// Alcoves whose barycenter lies in the closed disk of the given radius
/// around the origin (distances via the W-invariant form), found by BFS over
/// wall adjacency; sorted deterministically.
std::vector<AffineWeylElt> alcoves_in_disk(const AffineWeylGroup& aw,
                                           double radius);

/// Static SVG of the apartment: one triangle per cell, fills per status,
/// dimension labels, a dot at the origin.  Byte-deterministic for fixed
/// inputs.
std::string render_apartment(const AffineWeylGroup& aw,
                             const std::vector<RenderCell>& cells,
                             double radius);

/// Census figure: non-empty alcoves gray with dimension labels, empty white,
/// base alcove black.
std::string render_status_figure(const AffineWeylGroup& aw, const Coweight& nu,
                                 double radius, int jobs);

/// Partial-folding figure for one direction w: the four-shade legend.
std::string render_partial_figure(const AffineWeylGroup& aw, int w,
                                  double radius, int jobs);

}  // namespace adlv
