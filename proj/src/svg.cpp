#include "adlv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include "adlv/report.hpp"

namespace adlv {

namespace {

// Fixed palette (documented in the README):
//   empty #ffffff, nonempty #bdbdbd, base #000000,
//   light #e8e8e8, medium #969696, dark #4f4f4f; strokes #404040.
const char* fill_color(RenderCell::Fill f) {
  switch (f) {
    case RenderCell::Fill::Empty:
      return "#ffffff";
    case RenderCell::Fill::NonEmpty:
      return "#bdbdbd";
    case RenderCell::Fill::Base:
      return "#000000";
    case RenderCell::Fill::Light:
      return "#e8e8e8";
    case RenderCell::Fill::Medium:
      return "#969696";
    case RenderCell::Fill::Dark:
      return "#4f4f4f";
  }
  return "#ffffff";
}

struct Embedding {
  double e1x, e1y, e2x, e2y;

  static Embedding from(const RootSystem& rs) {
    Coweight u1 = Coweight::Zero(2), u2 = Coweight::Zero(2);
    u1(0) = 1;
    u2(1) = 1;
    double g11 = static_cast<double>(rs.form(u1, u1));
    double g12 = static_cast<double>(rs.form(u1, u2));
    double g22 = static_cast<double>(rs.form(u2, u2));
    Embedding e{};
    e.e1x = std::sqrt(g11);
    e.e1y = 0;
    e.e2x = g12 / e.e1x;
    e.e2y = std::sqrt(g22 - e.e2x * e.e2x);
    return e;
  }

  std::pair<double, double> map(const RatVec& v) const {
    double a = v(0).to_double(), b = v(1).to_double();
    return {a * e1x + b * e2x, a * e1y + b * e2y};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double norm_of(const Embedding& emb, const RatVec& v) {
  auto [x, y] = emb.map(v);
  return std::hypot(x, y);
}

}  // namespace

std::vector<AffineWeylElt> alcoves_in_disk(const AffineWeylGroup& aw,
                                           double radius) {
  if (aw.rank() != 2) throw ConfigError("apartment figures need rank 2");
  Embedding emb = Embedding::from(aw.rs());
  const double margin = 1.5;  // one alcove diameter of slack for the BFS

  std::vector<AffineWeylElt> queue{aw.identity()};
  std::unordered_set<AffineWeylElt, AffineEltHash,
                     std::equal_to<AffineWeylElt>>
      seen{aw.identity()};
  std::vector<AffineWeylElt> inside;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    AffineWeylElt z = queue[h];
    double d = norm_of(emb, aw.barycenter(z));
    if (d <= radius) inside.push_back(z);
    if (d > radius + margin) continue;
    for (int i = 0; i <= aw.rank(); ++i) {
      AffineWeylElt z2 = aw.right_mult_gen(z, i);
      if (seen.insert(z2).second) queue.push_back(z2);
    }
  }
  std::sort(inside.begin(), inside.end(),
            [](const AffineWeylElt& a, const AffineWeylElt& b) {
              if (lex_less(a.lambda, b.lambda)) return true;
              if (lex_less(b.lambda, a.lambda)) return false;
              return a.w < b.w;
            });
  return inside;
}

std::string render_apartment(const AffineWeylGroup& aw,
                             const std::vector<RenderCell>& cells,
                             double radius) {
  if (aw.rank() != 2) throw ConfigError("apartment figures need rank 2");
  const RootSystem& rs = aw.rs();
  Embedding emb = Embedding::from(rs);
  const double scale = 60.0;
  double extent = (radius + 0.8) * scale;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += fmt(-extent) + " " + fmt(-extent) + " " + fmt(2 * extent) + " " +
         fmt(2 * extent) + "\">\n";
  svg += "<!-- apartment of " + rs.label() +
         "; palette: empty #ffffff, nonempty #bdbdbd, base #000000, "
         "light #e8e8e8, medium #969696, dark #4f4f4f -->\n";

  // base-alcove vertices in coweight coordinates: 0 and w_i^vee / m_i
  std::vector<RatVec> base_verts;
  base_verts.push_back(RatVec::Constant(2, Rat(0)));
  const IntVec& marks = rs.positive_root(rs.theta());
  for (int i = 1; i <= 2; ++i) {
    RatVec v = rs.fundamental_coweight(i);
    for (int j = 0; j < 2; ++j) v(j) /= Rat(marks(i - 1));
    base_verts.push_back(v);
  }

  for (const RenderCell& cell : cells) {
    std::string pts;
    for (const RatVec& bv : base_verts) {
      RatVec v = rs.w_apply(cell.x.w, bv);
      for (int j = 0; j < 2; ++j) v(j) += Rat(cell.x.lambda(j));
      auto [px, py] = emb.map(v);
      if (!pts.empty()) pts += " ";
      pts += fmt(px * scale) + "," + fmt(-py * scale);
    }
    svg += "<polygon points=\"" + pts + "\" fill=\"" +
           fill_color(cell.fill) + "\" stroke=\"#404040\" stroke-width=\"0.8\"/>\n";
  }
  // labels after all polygons so they stay on top
  for (const RenderCell& cell : cells) {
    if (!cell.dim_label) continue;
    auto [bx, by] = emb.map(aw.barycenter(cell.x));
    svg += "<text x=\"" + fmt(bx * scale) + "\" y=\"" +
           fmt(-by * scale + 4.0) +
           "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#202020\">" +
           std::to_string(*cell.dim_label) + "</text>\n";
  }
  svg += "<circle cx=\"0\" cy=\"0\" r=\"3.5\" fill=\"#000000\"/>\n";
  svg += "</svg>\n";
  return svg;
}

std::string render_status_figure(const AffineWeylGroup& aw, const Coweight& nu,
                                 double radius, int jobs) {
  auto alcoves = alcoves_in_disk(aw, radius);
  std::vector<RenderCell> cells(alcoves.size());
  parallel_for(static_cast<int>(alcoves.size()), jobs, [&](int i) {
    const AffineWeylElt& x = alcoves[static_cast<std::size_t>(i)];
    auto d = dim_flag(aw, x, nu);
    RenderCell c;
    c.x = x;
    if (x == aw.identity()) {
      c.fill = RenderCell::Fill::Base;
    } else if (d) {
      c.fill = RenderCell::Fill::NonEmpty;
      c.dim_label = *d;
    } else {
      c.fill = RenderCell::Fill::Empty;
    }
    cells[static_cast<std::size_t>(i)] = std::move(c);
  });
  return render_apartment(aw, cells, radius);
}

std::string render_partial_figure(const AffineWeylGroup& aw, int w,
                                  double radius, int jobs) {
  auto alcoves = alcoves_in_disk(aw, radius);
  std::vector<RenderCell> cells(alcoves.size());
  parallel_for(static_cast<int>(alcoves.size()), jobs, [&](int i) {
    const AffineWeylElt& x = alcoves[static_cast<std::size_t>(i)];
    RenderCell c;
    c.x = x;
    switch (partial_fold_class(aw, x, w)) {
      case FoldClass::White:
        c.fill = RenderCell::Fill::Empty;
        break;
      case FoldClass::Light:
        c.fill = RenderCell::Fill::Light;
        break;
      case FoldClass::Medium:
        c.fill = RenderCell::Fill::Medium;
        break;
      case FoldClass::Dark:
        c.fill = RenderCell::Fill::Dark;
        break;
    }
    cells[static_cast<std::size_t>(i)] = std::move(c);
  });
  return render_apartment(aw, cells, radius);
}

}  // namespace adlv
