#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "adlv/report.hpp"
#include "adlv/svg.hpp"

namespace {

std::vector<adlv::Int> parse_nu(const std::string& s) {
  std::vector<adlv::Int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<adlv::Int>(std::stoll(item)));
  return out;
}

int run_rows(const adlv::RunConfig& cfg) {
  std::ostringstream buf;
  adlv::CensusSummary summary = adlv::run_census(cfg, buf);
  if (cfg.out_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw adlv::ConfigError("cannot open " + cfg.out_path);
    out << buf.str();
  }
  std::cerr << adlv::format_summary(summary) << "\n";
  return summary.violation ? 1 : 0;
}

int run_render(const adlv::RunConfig& cfg, double radius,
               const std::string& figure) {
  auto rs = adlv::RootSystem::build(cfg.sys);
  adlv::AffineWeylGroup aw(rs);
  double r = radius > 0 ? radius : std::max(4.0, cfg.max_len / 2.0);
  adlv::Coweight nu = cfg.nu.empty()
                          ? adlv::Coweight::Zero(rs->rank())
                          : adlv::from_std(cfg.nu);
  std::string svg =
      figure == "partial"
          ? adlv::render_partial_figure(aw, cfg.orientation_w, r, cfg.jobs)
          : adlv::render_status_figure(aw, nu, r, cfg.jobs);
  if (cfg.out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw adlv::ConfigError("cannot open " + cfg.out_path);
    out << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact non-emptiness and dimension computations for affine "
               "Deligne-Lusztig varieties"};
  app.require_subcommand(1);

  adlv::RunConfig cfg;
  std::string nu_str;
  std::string format = "json-lines";
  std::string figure = "status";
  double radius = 0.0;

  auto add_common = [&](CLI::App* sub, bool with_len = true) {
    sub->add_option("--sys", cfg.sys,
                    "root system (A1..A4, B2, B3, C2..C4, D4, G2)");
    if (with_len) sub->add_option("--max-len", cfg.max_len, "length bound");
    sub->add_option("--nu", nu_str,
                    "translation coweight, comma-separated coordinates in "
                    "the simple-coroot basis");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_option("--format", format, "json-lines | csv");
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--cache-dir", cfg.cache_dir, "persistent row cache");
  };

  auto* census = app.add_subcommand(
      "census", "enumerate x up to a length bound and report dim X_x(eps^nu)");
  add_common(census);
  auto* reuman = app.add_subcommand(
      "reuman",
      "census plus shrunken-chamber comparison against the Reuman criterion "
      "(exit 1 on disagreement for A2/C2)");
  add_common(reuman);
  auto* lau = app.add_subcommand(
      "lau", "A2 census checking the power-length criterion (exit 1 on "
             "mismatch)");
  add_common(lau);
  auto* partial = app.add_subcommand(
      "partial-folding",
      "per-direction folding classes white/light/medium/dark");
  add_common(partial);
  partial->add_option("--w", cfg.orientation_w, "finite Weyl element index");
  auto* compareb = app.add_subcommand(
      "compare-b", "compare dim X_x(eps^nu) with dim X_x(1) - len(t_nu)/2");
  add_common(compareb);
  auto* grass = app.add_subcommand(
      "grass", "closed-formula dims over dominant mu with <2rho,mu> <= bound");
  add_common(grass);
  auto* levicheck = app.add_subcommand(
      "levi-check",
      "Levi reduction consistency for every standard Levi (exit 1 on "
      "violation)");
  add_common(levicheck);
  auto* render = app.add_subcommand(
      "render", "rank-2 apartment figure as SVG");
  add_common(render);
  render->add_option("--radius", radius, "disk radius around the origin");
  render->add_option("--w", cfg.orientation_w,
                     "direction for the partial figure");
  render->add_option("--figure", figure, "status | partial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.nu = parse_nu(nu_str);
    if (format == "csv")
      cfg.format = adlv::RunConfig::Format::Csv;
    else if (format == "json-lines")
      cfg.format = adlv::RunConfig::Format::JsonLines;
    else if (format == "svg")
      cfg.format = adlv::RunConfig::Format::Svg;
    else
      throw adlv::ConfigError("unknown format " + format);

    if (census->parsed()) cfg.mode = adlv::RunConfig::Mode::FlagCensus;
    if (reuman->parsed()) cfg.mode = adlv::RunConfig::Mode::Reuman;
    if (lau->parsed()) cfg.mode = adlv::RunConfig::Mode::Lau;
    if (partial->parsed()) cfg.mode = adlv::RunConfig::Mode::PartialFolding;
    if (compareb->parsed()) cfg.mode = adlv::RunConfig::Mode::CompareB;
    if (grass->parsed()) cfg.mode = adlv::RunConfig::Mode::GrassCensus;
    if (levicheck->parsed()) cfg.mode = adlv::RunConfig::Mode::LeviCheck;
    if (render->parsed()) {
      cfg.mode = adlv::RunConfig::Mode::Render;
      return run_render(cfg, radius, figure);
    }
    return run_rows(cfg);
  } catch (const adlv::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
