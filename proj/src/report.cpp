#include "adlv/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "adlv/adlv_grass.hpp"
#include "adlv/levi.hpp"

namespace adlv {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (max_len < 0) throw ConfigError("max-len must be nonnegative");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  if (radius < 0) throw ConfigError("radius must be nonnegative");
}

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::min(std::max(jobs, 1), std::max(n, 1));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// ---- cache ----

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::mutex g_cache_mu;

}  // namespace

std::string Cache::path_for(const std::string& key) const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(key)));
  return dir_ + "/" + buf + ".json";
}

std::optional<std::string> Cache::lookup(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    ojson j = ojson::parse(in);
    if (!j.is_object() || j.value("schema", 0) != 1) return std::nullopt;
    if (j.value("key", std::string()) != key) return std::nullopt;
    return j.at("value").get<std::string>();
  } catch (...) {
    return std::nullopt;  // corruption counts as a miss
  }
}

void Cache::store(const std::string& key, const std::string& value) const {
  if (!enabled()) return;
  std::lock_guard<std::mutex> lk(g_cache_mu);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  ojson j;
  j["schema"] = 1;
  j["key"] = key;
  j["value"] = value;
  std::string tmp = path_for(key) + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  fs::rename(tmp, path_for(key), ec);
}

// ---- row construction ----

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

const char* mode_tag(RunConfig::Mode m) {
  switch (m) {
    case RunConfig::Mode::FlagCensus:
      return "flag";
    case RunConfig::Mode::GrassCensus:
      return "grass";
    case RunConfig::Mode::Reuman:
      return "reuman";
    case RunConfig::Mode::Lau:
      return "lau";
    case RunConfig::Mode::PartialFolding:
      return "partial";
    case RunConfig::Mode::CompareB:
      return "compareb";
    case RunConfig::Mode::LeviCheck:
      return "levicheck";
    case RunConfig::Mode::Render:
      return "render";
  }
  return "?";
}

ojson opt_int(const std::optional<Int>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

Coweight nu_from_cfg(const RunConfig& cfg, int rank) {
  if (cfg.nu.empty()) return Coweight::Zero(rank);
  if (static_cast<int>(cfg.nu.size()) != rank)
    throw ConfigError("--nu needs " + std::to_string(rank) + " coordinates");
  return from_std(cfg.nu);
}

ojson flag_row(const RunConfig& cfg, const AffineWeylGroup& aw,
               const AffineWeylGroup::EnumElt& e, const Coweight& nu) {
  AdlvRecord rec = make_record_word(aw, e.x, e.word, nu);
  ojson j;
  j["sys"] = cfg.sys;
  j["x_word"] = e.word;
  j["len"] = e.len;
  j["chamber"] = aw.eta2(e.x);
  j["shrunken"] = rec.reuman_applicable;
  j["nonempty"] = rec.nonempty;
  j["dim"] = opt_int(rec.dim);
  j["reuman_nonempty"] = rec.reuman_nonempty;
  j["reuman_dim"] = opt_int(rec.reuman_dim);
  j["lau_nonempty"] = rec.lau ? ojson(*rec.lau) : ojson(nullptr);
  j["nu"] = to_std(nu);
  return j;
}

ojson compare_row(const RunConfig& cfg, const AffineWeylGroup& aw,
                  const AffineWeylGroup::EnumElt& e, const Coweight& nu) {
  CompareBRow c = compare_b_word(aw, e.word, nu);
  ojson j;
  j["sys"] = cfg.sys;
  j["x_word"] = e.word;
  j["len"] = e.len;
  j["chamber"] = aw.eta2(e.x);
  j["shrunken"] = aw.in_shrunken(e.x);
  j["nonempty_b"] = c.nonempty_b;
  j["dim_b"] = opt_int(c.dim_b);
  j["nonempty_1"] = c.nonempty_1;
  j["dim_1"] = opt_int(c.dim_1);
  j["len_tnu"] = c.len_tnu;
  j["match"] = c.match;
  j["nu"] = to_std(nu);
  return j;
}

ojson partial_row(const RunConfig& cfg, const AffineWeylGroup& aw,
                  const AffineWeylGroup::EnumElt& e, const Coweight& nu) {
  FoldClass fc = partial_fold_class(aw, e.x, cfg.orientation_w);
  ojson j;
  j["sys"] = cfg.sys;
  j["x_word"] = e.word;
  j["len"] = e.len;
  j["chamber"] = aw.eta2(e.x);
  j["shrunken"] = aw.in_shrunken(e.x);
  j["w"] = cfg.orientation_w;
  j["fold_class"] = fold_class_name(fc);
  j["nu"] = to_std(nu);
  return j;
}

/// Dominant coweights with <2 rho, mu> <= bound, sorted lexicographically.
std::vector<Coweight> dominant_up_to(const RootSystem& rs, Int bound) {
  std::vector<Coweight> out;
  Coweight mu = Coweight::Zero(rs.rank());
  Int budget = bound / 2;  // <rho, mu> = coordinate sum for dominant mu
  std::function<void(int, Int)> rec = [&](int pos, Int left) {
    if (pos == rs.rank()) {
      if (is_dominant(rs, mu)) out.push_back(mu);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      mu(pos) = v;
      rec(pos + 1, left - v);
    }
    mu(pos) = 0;
  };
  rec(0, budget);
  std::sort(out.begin(), out.end(),
            [](const Coweight& a, const Coweight& b) { return lex_less(a, b); });
  return out;
}

std::vector<ojson> census_rows_json(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.format == RunConfig::Format::Svg)
    throw ConfigError("svg output is only available through render");
  auto rs = RootSystem::build(cfg.sys);
  Cache cache(cfg.cache_dir);

  std::vector<ojson> rows;

  auto elementwise = [&](const std::function<ojson(
                             const AffineWeylGroup&,
                             const AffineWeylGroup::EnumElt&,
                             const Coweight&)>& make_row) {
    AffineWeylGroup aw(rs);
    Coweight nu = nu_from_cfg(cfg, rs->rank());
    auto elts = aw.enumerate(cfg.max_len);
    std::vector<ojson> out(elts.size());
    parallel_for(static_cast<int>(elts.size()), cfg.jobs, [&](int i) {
      const auto& e = elts[static_cast<std::size_t>(i)];
      std::string key = std::string("rowv1|") + cfg.sys + "|" +
                        mode_tag(cfg.mode) + "|nu=" + join(to_std(nu)) +
                        "|w=" + std::to_string(cfg.orientation_w) +
                        "|x=" + join(e.word);
      if (auto hit = cache.lookup(key)) {
        out[static_cast<std::size_t>(i)] = ojson::parse(*hit);
        return;
      }
      ojson row = make_row(aw, e, nu);
      cache.store(key, row.dump());
      out[static_cast<std::size_t>(i)] = std::move(row);
    });
    rows = std::move(out);
  };

  switch (cfg.mode) {
    case RunConfig::Mode::FlagCensus:
    case RunConfig::Mode::Reuman:
    case RunConfig::Mode::Lau:
      if (cfg.mode == RunConfig::Mode::Lau && cfg.sys != "A2")
        throw ConfigError("lau mode is A2-only");
      elementwise([&cfg](const AffineWeylGroup& aw, const auto& e,
                         const Coweight& nu) { return flag_row(cfg, aw, e, nu); });
      break;
    case RunConfig::Mode::CompareB:
      elementwise([&cfg](const AffineWeylGroup& aw, const auto& e,
                         const Coweight& nu) {
        return compare_row(cfg, aw, e, nu);
      });
      break;
    case RunConfig::Mode::PartialFolding:
      if (cfg.orientation_w < 0 || cfg.orientation_w >= rs->order())
        throw ConfigError("--w out of range for " + cfg.sys);
      elementwise([&cfg](const AffineWeylGroup& aw, const auto& e,
                         const Coweight& nu) {
        return partial_row(cfg, aw, e, nu);
      });
      break;
    case RunConfig::Mode::GrassCensus: {
      std::vector<std::pair<Coweight, Coweight>> tasks;
      for (const Coweight& mu : dominant_up_to(*rs, cfg.max_len))
        for (const Coweight& nu : sigma_mu(*rs, mu)) tasks.emplace_back(mu, nu);
      rows.resize(tasks.size());
      parallel_for(static_cast<int>(tasks.size()), cfg.jobs, [&](int i) {
        const auto& [mu, nu] = tasks[static_cast<std::size_t>(i)];
        ojson j;
        j["sys"] = cfg.sys;
        j["mu"] = to_std(mu);
        j["nu"] = to_std(nu);
        auto d = dim_grass(*rs, mu, nu);
        j["nonempty"] = d.has_value();
        j["dim"] = opt_int(d);
        j["mv_dim"] = opt_int(mv_dim(*rs, mu, nu));
        rows[static_cast<std::size_t>(i)] = std::move(j);
      });
      break;
    }
    case RunConfig::Mode::LeviCheck: {
      auto levis = all_standard_levis(rs);
      auto mus = dominant_up_to(*rs, cfg.max_len);
      struct Group {
        Coweight mu;
        int levi_idx;
        LeviContext ctx;
        bool lem;
      };
      std::vector<Group> groups;
      for (const Coweight& mu : mus)
        for (std::size_t li = 0; li < levis.size(); ++li) {
          Group g{mu, static_cast<int>(li),
                  make_levi_context(*rs, mu, levis[li]),
                  lem3subsets_check(*rs, mu, levis[li])};
          groups.push_back(std::move(g));
        }
      struct Task {
        const Group* group;
        Coweight nu;
      };
      std::vector<Task> tasks;
      for (const Group& g : groups)
        for (const Coweight& nu : sigma_mu(*rs, g.mu))
          tasks.push_back({&g, nu});
      rows.resize(tasks.size());
      parallel_for(static_cast<int>(tasks.size()), cfg.jobs, [&](int i) {
        const Task& t = tasks[static_cast<std::size_t>(i)];
        const LeviDatum& levi = levis[static_cast<std::size_t>(
            t.group->levi_idx)];
        RatVec nu_bar(rs->rank());
        Coweight mrep = levi.m_dominant_rep(t.nu);
        for (int k = 0; k < rs->rank(); ++k) nu_bar(k) = Rat(mrep(k));
        Thm581Result r = thm581_eval_ctx(*rs, t.group->mu, levi, t.group->ctx,
                                         levi.p_m(t.nu), nu_bar, 0);
        ojson j;
        j["sys"] = cfg.sys;
        j["mu"] = to_std(t.group->mu);
        j["levi"] = levi.name();
        j["nu_class"] = to_std(levi.p_m(t.nu));
        j["nu"] = to_std(t.nu);
        j["nonempty"] = r.nonempty;
        j["dim_sup"] = r.nonempty ? ojson(r.dim_sup) : ojson(nullptr);
        j["dim_closed"] = r.nonempty ? ojson(r.dim_closed) : ojson(nullptr);
        j["consistent"] = r.nonempty ? ojson(r.consistent) : ojson(nullptr);
        j["lem53"] = t.group->lem;
        rows[static_cast<std::size_t>(i)] = std::move(j);
      });
      break;
    }
    case RunConfig::Mode::Render:
      throw ConfigError("render mode has no row stream; use the renderer");
  }
  return rows;
}

std::string csv_cell(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<Int>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(v[i].get<Int>());
    }
    return s + "\"";
  }
  return v.dump();
}

std::vector<std::string> to_lines(const RunConfig& cfg,
                                  const std::vector<ojson>& rows) {
  std::vector<std::string> lines;
  lines.reserve(rows.size() + 1);
  if (cfg.format == RunConfig::Format::Csv && !rows.empty()) {
    std::string h;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
      if (!h.empty()) h += ",";
      h += it.key();
    }
    lines.push_back(h);
  }
  for (const auto& row : rows) {
    if (cfg.format == RunConfig::Format::Csv) {
      std::string line;
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (!line.empty()) line += ",";
        line += csv_cell(it.value());
      }
      lines.push_back(line);
    } else {
      lines.push_back(row.dump());
    }
  }
  return lines;
}

CensusSummary fold_summary(const RunConfig& cfg,
                           const std::vector<ojson>& rows) {
  CensusSummary s;
  bool proven = cfg.sys == "A2" || cfg.sys == "C2";
  for (const ojson& j : rows) {
    ++s.rows;
    if (j.contains("len")) s.max_len = std::max(s.max_len, j["len"].get<int>());
    if (j.contains("nonempty") && j["nonempty"].is_boolean()) {
      if (j["nonempty"].get<bool>())
        ++s.nonempty_count;
      else
        ++s.empty_count;
    }
    if (cfg.mode == RunConfig::Mode::FlagCensus ||
        cfg.mode == RunConfig::Mode::Reuman ||
        cfg.mode == RunConfig::Mode::Lau) {
      if (j["shrunken"].get<bool>()) {
        ++s.reuman_checked;
        bool agree = j["nonempty"] == j["reuman_nonempty"] &&
                     j["dim"] == j["reuman_dim"];
        if (agree)
          ++s.reuman_agree;
        else
          ++s.reuman_disagree;
      }
      if (cfg.mode == RunConfig::Mode::Lau && !j["lau_nonempty"].is_null()) {
        ++s.lau_checked;
        if (j["lau_nonempty"] != j["nonempty"]) ++s.lau_disagree;
      }
    }
    if (cfg.mode == RunConfig::Mode::CompareB) {
      if (j["match"].get<bool>())
        ++s.compare_match;
      else
        ++s.compare_mismatch;
    }
    if (cfg.mode == RunConfig::Mode::LeviCheck) {
      bool bad = !j["lem53"].get<bool>() ||
                 (!j["consistent"].is_null() && !j["consistent"].get<bool>());
      if (bad) ++s.inconsistent;
    }
  }
  if (cfg.mode == RunConfig::Mode::Reuman && proven && s.reuman_disagree > 0) {
    s.violation = true;
    s.violation_msg = "Reuman criterion disagreement on a proven type";
  }
  if (cfg.mode == RunConfig::Mode::Lau && s.lau_disagree > 0) {
    s.violation = true;
    s.violation_msg = "power criterion disagrees with the folding dimensions";
  }
  if (cfg.mode == RunConfig::Mode::LeviCheck && s.inconsistent > 0) {
    s.violation = true;
    s.violation_msg = "Levi reduction inconsistency";
  }
  return s;
}

}  // namespace

std::vector<std::string> census_row_strings(const RunConfig& cfg) {
  return to_lines(cfg, census_rows_json(cfg));
}

CensusSummary run_census(const RunConfig& cfg, std::ostream& out) {
  auto rows = census_rows_json(cfg);
  for (const auto& l : to_lines(cfg, rows)) out << l << "\n";
  return fold_summary(cfg, rows);
}

std::string format_summary(const CensusSummary& s) {
  std::ostringstream os;
  os << "rows=" << s.rows << " nonempty=" << s.nonempty_count
     << " empty=" << s.empty_count << " max_len=" << s.max_len;
  if (s.reuman_checked)
    os << " shrunken_checked=" << s.reuman_checked
       << " agree=" << s.reuman_agree << " disagree=" << s.reuman_disagree;
  if (s.lau_checked)
    os << " lau_checked=" << s.lau_checked
       << " lau_disagree=" << s.lau_disagree;
  if (s.compare_match + s.compare_mismatch)
    os << " match=" << s.compare_match << " mismatch=" << s.compare_mismatch;
  if (s.inconsistent) os << " inconsistent=" << s.inconsistent;
  if (s.violation) os << " VIOLATION: " << s.violation_msg;
  return os.str();
}

}  // namespace adlv
