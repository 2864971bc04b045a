#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "adlv/adlv_flag.hpp"

namespace adlv {

struct RunConfig {
  enum class Mode {
    FlagCensus,
    GrassCensus,
    Reuman,
    Lau,
    PartialFolding,
    CompareB,
    LeviCheck,
    Render
  };
  enum class Format { JsonLines, Csv, Svg };

  std::string sys = "A2";
  int max_len = 0;
  std::vector<Int> nu;  // simple-coroot coordinates; empty means zero
  Mode mode = Mode::FlagCensus;
  int orientation_w = 0;  // partial-folding direction
  int jobs = 1;
  std::string out_path;
  std::string cache_dir;
  Format format = Format::JsonLines;
  double radius = 0.0;  // render only; 0 derives a radius from max_len

  void validate() const;
};

struct CensusSummary {
  Int rows = 0;
  Int empty_count = 0;
  Int nonempty_count = 0;
  Int reuman_checked = 0;
  Int reuman_agree = 0;
  Int reuman_disagree = 0;
  Int lau_checked = 0;
  Int lau_disagree = 0;
  Int compare_match = 0;
  Int compare_mismatch = 0;
  Int inconsistent = 0;
  int max_len = 0;
  bool violation = false;
  std::string violation_msg;
};

/// Content-addressed persistent row cache.  Keys carry a schema version;
/// a file whose stored key does not match exactly is treated as a miss.
class Cache {
 public:
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}
  bool enabled() const { return !dir_.empty(); }
  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& value) const;

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

/// Runs the configured enumeration, writes one JSON (or CSV) row per line in
/// deterministic order, and returns the summary folded from the rows.
CensusSummary run_census(const RunConfig& cfg, std::ostream& out);

/// Serialized rows only (used by the renderer and the tests).
std::vector<std::string> census_row_strings(const RunConfig& cfg);

void parallel_for(int n, int jobs, const std::function<void(int)>& body);

std::string format_summary(const CensusSummary& s);

}  // namespace adlv
