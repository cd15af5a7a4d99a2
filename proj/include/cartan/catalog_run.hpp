#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/serialize.hpp"

namespace cartan {

enum class Status { Pass, Fail, Undecided };
std::string to_string(Status s);

struct ItemResult {
  size_t index = 0;
  std::string kind;     // graded | pair | row | file
  std::string section;  // grouping key for reports
  std::string label;
  Status status = Status::Pass;
  std::vector<Certificate> checks;
  std::vector<ExistenceVerdict> verdicts;
  std::string detail;
  double seconds = 0;
};

struct RunManifest {
  std::uint64_t seed = 0;
  std::vector<std::string> commands;
  Json grid;
  std::vector<ItemResult> items;
  size_t passed = 0, failed = 0, undecided = 0;

  /// Undecided items do not fail the run.
  bool overall_pass() const { return failed == 0; }
  /// Timings live under "timings" so that the rest compares byte for byte.
  Json to_json(bool with_timings = true) const;
};

/// Rows for every catalog family and rank in the desk-scale default grid.
Json default_grid();

struct RunOptions {
  std::uint64_t seed = 0;
  std::vector<std::string> commands;
  std::string base_dir = ".";  // resolves relative "file" rows
  unsigned workers = 0;        // 0: hardware concurrency
};

/// Accepts {"rows": [...]} or a bare array. Throws InputError when the grid
/// itself is malformed; a bad row only fails that row.
RunManifest verify_catalog(const Json& grid, const RunOptions& opt);
ItemResult run_row(const Json& row, std::uint64_t seed, size_t index, const std::string& base_dir = ".");

std::string manifest_markdown(const RunManifest& m);
std::string verdict_markdown(const ExistenceVerdict& v);

}  // namespace cartan
