#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdx/derand.hpp"
#include "hdx/io.hpp"
#include "hdx/lll.hpp"
#include "hdx/verifier.hpp"

namespace hdx {

inline constexpr const char* kToolName = "hdx";
inline constexpr const char* kToolVersion = "0.1.0";

enum class LiftMode { random, mt, derand };

const char* lift_mode_name(LiftMode m);

struct StageParams {
  std::uint64_t seed = 0;  // master seed; per-stage seeds are drawn from it
  LLLConfig lll;           // mt mode
  DerandParams derand;     // derand mode
};

struct StageRecord {
  int stage = 0;
  std::string complex_path, signing_path, report_path, stats_path;
  std::string complex_hash, signing_hash;
  bool pass = false;
};

struct FamilyRunResult {
  std::string base_path, base_hash;
  std::vector<StageRecord> stages;
  FamilyReport report;
  bool aborted = false;  // a failing stage stops the fold; artifacts retained
};

json make_meta(const std::string& command, json config);

/// Writes stage_0.complex.json, then per stage the signing/complex/report
/// artifacts with a lineage block chaining the predecessors' content hashes,
/// and finally family.report.json.
FamilyRunResult run_family(const SimplicialComplex& X0, int stages, LiftMode mode,
                           const StageParams& params, const std::string& out_dir);

/// Recomputes the hash chain of a family directory from the files themselves.
bool verify_family_lineage(const std::string& out_dir, int stages,
                           std::string* detail = nullptr);

}  // namespace hdx
