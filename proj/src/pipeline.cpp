#include "hdx/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

namespace hdx {

const char* lift_mode_name(LiftMode m) {
  switch (m) {
    case LiftMode::random: return "random";
    case LiftMode::mt: return "mt";
    case LiftMode::derand: return "derand";
  }
  return "?";
}

json make_meta(const std::string& command, json config) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"config", std::move(config)}};
}

namespace {

std::string stage_path(const std::string& dir, int stage, const std::string& kind) {
  return dir + "/stage_" + std::to_string(stage) + "." + kind + ".json";
}

// Writes the artifact and returns the hash of the exact bytes on disk.
std::string write_hashed(const std::string& path, const json& j) {
  const std::string bytes = canonical_dump(j);
  write_text_file(path, bytes);
  return content_hash(bytes);
}

}  // namespace

FamilyRunResult run_family(const SimplicialComplex& X0, int stages, LiftMode mode,
                           const StageParams& params, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  FamilyRunResult result;

  const std::string command = std::string("family --mode ") + lift_mode_name(mode);
  json base = complex_to_json(X0);
  base["meta"] = make_meta(command, json{{"stage", 0}, {"seed", params.seed}});
  result.base_path = stage_path(out_dir, 0, "complex");
  result.base_hash = write_hashed(result.base_path, base);

  result.report.vertex_counts.push_back(X0.vertex_count());
  const int k = X0.dimension();
  RegularityProfile p0 = X0.regularity_profile();
  result.report.top_degrees.push_back(p0.regular ? p0.degrees[k - 1] : -1);

  std::mt19937_64 seed_stream(params.seed);
  SimplicialComplex current = X0;
  std::string prev_hash = result.base_hash;

  for (int j = 1; j <= stages; ++j) {
    const std::uint64_t stage_seed = seed_stream();
    StageRecord rec;
    rec.stage = j;

    FaceSigning f;
    std::optional<json> stats_json;
    std::optional<ResolvedLLLConfig> audit_cfg;
    if (mode == LiftMode::random) {
      f = random_signing(static_cast<int>(current.faces(k).size()), stage_seed);
    } else if (mode == LiftMode::mt) {
      LLLConfig cfg = params.lll;
      cfg.rng_seed = stage_seed;
      MTResult mt = moser_tardos_lift(current, cfg);
      f = std::move(mt.signing);
      stats_json = lift_stats_to_json(mt.stats);
      audit_cfg = mt.stats.config;
    } else {
      DerandResult dr = greedy_derand_lift(current, params.derand);
      f = std::move(dr.signing);
      stats_json = derand_result_to_json(dr);
    }

    json jf = signing_to_json(current, f);
    jf["meta"] = make_meta(command, json{{"stage", j}, {"seed", stage_seed}});
    jf["lineage"] = json{{"base", prev_hash}};
    rec.signing_path = stage_path(out_dir, j, "signing");
    rec.signing_hash = write_hashed(rec.signing_path, jf);

    SimplicialComplex next = local_lift(current, f);
    json jc = complex_to_json(next);
    jc["meta"] = make_meta(command, json{{"stage", j}, {"seed", stage_seed}});
    jc["lineage"] = json{{"base", prev_hash}, {"signing", rec.signing_hash}};
    rec.complex_path = stage_path(out_dir, j, "complex");
    rec.complex_hash = write_hashed(rec.complex_path, jc);

    LiftLawReport law_report = verify_lift_laws(current, f, next);
    json jr = lift_report_to_json(law_report);
    jr["lineage"] = json{{"base", prev_hash},
                         {"signing", rec.signing_hash},
                         {"lift", rec.complex_hash}};
    if (stats_json) jr["stats"] = *stats_json;
    rec.pass = law_report.pass;
    if (audit_cfg) {
      // independent confirmation of the resampling engine's output guarantee
      LiftLinkAudit audit = audit_lift_links(current, next, audit_cfg->lambda_prime_target,
                                             audit_cfg->beta, audit_cfg->sparsity_t);
      jr["audit"] = audit_to_json(audit);
      rec.pass = rec.pass && audit.pass;
    }
    rec.report_path = stage_path(out_dir, j, "report");
    write_hashed(rec.report_path, jr);

    result.report.stages.push_back(std::move(law_report));
    result.report.vertex_counts.push_back(next.vertex_count());
    RegularityProfile p = next.regularity_profile();
    result.report.top_degrees.push_back(p.regular ? p.degrees[k - 1] : -1);
    result.stages.push_back(rec);

    if (!rec.pass) {
      result.aborted = true;
      break;
    }
    prev_hash = rec.complex_hash;
    current = std::move(next);
  }

  result.report.top_degree_invariant = std::all_of(
      result.report.top_degrees.begin(), result.report.top_degrees.end(),
      [&](std::int64_t d) { return d == result.report.top_degrees.front() && d >= 0; });
  result.report.pass =
      !result.aborted && result.report.top_degree_invariant &&
      std::all_of(result.report.stages.begin(), result.report.stages.end(),
                  [](const LiftLawReport& r) { return r.pass; });

  json family = family_report_to_json(result.report);
  family["lineage"] = json{{"base", result.base_hash}};
  json chain = json::array();
  for (const auto& rec : result.stages)
    chain.push_back(json{{"stage", rec.stage},
                         {"complex", rec.complex_hash},
                         {"signing", rec.signing_hash}});
  family["lineage"]["stages"] = std::move(chain);
  write_hashed(out_dir + "/family.report.json", family);
  return result;
}

bool verify_family_lineage(const std::string& out_dir, int stages, std::string* detail) {
  auto fail = [&](const std::string& msg) {
    if (detail) *detail = msg;
    return false;
  };
  std::string prev_hash = content_hash(read_text_file(stage_path(out_dir, 0, "complex")));
  for (int j = 1; j <= stages; ++j) {
    const std::string signing_file = stage_path(out_dir, j, "signing");
    const std::string complex_file = stage_path(out_dir, j, "complex");
    json jf = read_json_file(signing_file);
    if (jf.at("lineage").at("base").get<std::string>() != prev_hash)
      return fail("stage " + std::to_string(j) + " signing lineage mismatch");
    const std::string signing_hash = content_hash(read_text_file(signing_file));
    json jc = read_json_file(complex_file);
    if (jc.at("lineage").at("base").get<std::string>() != prev_hash)
      return fail("stage " + std::to_string(j) + " complex base lineage mismatch");
    if (jc.at("lineage").at("signing").get<std::string>() != signing_hash)
      return fail("stage " + std::to_string(j) + " complex signing lineage mismatch");
    prev_hash = content_hash(read_text_file(complex_file));
  }
  return true;
}

}  // namespace hdx
