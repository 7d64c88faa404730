#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "hdx/complex.hpp"
#include "hdx/derand.hpp"
#include "hdx/lifting.hpp"
#include "hdx/lll.hpp"
#include "hdx/verifier.hpp"

namespace hdx {

using json = nlohmann::json;  // keys serialize sorted: canonical by default

// Complex files: {"k": int, "vertices": int, "top_faces": [[int,...],...],
// "labels": optional}. Arbitrary (non-dense) ids are re-mapped to 0..n-1 and
// the original ids kept as labels.
json complex_to_json(const SimplicialComplex& X);
SimplicialComplex complex_from_json(const json& j);

// Signing files: {"faces": {"0-1-2": 1, ...}}; missing keys are unassigned.
json signing_to_json(const SimplicialComplex& X, const FaceSigning& f);
FaceSigning signing_from_json(const SimplicialComplex& X, const json& j);

json spectrum_to_json(const SpectrumReport& r);
json witness_to_json(const SparsenessWitness& w);
json niceness_to_json(const NicenessReport& r);
json certificate_to_json(const HdxCertificate& c);
json lift_report_to_json(const LiftLawReport& r);
json family_report_to_json(const FamilyReport& r);
json lift_stats_to_json(const LiftStats& s);
json derand_result_to_json(const DerandResult& r);
json diameter_stats_to_json(const DiameterStats& s);
json audit_to_json(const LiftLinkAudit& a);

/// 64-bit FNV-1a over raw bytes, rendered as "fnv1a64:<16 hex digits>".
std::string content_hash(std::string_view bytes);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Canonical serialization used for every artifact: dump(2) plus newline.
std::string canonical_dump(const json& j);
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace hdx
