#pragma once

// JSON serialization for the report types, plus the envelope every CLI
// command emits on stdout.

#include <string>

#include "json.hpp"
#include "partite/blowup.hpp"
#include "partite/detect.hpp"
#include "partite/partitioner.hpp"
#include "partite/thresholds.hpp"
#include "partite/verifier.hpp"

namespace partite {

inline constexpr const char* kToolkitVersion = "0.1.0";

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const DegreeProfile& p);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const HypothesisVerdict& v);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const PartitionOutcome& o);
nlohmann::json to_json(const BlowupSpec& s);
nlohmann::json to_json(const AuditReport& a);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const TightnessResult& t);
nlohmann::json to_json(const CorollaryReport& r);
nlohmann::json to_json(const Fact31Report& r);

nlohmann::json make_envelope(const std::string& command, nlohmann::json parameters, nlohmann::json results,
                             double timing_ms);

}  // namespace partite
