#pragma once

// JSON forms shared by the universe dump and run reports.
//   representation: {"dims": {vertex: n}, "mats": {arrow: [[row], ...]}}
//   morphism:       {vertex: matrix}
//   certificate:    {"object": id, "length": l, "steps": [{"factor": id, "inflation": morphism}, ...]}

#include <memory>

#include "json.hpp"
#include "semibrick/bricks.hpp"
#include "semibrick/filt.hpp"
#include "semibrick/universe.hpp"
#include "semibrick/verify.hpp"
#include "semibrick/wide.hpp"

namespace semibrick {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "semibrick-lab/report/v1";
inline constexpr const char* kToolVersion = "0.1.0";

Json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const Json& j, Prime p, std::size_t rows, std::size_t cols);

Json quiver_to_json(const Quiver& q);
Json rep_to_json(const Rep& x);
/// Throws InvalidArgument on unknown vertices/arrows or malformed matrices.
Rep rep_from_json(const Json& j, std::shared_ptr<const Quiver> q, Prime p);
Json mor_to_json(const Mor& f);
Json class_set_to_json(const ClassSet& s);
ClassSet class_set_from_json(const Json& j);

Json universe_to_json(const Universe& u);
Json certificate_to_json(const FiltrationCertificate& cert);
Json truncation_to_json(const std::vector<TruncationEvent>& events);
Json conflation_to_json(const Universe& u, const Conflation& c);

Json wide_report_to_json(const Universe& u, const WideReport& r);
Json bijection_report_to_json(const BijectionReport& r);
Json corollary_report_to_json(const Universe& u, const CorollaryReport& r);
Json example_report_to_json(const ExampleReport& r);
Json frombrick_report_to_json(const PropertyReport& r);

}  // namespace semibrick
