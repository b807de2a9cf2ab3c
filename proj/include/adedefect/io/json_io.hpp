#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "adedefect/defect/defect.hpp"
#include "adedefect/gallery/gallery.hpp"
#include "adedefect/hodge/hodge.hpp"
#include "adedefect/numbers/algebraic.hpp"
#include "adedefect/singular/classify.hpp"

namespace ade {

using Json = nlohmann::ordered_json;

/// Rationals are strings ("-1/3"). Roots are {"root_of": [coefficients],
/// "seed": [re, im], "radius": r}; expressions are {"op": "add"|"sub"|"mul"|"div",
/// "args": [a, b]} or {"op": "pow", "args": [a], "exponent": k}. Plain JSON
/// integers are accepted on input.
Json value_to_json(const AlgebraicValue& v);
AlgebraicValue value_from_json(const Json& j);

Json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const Json& j);

Json record_to_json(const SingularPointRecord& r);
/// A bare coordinate array gives a record with FrameKind::Unavailable and the
/// given default type.
SingularPointRecord record_from_json(const Json& j, const ADEType& default_type = ADEType::make(Family::A, 1));

/// Contents of a .pts file: an array of coordinate arrays or of records.
std::vector<SingularPointRecord> parse_points(const std::string& text,
                                              const ADEType& default_type = ADEType::make(Family::A, 1));

Json to_json(const RankResult& r);
RankResult rank_result_from_json(const Json& j);
Json to_json(const NamedRank& r);
NamedRank named_rank_from_json(const Json& j);
Json to_json(const DefectResult& d);
DefectResult defect_from_json(const Json& j);
Json to_json(const Check& c);
Json to_json(const HodgeReport& h);
HodgeReport hodge_report_from_json(const Json& j);
Json to_json(const Classification& c);

/// Omits the wall-clock time so that identical runs print identical bytes.
Json to_json(const ExampleReport& r);
Json bundle_manifest(const ExampleBundle& b);

}  // namespace ade
