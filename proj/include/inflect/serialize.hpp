#pragma once

#include "inflect/base_data.hpp"
#include "inflect/closed_forms.hpp"
#include "inflect/graded.hpp"
#include "inflect/jet_probe.hpp"
#include "inflect/scroll_model.hpp"
#include "inflect/uninflected_search.hpp"

#include <json.hpp>

#include <string>

namespace inflect {

using Json = nlohmann::ordered_json;

// Structured forms. Every *_from_json inverts the matching to_json and throws
// InvalidInput on malformed input.

Json to_json(const Rational& q);  // "p/q" string
Rational rational_from_json(const Json& j);

Json to_json(const Ring& ring);
RingPtr ring_from_json(const Json& j);

/// {"ring": ..., "terms": [{"exponents": [...], "num": "...", "den": "..."}], "text": "..."}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const GradedClass& c);
GradedClass graded_class_from_json(const Json& j);

/// {"dimension": m, "parameters": [...], "values": {"c1^2": "9", ...}}
Json to_json(const NumericalBaseData& data);
NumericalBaseData base_data_from_json(const Json& j);

Json to_json(const ScrollSetup& s);
ScrollSetup setup_from_json(const Json& j);

Json to_json(const InflectionClass& c);
Json to_json(const DegreeResult& d);

Json to_json(const ScanReport& r);
ScanReport scan_report_from_json(const Json& j);

Json to_json(const JetProbeSpec& s);
JetProbeSpec jet_spec_from_json(const Json& j);

Json to_json(const JetRankReport& r);
JetRankReport jet_report_from_json(const Json& j);

Json to_json(const InflectionEquations& e);

/// Reads a JSON document from a file; throws InvalidInput when unreadable.
Json read_json_file(const std::string& path);

}  // namespace inflect
