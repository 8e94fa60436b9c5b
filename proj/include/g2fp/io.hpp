#pragma once

// JSON data files. Integers travel as decimal strings:
//
//   { "n": 2,
//     "points": [ { "phi": "-2", "weights": ["1", "3"] }, ... ] }
//
// A profile file is the same document without the "weights" arrays.

#include <string>

#include "json.hpp"

#include "g2fp/fpdata.hpp"
#include "g2fp/solver.hpp"

namespace g2fp {

using Json = nlohmann::ordered_json;

/// Throws MalformedData / MalformedScalar.
FixedPointData parse_data_file(const Json& doc);
/// Reads "n" and every "phi"; weights, if present, are ignored.
MomentProfile parse_profile(const Json& doc);

Json to_json(const FixedPointData& data);

/// Reads and parses a JSON document. Throws MalformedData.
Json read_json_file(const std::string& path);

}  // namespace g2fp
