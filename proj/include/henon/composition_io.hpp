#pragma once

#include <string>

#include <json.hpp>

#include "henon/raster.hpp"

namespace henon {

// Composition file format (JSON):
//   {"factors": [{"degree": 2,
//                 "coefficients": ["0", "-1/4"],     // c0..c_{d-1}, monic 1 implicit
//                 "delta": ["1/2", "0"]},            // [re, im]
//                ...]}
// Coefficient entries are rational strings ("num/den"), decimal strings, or
// [re, im] pairs for complex values. Decimals expand literally into exact
// rationals.
HenonComposition composition_from_json(const nlohmann::json& doc);

// Loads and validates a composition file; errors carry the path and, for
// malformed JSON, the line/column of the failure.
HenonComposition load_composition(const std::string& path);

GaussianRational coefficient_from_json(const nlohmann::json& value);

// Slice file format (JSON): all fields optional, defaults as in SliceSpec.
//   {"origin": [[re,im],[re,im]], "axis_u": ..., "axis_v": ...,
//    "extent": [u_min, u_max, v_min, v_max], "resolution": [width, height]}
SliceSpec slice_from_json(const nlohmann::json& doc);
SliceSpec load_slice(const std::string& path);

nlohmann::json composition_to_json(const HenonComposition& comp);

}  // namespace henon
