#pragma once

#include <string>

#include "hemifill/curve.hpp"
#include "hemifill/measure.hpp"
#include "hemifill/norms.hpp"

namespace hemifill {

// Whole-file text helpers; both throw InputError with the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Measure JSON:
//   {"grid_size": 8, "density": [...8 values...],
//    "atoms": [{"pos": 0.5, "mass": 0.25}, ...]}
// density defaults to all zero, atoms to none; total mass must be 1.
CircularMeasure parse_measure_json(const std::string& text);
std::string format_measure_json(const CircularMeasure& mu);

// Norm spec: the literals l1 | l2 | linf, an inline JSON object
//   {"ellipse": [a, b, angle]}  or  {"polygon": [[x, y], ...]},
// or @path to a file holding one of those.
PlanarNorm parse_norm_spec(const std::string& spec);
std::string format_norm_json(const PlanarNorm& norm);

// Curve JSON:
//   {"target": {"dim": 2, "norm": <norm spec value>},
//    "form": {"fourier": [[[a, b], ...]  per coordinate ]}}
// or with {"samples": [[x, y, ...], ...]} as the form. Targets of dimension
// other than 2 take the literal norms only.
LipschitzCurve parse_curve_json(const std::string& text);
std::string format_curve_json(const LipschitzCurve& curve);

}  // namespace hemifill
