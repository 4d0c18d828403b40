#pragma once

#include <string>

#include "projcong/radon.hpp"
#include "projcong/sphere_analysis.hpp"

namespace projcong {

/// JSON report, schema_version 1:
/// {"schema_version":1,"verdict":...,"coverage_gol":...,"coverage_mod_gol":...,
///  "common_width":number|null,"directions":[...]} where each direction record
/// carries the same fields as the CSV columns. Deterministic serialization.
std::string report_to_json_string(const DecompositionReport& report);

/// CSV with header
/// pole_x,pole_y,pole_z,tag,best_angle,best_residual,width_spread,tau_spread,in_sigma,in_lambda
std::string report_to_csv_string(const DecompositionReport& report);

/// CSV dump of (pole, value) pairs: pole_x,pole_y,pole_z,value.
std::string radon_to_csv_string(const RadonResult& result);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace projcong
