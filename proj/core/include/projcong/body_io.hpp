#pragma once

#include <iosfwd>
#include <string>

#include "projcong/body.hpp"

namespace projcong {

/// Body file format (JSON, UTF-8):
///   {"type":"polytope","vertices":[[x,y,z],...]}
///   {"type":"support_series","lmax":L,"coeffs":[...]}
///   {"type":"reflected","of":<body>}
///   {"type":"rotated","of":<body>,"axis":[x,y,z],"fraction":r}
/// support_series coefficients are real orthonormal spherical-harmonic
/// coefficients in degree-major, order-minor sequence.
BodyPtr parse_body(const std::string& json_text);
BodyPtr load_body(const std::string& path);

std::string body_to_json_string(const ConvexBody& body);
void save_body(const ConvexBody& body, const std::string& path);

}  // namespace projcong
