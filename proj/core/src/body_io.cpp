#include "projcong/body_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace projcong {

namespace {

using nlohmann::ordered_json;

Vec3 parse_vec3(const ordered_json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument(std::string(what) + ": expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

BodyPtr parse_node(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("body: expected a JSON object");
    const std::string type = j.at("type").get<std::string>();

    if (type == "polytope") {
        std::vector<Vec3> verts;
        for (const auto& v : j.at("vertices")) verts.push_back(parse_vec3(v, "polytope vertex"));
        return std::make_shared<PolytopeBody>(std::move(verts));
    }
    if (type == "support_series") {
        const int lmax = j.at("lmax").get<int>();
        std::vector<double> coeffs = j.at("coeffs").get<std::vector<double>>();
        return std::make_shared<SupportSeriesBody>(lmax, std::move(coeffs));
    }
    if (type == "reflected") {
        return std::make_shared<ReflectedBody>(parse_node(j.at("of")));
    }
    if (type == "rotated") {
        const Vec3 axis = parse_vec3(j.at("axis"), "rotation axis");
        const double fraction = j.at("fraction").get<double>();
        return std::make_shared<RotatedBody>(parse_node(j.at("of")),
                                             AxisRotation(UnitVector3::of(axis), fraction));
    }
    throw std::invalid_argument("body: unknown type \"" + type + "\"");
}

ordered_json body_node(const ConvexBody& body) {
    if (const auto* p = dynamic_cast<const PolytopeBody*>(&body)) {
        ordered_json verts = ordered_json::array();
        for (const auto& v : p->vertices()) verts.push_back({v.x, v.y, v.z});
        return {{"type", "polytope"}, {"vertices", std::move(verts)}};
    }
    if (const auto* s = dynamic_cast<const SupportSeriesBody*>(&body)) {
        return {{"type", "support_series"}, {"lmax", s->lmax()}, {"coeffs", s->coeffs()}};
    }
    if (const auto* r = dynamic_cast<const ReflectedBody*>(&body)) {
        return {{"type", "reflected"}, {"of", body_node(*r->inner())}};
    }
    if (const auto* r = dynamic_cast<const RotatedBody*>(&body)) {
        const Vec3& a = r->rotation().axis.vec();
        return {{"type", "rotated"},
                {"of", body_node(*r->inner())},
                {"axis", {a.x, a.y, a.z}},
                {"fraction", r->rotation().fraction}};
    }
    throw std::invalid_argument("body: unserializable body kind");
}

}  // namespace

BodyPtr parse_body(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("body: malformed JSON: ") + e.what());
    }
    try {
        return parse_node(j);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("body: invalid body document: ") + e.what());
    }
}

BodyPtr load_body(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_body: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_body(buf.str());
}

std::string body_to_json_string(const ConvexBody& body) {
    return body_node(body).dump(2) + "\n";
}

void save_body(const ConvexBody& body, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_body: cannot open " + path);
    out << body_to_json_string(body);
    if (!out) throw std::runtime_error("save_body: write failed for " + path);
}

}  // namespace projcong
