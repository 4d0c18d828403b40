#include "projcong/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace projcong {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string report_to_json_string(const DecompositionReport& report) {
    ordered_json j;
    j["schema_version"] = 1;
    j["verdict"] = to_string(report.verdict);
    j["coverage_gol"] = report.coverage_gol;
    j["coverage_mod_gol"] = report.coverage_mod_gol;
    if (report.common_width) {
        j["common_width"] = *report.common_width;
    } else {
        j["common_width"] = nullptr;
    }
    ordered_json dirs = ordered_json::array();
    for (const auto& rec : report.directions) {
        ordered_json d;
        d["pole_x"] = rec.pole.x();
        d["pole_y"] = rec.pole.y();
        d["pole_z"] = rec.pole.z();
        d["tag"] = to_string(rec.cls.tag);
        d["best_angle"] = rec.cls.best_angle;
        d["best_residual"] = rec.cls.best_residual;
        d["width_spread"] = rec.width_spread;
        d["tau_spread"] = rec.tau_spread;
        d["in_sigma"] = rec.in_sigma;
        d["in_lambda"] = rec.in_lambda;
        dirs.push_back(std::move(d));
    }
    j["directions"] = std::move(dirs);
    return j.dump(2) + "\n";
}

std::string report_to_csv_string(const DecompositionReport& report) {
    std::string out =
        "pole_x,pole_y,pole_z,tag,best_angle,best_residual,width_spread,tau_spread,"
        "in_sigma,in_lambda\n";
    for (const auto& rec : report.directions) {
        out += fmt(rec.pole.x()) + "," + fmt(rec.pole.y()) + "," + fmt(rec.pole.z()) + ",";
        out += to_string(rec.cls.tag);
        out += "," + fmt(rec.cls.best_angle) + "," + fmt(rec.cls.best_residual);
        out += "," + fmt(rec.width_spread) + "," + fmt(rec.tau_spread);
        out += rec.in_sigma ? ",1" : ",0";
        out += rec.in_lambda ? ",1\n" : ",0\n";
    }
    return out;
}

std::string radon_to_csv_string(const RadonResult& result) {
    std::string out = "pole_x,pole_y,pole_z,value\n";
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
        const auto& p = result.grid.directions[i];
        out += fmt(p.x()) + "," + fmt(p.y()) + "," + fmt(p.z()) + "," + fmt(result.values[i]) + "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
    out << content;
    if (!out) throw std::runtime_error("write_text_file: write failed for " + path);
}

}  // namespace projcong
