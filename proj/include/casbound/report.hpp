#pragma once

#include <string>

#include "casbound/stability.hpp"

namespace casbound {

inline constexpr int report_schema_version = 1;

// Serializable analysis artifact: space metadata, Einstein data and the full
// stability report.  All rationals are serialized as "p/q" strings; the JSON
// form round-trips losslessly (timing metadata excepted from determinism).
struct ReportDocument {
    int schema_version = report_schema_version;
    std::string space;
    std::string family;
    std::vector<int> parameters;
    std::string g;        // ambient type, e.g. "B3"
    std::string h_label;  // isotropy description
    bool sphere = false;
    bool reconstructed = false;
    EinsteinData einstein;
    StabilityReport result;
    double seconds = 0;  // wall-clock, not part of the deterministic payload
};

ReportDocument make_report(const SpaceSpec& space, const EinsteinData& ein,
                           StabilityReport result, double seconds);

std::string report_json(const ReportDocument& doc);
ReportDocument report_parse(const std::string& json_text);

// One-row markdown table in the hand-tabulated style: space, E, potential
// instabilities (semistable modes marked °), note SC/SF/SF₀.
std::string report_markdown(const ReportDocument& doc);

// "0", "ω2", "2ω1+ω3", ... from fundamental-weight coefficients.
std::string mode_label(const Weight& gamma);

}  // namespace casbound
