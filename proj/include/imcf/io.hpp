#pragma once

#include <string>

#include "imcf/flow.hpp"
#include "imcf/format.hpp"
#include "imcf/report.hpp"

namespace imcf {

// CSV with header t,dt,vol,area,int_r2H,int_invH,Q,roundness,minH,maxH,support_min.
std::string trace_csv(const FlowTrace& trace);

// Plain text, one check per line: name, PASS/FAIL/SKIP, residual, tolerance,
// location; final OVERALL line.
std::string report_text(const CheckReport& report);

// Standalone SVG with polyline panels for Q, roundness, area, and the
// curvature band (minH..maxH) against time.
std::string trace_svg(const FlowTrace& trace);

void write_file(const std::string& path, const std::string& content);

} // namespace imcf
