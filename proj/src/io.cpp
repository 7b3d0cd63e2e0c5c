#include "imcf/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <vector>

#include "imcf/errors.hpp"
#include "imcf/format.hpp"

namespace imcf {

const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    }
    return "?";
}

std::string trace_csv(const FlowTrace& trace) {
    std::string out = "t,dt,vol,area,int_r2H,int_invH,Q,roundness,minH,maxH,support_min\n";
    for (const TraceRow& r : trace.rows) {
        out += format_full(r.t);
        for (double x : {r.dt, r.vol, r.area, r.int_r2H, r.int_invH, r.Q, r.roundness, r.minH,
                         r.maxH, r.support_min}) {
            out += ',';
            out += format_full(x);
        }
        out += '\n';
    }
    return out;
}

std::string report_text(const CheckReport& report) {
    std::string out;
    for (const CheckEntry& e : report.entries) {
        out += e.name;
        out += "  ";
        out += to_string(e.status);
        out += "  ";
        out += format_shortest(e.residual);
        out += "  ";
        out += format_shortest(e.tolerance);
        out += "  ";
        out += e.location;
        out += '\n';
    }
    out += report.all_passed() ? "OVERALL  PASS\n" : "OVERALL  FAIL\n";
    return out;
}

namespace {

std::string fixed2(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

struct Series {
    const char* name;
    const char* color;
    std::vector<double> values;
};

void append_panel(std::string& svg, const FlowTrace& trace, double y_top,
                  const std::vector<Series>& series) {
    const double x0 = 60.0, width = 800.0, height = 120.0;
    double lo = series[0].values[0], hi = lo;
    for (const Series& s : series)
        for (double v : s.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (hi - lo < 1e-300) {
        hi += 1.0;
        lo -= 1.0;
    }
    const double t0 = trace.rows.front().t, t1 = trace.rows.back().t;

    svg += "<rect x=\"" + fixed2(x0) + "\" y=\"" + fixed2(y_top) + "\" width=\"" + fixed2(width) +
           "\" height=\"" + fixed2(height) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (const Series& s : series) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += s.color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < trace.rows.size(); ++i) {
            const double x = x0 + (trace.rows[i].t - t0) / (t1 - t0) * width;
            const double y = y_top + height - (s.values[i] - lo) / (hi - lo) * height;
            svg += fixed2(x) + "," + fixed2(y) + " ";
        }
        svg += "\"/>\n";
    }
    std::string label;
    for (const Series& s : series) {
        if (!label.empty()) label += ", ";
        label += s.name;
    }
    svg += "<text x=\"" + fixed2(x0 + 5) + "\" y=\"" + fixed2(y_top + 14) +
           "\" font-size=\"12\" font-family=\"monospace\">" + label +
           "  [" + format_shortest(lo) + ", " + format_shortest(hi) + "]</text>\n";
}

} // namespace

std::string trace_svg(const FlowTrace& trace) {
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"920\" height=\"600\" "
        "viewBox=\"0 0 920 600\">\n<rect width=\"920\" height=\"600\" fill=\"white\"/>\n";
    if (trace.rows.size() < 2) {
        svg += "<text x=\"20\" y=\"40\" font-size=\"14\">not enough samples to plot</text>\n";
        svg += "</svg>\n";
        return svg;
    }
    auto column = [&](auto member) {
        std::vector<double> v;
        v.reserve(trace.rows.size());
        for (const TraceRow& r : trace.rows) v.push_back(r.*member);
        return v;
    };
    append_panel(svg, trace, 20.0, {{"Q", "#c0392b", column(&TraceRow::Q)}});
    append_panel(svg, trace, 160.0, {{"roundness", "#27ae60", column(&TraceRow::roundness)}});
    append_panel(svg, trace, 300.0, {{"area", "#2980b9", column(&TraceRow::area)},
                                     {"vol", "#8e44ad", column(&TraceRow::vol)}});
    append_panel(svg, trace, 440.0, {{"minH", "#d35400", column(&TraceRow::minH)},
                                     {"maxH", "#f39c12", column(&TraceRow::maxH)}});
    svg += "<text x=\"60\" y=\"585\" font-size=\"12\" font-family=\"monospace\">t in [" +
           format_shortest(trace.rows.front().t) + ", " + format_shortest(trace.rows.back().t) +
           "]</text>\n</svg>\n";
    return svg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

} // namespace imcf
