#include "wolf/csv_io.hpp"
#include "wolf/errors.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace wolf {

namespace {

const char* const kIndicatorNames[3] = {"J_wolf", "J_sustain", "J_fidelity"};

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_cell(const std::string& field, const std::string& path) {
    if (field.empty()) return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0') {
        throw IoError(path + ": cannot parse number '" + field + "'");
    }
    return v;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void put_row(std::ostream& os, const char* tag,
             std::span<const double> values) {
    os << tag;
    for (double v : values) os << ',' << format_double(v);
    os << '\n';
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_heatmap_csv(const HeatMap& hm, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");

    out << "x_label," << hm.x_label << '\n';
    out << "y_label," << hm.y_label << '\n';
    put_row(out, "xs", hm.xs);
    put_row(out, "ys", hm.ys);

    const std::vector<double>* blocks[3] = {&hm.wolf, &hm.sustain, &hm.fidelity};
    for (int b = 0; b < 3; ++b) {
        out << "indicator," << kIndicatorNames[b] << '\n';
        for (int iy = 0; iy < hm.ny(); ++iy) {
            for (int ix = 0; ix < hm.nx(); ++ix) {
                if (ix > 0) out << ',';
                const std::size_t c = hm.cell(ix, iy);
                const double v = (*blocks[b])[c];
                if (!hm.failed[c] && std::isfinite(v)) out << format_double(v);
            }
            out << '\n';
        }
    }
    if (!out) throw IoError("short write to " + path);
}

HeatMap read_heatmap_csv(const std::string& path) {
    const auto lines = read_lines(path);
    std::size_t at = 0;
    const auto next = [&]() -> std::vector<std::string> {
        if (at >= lines.size()) throw IoError(path + ": truncated heat map");
        return split_fields(lines[at++]);
    };
    const auto expect_tag = [&](const std::vector<std::string>& f,
                                const char* tag) {
        if (f.empty() || f[0] != tag) {
            throw IoError(path + ": expected '" + tag + "' row");
        }
    };

    HeatMap hm;
    auto f = next();
    expect_tag(f, "x_label");
    hm.x_label = f.size() > 1 ? f[1] : "";
    f = next();
    expect_tag(f, "y_label");
    hm.y_label = f.size() > 1 ? f[1] : "";

    f = next();
    expect_tag(f, "xs");
    for (std::size_t i = 1; i < f.size(); ++i)
        hm.xs.push_back(parse_cell(f[i], path));
    f = next();
    expect_tag(f, "ys");
    for (std::size_t i = 1; i < f.size(); ++i)
        hm.ys.push_back(parse_cell(f[i], path));
    if (hm.xs.empty() || hm.ys.empty()) {
        throw IoError(path + ": empty axes");
    }

    const std::size_t cells = hm.xs.size() * hm.ys.size();
    hm.wolf.assign(cells, 0.0);
    hm.sustain.assign(cells, 0.0);
    hm.fidelity.assign(cells, 0.0);
    hm.failed.assign(cells, 0);

    std::vector<double>* blocks[3] = {&hm.wolf, &hm.sustain, &hm.fidelity};
    for (int b = 0; b < 3; ++b) {
        f = next();
        expect_tag(f, "indicator");
        if (f.size() < 2 || f[1] != kIndicatorNames[b]) {
            throw IoError(path + ": expected indicator block " +
                          kIndicatorNames[b]);
        }
        for (int iy = 0; iy < hm.ny(); ++iy) {
            f = next();
            if (f.size() != hm.xs.size()) {
                throw IoError(path + ": bad row width in " + kIndicatorNames[b]);
            }
            for (int ix = 0; ix < hm.nx(); ++ix) {
                const std::size_t c = hm.cell(ix, iy);
                const double v = parse_cell(f[ix], path);
                (*blocks[b])[c] = v;
                if (std::isnan(v)) hm.failed[c] = 1;
            }
        }
    }
    return hm;
}

void write_curve_csv(std::span<const std::pair<double, double>> points,
                     const std::string& x_name, const std::string& y_name,
                     const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << x_name << ',' << y_name << '\n';
    for (const auto& [x, y] : points) {
        out << format_double(x) << ',';
        if (std::isfinite(y)) out << format_double(y);
        out << '\n';
    }
    if (!out) throw IoError("short write to " + path);
}

} // namespace wolf
