#include "fluxlat/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "fluxlat/errors.hpp"
#include "fluxlat/leakage.hpp"

namespace fluxlat {
namespace {

constexpr double kw = 760, kh = 460;
constexpr double kml = 80, kmr = 180, kmt = 36, kmb = 58;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

// bucket shades, quiet to loud, plus grey for failed points
const char* const kBucketFill[] = {"#dbe9f6", "#ffd98c", "#f49b6b", "#d64545"};
const char* const kBucketText[] = {"< 1e-5", "1e-5 .. 1e-4", "1e-4 .. 1e-3",
                                   ">= 1e-3"};

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&')
            out += "&amp;";
        else if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else
            out += c;
    }
    return out;
}

std::string num_label(double v) {
    char buf[48];
    snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Svg {
    std::ostringstream body;

    void line(double x1, double y1, double x2, double y2, const char* stroke,
              double width = 1.0) {
        body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
             << "\" y2=\"" << y2 << "\" stroke=\"" << stroke << "\" stroke-width=\""
             << width << "\"/>\n";
    }
    void text(double x, double y, const std::string& s, const char* anchor = "start",
              int size = 12, const char* fill = "#333") {
        body << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\""
             << " font-size=\"" << size << "\" text-anchor=\"" << anchor
             << "\" fill=\"" << fill << "\">" << esc(s) << "</text>\n";
    }
    void rect(double x, double y, double w, double h, const std::string& fill,
              const char* stroke = "none") {
        body << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
             << "\" height=\"" << h << "\" fill=\"" << fill << "\" stroke=\""
             << stroke << "\"/>\n";
    }
    void circle(double x, double y, double r, const char* fill) {
        body << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
             << "\" fill=\"" << fill << "\"/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const char* stroke) {
        if (pts.size() < 2) return;
        body << "<polyline fill=\"none\" stroke=\"" << stroke
             << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& [x, y] : pts) body << x << "," << y << " ";
        body << "\"/>\n";
    }

    void save(const std::string& path) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write plot file " + path);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kw
            << "\" height=\"" << kh << "\" viewBox=\"0 0 " << kw << " " << kh
            << "\">\n"
            << "<rect width=\"" << kw << "\" height=\"" << kh
            << "\" fill=\"#ffffff\"/>\n"
            << body.str() << "</svg>\n";
    }
};

double nice_step(double range) {
    if (!(range > 0)) return 1.0;
    double mag = std::pow(10.0, std::floor(std::log10(range / 5.0)));
    double norm = range / 5.0 / mag;
    double mult = norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0;
    return mult * mag;
}

struct Scale {
    double lo = 0, hi = 1;
    bool log = false;
    double p0 = 0, p1 = 1;  // pixel range

    double at(double v) const {
        double t = log ? (std::log10(v) - std::log10(lo)) /
                             (std::log10(hi) - std::log10(lo))
                       : (v - lo) / (hi - lo);
        return p0 + t * (p1 - p0);
    }
};

void draw_x_ticks(Svg& svg, const Scale& sx, double y_axis) {
    double step = nice_step(sx.hi - sx.lo);
    for (double v = std::ceil(sx.lo / step) * step; v <= sx.hi + 1e-9 * step;
         v += step) {
        double x = sx.at(v);
        svg.line(x, y_axis, x, y_axis + 5, "#333");
        svg.text(x, y_axis + 20, num_label(std::abs(v) < 1e-12 * step ? 0.0 : v),
                 "middle", 11);
    }
}

void draw_y_ticks(Svg& svg, const Scale& sy, double x_axis, double x_grid_end) {
    if (sy.log) {
        int d0 = static_cast<int>(std::ceil(std::log10(sy.lo) - 1e-9));
        int d1 = static_cast<int>(std::floor(std::log10(sy.hi) + 1e-9));
        int stride = std::max(1, (d1 - d0) / 8 + ((d1 - d0) % 8 ? 1 : 0));
        for (int d = d0; d <= d1; d += stride) {
            double y = sy.at(std::pow(10.0, d));
            svg.line(x_axis, y, x_grid_end, y, "#e5e5e5");
            svg.line(x_axis - 5, y, x_axis, y, "#333");
            svg.text(x_axis - 9, y + 4, "1e" + std::to_string(d), "end", 11);
        }
    } else {
        double step = nice_step(sy.hi - sy.lo);
        for (double v = std::ceil(sy.lo / step) * step; v <= sy.hi + 1e-9 * step;
             v += step) {
            double y = sy.at(v);
            svg.line(x_axis, y, x_grid_end, y, "#e5e5e5");
            svg.line(x_axis - 5, y, x_axis, y, "#333");
            svg.text(x_axis - 9, y + 4, num_label(std::abs(v) < 1e-12 * step ? 0.0 : v),
                     "end", 11);
        }
    }
}

bool log_hint(const std::string& name) {
    return name.rfind("d_", 0) == 0 || name.rfind("eps_", 0) == 0 ||
           name == "rate" || name == "error_estimate";
}

bool skip_column(const std::string& name) {
    for (const char* s : {"status", "converged", "evaluations", "degenerate",
                          "sign_match", "flagged", "bucket"})
        if (name == s) return true;
    return false;
}

std::string series_label(const SweepResult& r, size_t outer_axes, long series) {
    std::string label;
    long rem = series;
    std::vector<long> idx(outer_axes);
    for (size_t a = outer_axes; a-- > 0;) {
        idx[a] = rem % r.axes[a].size();
        rem /= r.axes[a].size();
    }
    for (size_t a = 0; a < outer_axes; ++a) {
        if (!label.empty()) label += ", ";
        const SweepAxis& ax = r.axes[a];
        label += ax.labels.empty()
                     ? ax.name + " = " + num_label(ax.values[idx[a]])
                     : ax.name + " = " + ax.labels[idx[a]];
    }
    return label;
}

bool line_chart(const SweepResult& r, size_t col_index, const std::string& path) {
    const SweepAxis& x_axis = r.axes.back();
    if (!x_axis.labels.empty()) return false;  // categorical x: nothing to draw
    const std::vector<double>& col = r.values[col_index];
    const std::string& name = r.value_names[col_index];
    const long nx = x_axis.size();
    const long n_series = r.points() / nx;

    // choose the y scale: log only if the quantity suggests it and every
    // finite value is strictly positive
    bool want_log = log_hint(name);
    double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
    bool any = false;
    for (double v : col) {
        if (!std::isfinite(v)) continue;
        any = true;
        if (v <= 0) want_log = false;
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
    }
    if (!any) {
        std::cerr << "plot " << name << ": no finite data, skipped\n";
        return false;
    }
    if (want_log) {
        if (ymax / ymin < 1.001) {
            ymin /= 10;
            ymax *= 10;
        }
    } else if (ymax - ymin < 1e-300) {
        ymin -= 1;
        ymax += 1;
    } else {
        double pad = 0.05 * (ymax - ymin);
        ymin -= pad;
        ymax += pad;
    }

    double xmin = *std::min_element(x_axis.values.begin(), x_axis.values.end());
    double xmax = *std::max_element(x_axis.values.begin(), x_axis.values.end());
    if (xmax - xmin < 1e-300) {
        xmin -= 1;
        xmax += 1;
    }

    Scale sx{xmin, xmax, false, kml, kw - kmr};
    Scale sy{ymin, ymax, want_log, kh - kmb, kmt};

    Svg svg;
    svg.text(kml, kmt - 14, name + "  (" + r.scenario + ")", "start", 14);
    svg.text((kml + kw - kmr) / 2, kh - 16, x_axis.name, "middle", 12);
    svg.line(kml, kmt, kml, kh - kmb, "#333");
    svg.line(kml, kh - kmb, kw - kmr, kh - kmb, "#333");
    draw_y_ticks(svg, sy, kml, kw - kmr);
    draw_x_ticks(svg, sx, kh - kmb);

    const bool markers = nx <= 200;
    for (long s = 0; s < n_series; ++s) {
        const char* color = kPalette[s % kPaletteSize];
        std::vector<std::pair<double, double>> run;
        for (long i = 0; i < nx; ++i) {
            double v = col[s * nx + i];
            bool drawable = std::isfinite(v) && (!want_log || v > 0);
            if (!drawable) {
                svg.polyline(run, color);
                run.clear();
                continue;
            }
            double px = sx.at(x_axis.values[i]), py = sy.at(v);
            run.push_back({px, py});
            if (markers) svg.circle(px, py, 2.4, color);
        }
        svg.polyline(run, color);
    }

    if (n_series > 1) {
        double ly = kmt + 8;
        long shown = std::min<long>(n_series, 12);
        for (long s = 0; s < shown; ++s, ly += 18) {
            svg.line(kw - kmr + 12, ly, kw - kmr + 34, ly, kPalette[s % kPaletteSize],
                     2.0);
            svg.text(kw - kmr + 40, ly + 4,
                     series_label(r, r.axes.size() - 1, s), "start", 11);
        }
        if (shown < n_series)
            svg.text(kw - kmr + 40, ly + 4,
                     "(+" + std::to_string(n_series - shown) + " more)", "start", 11,
                     "#888");
    }

    svg.save(path);
    return true;
}

bool leakage_heatmap(const SweepResult& r, long i_source, size_t rate_index,
                     size_t status_index, const std::string& path) {
    const SweepAxis& k_axis = r.axes[1];
    const SweepAxis& d_axis = r.axes[2];
    const long nk = k_axis.size(), nd = d_axis.size();
    const long base = i_source * nk * nd;
    const std::vector<double>& rate = r.values[rate_index];
    const std::vector<double>& status = r.values[status_index];

    const double x0 = kml, x1 = kw - kmr, y0 = kmt + 10, y1 = kh - kmb;
    const double cw = (x1 - x0) / nd, chh = (y1 - y0) / nk;

    Svg svg;
    svg.text(kml, kmt - 10,
             "leakage rate, source " + r.axes[0].labels[i_source], "start", 14);
    for (long ik = 0; ik < nk; ++ik) {
        for (long id = 0; id < nd; ++id) {
            double v = rate[base + ik * nd + id];
            double st = status[base + ik * nd + id];
            // k grows upward, so row 0 sits at the bottom
            double cx = x0 + id * cw, cy = y1 - (ik + 1) * chh;
            const char* fill = "#cccccc";
            if (st == 0.0 && std::isfinite(v)) fill = kBucketFill[leakage_bucket(v)];
            svg.rect(cx, cy, cw + 0.5, chh + 0.5, fill);
        }
    }

    auto axis_marks = [](const std::vector<double>& vals) {
        std::vector<long> marks;
        if (vals.size() <= 8)
            for (size_t i = 0; i < vals.size(); ++i) marks.push_back(i);
        else
            for (long i = 0; i < 5; ++i)
                marks.push_back(i * (static_cast<long>(vals.size()) - 1) / 4);
        return marks;
    };
    for (long id : axis_marks(d_axis.values)) {
        double x = x0 + (id + 0.5) * cw;
        svg.line(x, y1, x, y1 + 5, "#333");
        svg.text(x, y1 + 20, num_label(d_axis.values[id]), "middle", 11);
    }
    for (long ik : axis_marks(k_axis.values)) {
        double y = y1 - (ik + 0.5) * chh;
        svg.line(x0 - 5, y, x0, y, "#333");
        svg.text(x0 - 9, y + 4, num_label(k_axis.values[ik]), "end", 11);
    }
    svg.text((x0 + x1) / 2, kh - 16, d_axis.name, "middle", 12);
    svg.text(18, (y0 + y1) / 2, k_axis.name, "middle", 12);

    double ly = y0;
    for (int b = 0; b < 4; ++b, ly += 22) {
        svg.rect(kw - kmr + 12, ly, 16, 16, kBucketFill[b], "#999");
        svg.text(kw - kmr + 36, ly + 12, kBucketText[b], "start", 11);
    }
    svg.rect(kw - kmr + 12, ly, 16, 16, "#cccccc", "#999");
    svg.text(kw - kmr + 36, ly + 12, "failed point", "start", 11);

    svg.save(path);
    return true;
}

}  // namespace

std::vector<std::string> emit_plots(const SweepResult& r, const std::string& dir,
                                    const std::string& prefix) {
    std::vector<std::string> written;
    if (r.axes.empty()) return written;  // single-row results have no axis to plot

    if (r.scenario == "leakage-map" && r.axes.size() == 3 &&
        !r.axes[0].labels.empty()) {
        size_t rate_index = r.value_names.size(), status_index = rate_index;
        for (size_t i = 0; i < r.value_names.size(); ++i) {
            if (r.value_names[i] == "rate") rate_index = i;
            if (r.value_names[i] == "status") status_index = i;
        }
        if (rate_index == r.value_names.size() ||
            status_index == r.value_names.size())
            return written;
        for (long s = 0; s < r.axes[0].size(); ++s) {
            std::string path =
                dir + "/" + prefix + "_rate_" + r.axes[0].labels[s] + ".svg";
            if (leakage_heatmap(r, s, rate_index, status_index, path))
                written.push_back(path);
        }
        return written;
    }

    for (size_t i = 0; i < r.value_names.size(); ++i) {
        if (skip_column(r.value_names[i])) continue;
        std::string path = dir + "/" + prefix + "_" + r.value_names[i] + ".svg";
        if (line_chart(r, i, path)) written.push_back(path);
    }
    return written;
}

}  // namespace fluxlat
