#include "edgeflow/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgeflow/errors.hpp"

namespace edgeflow::svg {

namespace {

double hash_unit(std::uint64_t v) {
    v += 0x9e3779b97f4a7c15ULL;
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::array<double, 2>> spring_layout(const Graph& g, int iterations) {
    const int n = g.num_nodes();
    std::vector<std::array<double, 2>> p(static_cast<std::size_t>(n));
    if (n == 0) return p;

    // Fixed pseudo-random start; layout depends only on the graph.
    for (int i = 0; i < n; ++i) {
        p[static_cast<std::size_t>(i)] = {hash_unit(2 * static_cast<std::uint64_t>(i)),
                                          hash_unit(2 * static_cast<std::uint64_t>(i) + 1)};
    }
    if (n == 1) return p;

    const double k = std::sqrt(1.0 / static_cast<double>(n));
    std::vector<std::array<double, 2>> disp(static_cast<std::size_t>(n));
    for (int it = 0; it < iterations; ++it) {
        for (auto& d : disp) d = {0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double dx = p[i][0] - p[j][0];
                double dy = p[i][1] - p[j][1];
                double dist = std::sqrt(dx * dx + dy * dy);
                if (dist < 1e-9) {
                    // nudge coincident nodes apart deterministically
                    dx = 1e-6 * (1.0 + i);
                    dy = 1e-6 * (1.0 + j);
                    dist = std::sqrt(dx * dx + dy * dy);
                }
                const double force = k * k / dist;
                disp[i][0] += dx / dist * force;
                disp[i][1] += dy / dist * force;
                disp[j][0] -= dx / dist * force;
                disp[j][1] -= dy / dist * force;
            }
        }
        for (const Edge& e : g.edges()) {
            double dx = p[e.tail][0] - p[e.head][0];
            double dy = p[e.tail][1] - p[e.head][1];
            double dist = std::sqrt(dx * dx + dy * dy);
            if (dist < 1e-9) continue;
            const double force = dist * dist / k;
            disp[e.tail][0] -= dx / dist * force;
            disp[e.tail][1] -= dy / dist * force;
            disp[e.head][0] += dx / dist * force;
            disp[e.head][1] += dy / dist * force;
        }
        const double temp =
            0.1 * (1.0 - static_cast<double>(it) / static_cast<double>(iterations));
        for (int i = 0; i < n; ++i) {
            const double len = std::sqrt(disp[i][0] * disp[i][0] + disp[i][1] * disp[i][1]);
            if (len < 1e-12) continue;
            const double step = std::min(len, temp);
            p[i][0] += disp[i][0] / len * step;
            p[i][1] += disp[i][1] / len * step;
        }
    }
    return p;
}

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

struct Frame {
    double scale = 1.0, ox = 0.0, oy = 0.0, height = 0.0;

    std::array<double, 2> map(const std::array<double, 2>& c) const {
        // flip y so larger coordinates draw upward
        return {ox + scale * c[0], height - (oy + scale * c[1])};
    }
};

Frame fit_frame(const std::vector<std::array<double, 2>>& coords,
                const FlowMapOptions& o) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!coords.empty()) {
        xmin = xmax = coords[0][0];
        ymin = ymax = coords[0][1];
        for (const auto& c : coords) {
            xmin = std::min(xmin, c[0]);
            xmax = std::max(xmax, c[0]);
            ymin = std::min(ymin, c[1]);
            ymax = std::max(ymax, c[1]);
        }
    }
    const double dx = std::max(xmax - xmin, 1e-9);
    const double dy = std::max(ymax - ymin, 1e-9);
    Frame f;
    f.height = o.height;
    f.scale = std::min((o.width - 2 * o.margin) / dx, (o.height - 2 * o.margin) / dy);
    f.ox = o.margin + 0.5 * ((o.width - 2 * o.margin) - f.scale * dx) - f.scale * xmin;
    f.oy = o.margin + 0.5 * ((o.height - 2 * o.margin) - f.scale * dy) - f.scale * ymin;
    return f;
}

void draw_arrowhead(std::ostringstream& out, double x, double y, double ux, double uy,
                    double size, const char* color) {
    // triangle centered on (x, y) pointing along (ux, uy)
    const double px = -uy, py = ux;
    const double tipx = x + ux * size, tipy = y + uy * size;
    const double b1x = x - ux * size * 0.6 + px * size * 0.7;
    const double b1y = y - uy * size * 0.6 + py * size * 0.7;
    const double b2x = x - ux * size * 0.6 - px * size * 0.7;
    const double b2y = y - uy * size * 0.6 - py * size * 0.7;
    out << "  <polygon points=\"" << fmt(tipx) << "," << fmt(tipy) << " " << fmt(b1x)
        << "," << fmt(b1y) << " " << fmt(b2x) << "," << fmt(b2y) << "\" fill=\"" << color
        << "\"/>\n";
}

std::string render(const Graph& g, const std::vector<std::array<double, 2>>& coords,
                   const EdgeSignal* f, const FlowMapOptions& o) {
    if (coords.size() != static_cast<std::size_t>(g.num_nodes()))
        throw DimensionError("svg: coordinate count does not match node count");
    if (f && f->size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("svg: flow length does not match edge count");

    double ref = o.reference_magnitude;
    if (f && ref <= 0.0)
        for (double v : f->values) ref = std::max(ref, std::abs(v));
    if (ref <= 0.0) ref = 1.0;

    const Frame frame = fit_frame(coords, o);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(o.width)
        << "\" height=\"" << fmt(o.height) << "\" viewBox=\"0 0 " << fmt(o.width) << " "
        << fmt(o.height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        const auto a = frame.map(coords[static_cast<std::size_t>(ed.tail)]);
        const auto b = frame.map(coords[static_cast<std::size_t>(ed.head)]);
        const double v = f ? (*f)[static_cast<std::size_t>(e)] : 0.0;
        const double mag = std::abs(v);

        if (!f || mag <= 1e-12 * ref) {
            out << "  <line x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(a[1]) << "\" x2=\""
                << fmt(b[0]) << "\" y2=\"" << fmt(b[1])
                << "\" stroke=\"#b0b0b0\" stroke-width=\"" << fmt(o.min_edge_width)
                << "\"/>\n";
            continue;
        }

        const double w =
            o.min_edge_width + (o.max_edge_width - o.min_edge_width) * std::min(1.0, mag / ref);
        const char* color = v > 0.0 ? "#2166ac" : "#b2182b";
        out << "  <line x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(a[1]) << "\" x2=\""
            << fmt(b[0]) << "\" y2=\"" << fmt(b[1]) << "\" stroke=\"" << color
            << "\" stroke-width=\"" << fmt(w) << "\" stroke-linecap=\"round\"/>\n";

        // arrow along the actual flow direction: tail->head for positive,
        // reversed for negative
        double ux = b[0] - a[0], uy = b[1] - a[1];
        const double len = std::sqrt(ux * ux + uy * uy);
        if (len < 1e-9) continue;
        ux /= len;
        uy /= len;
        if (v < 0.0) {
            ux = -ux;
            uy = -uy;
        }
        const double mx = 0.5 * (a[0] + b[0]), my = 0.5 * (a[1] + b[1]);
        draw_arrowhead(out, mx, my, ux, uy, 3.0 + 1.2 * w, color);
    }

    for (const auto& c : coords) {
        const auto q = frame.map(c);
        out << "  <circle cx=\"" << fmt(q[0]) << "\" cy=\"" << fmt(q[1])
            << "\" r=\"3.2\" fill=\"#222222\"/>\n";
    }

    if (!o.title.empty())
        out << "  <text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"13\">"
            << escape_text(o.title) << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_flow_map(const Graph& g,
                            const std::vector<std::array<double, 2>>& coords,
                            const EdgeSignal& f, const FlowMapOptions& opts) {
    return render(g, coords, &f, opts);
}

std::string render_graph(const Graph& g,
                         const std::vector<std::array<double, 2>>& coords,
                         const FlowMapOptions& opts) {
    return render(g, coords, nullptr, opts);
}

void write_svg_file(const std::string& path, const std::string& svg) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << svg;
    f.flush();
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace edgeflow::svg
