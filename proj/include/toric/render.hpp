#pragma once

#include <cmath>
#include <cstdio>

#include "toric/polytope.hpp"

namespace toric {

namespace detail {

inline std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x + 0.0);  // normalize -0
    return buf;
}

inline const char* palette(int i) {
    static const char* colors[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f",
                                   "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
                                   "#e31a1c", "#ff7f00", "#6a3d9a", "#b15928"};
    return colors[i % 12];
}

}  // namespace detail

/// Deterministic SVG picture of a 2-dimensional fan: rays as arrows, cones
/// as shaded wedges, and, when a bundle is given, the polytope P_L with its
/// lattice points and the lattice length of every positive edge.
inline std::string render_svg(const Fan& fan, const LineBundle* bundle = nullptr) {
    if (fan.dim() != 2) throw DimensionError("rendering is implemented for surfaces only");
    using detail::fmt2;

    const double panel = 360.0;
    const double cx = panel / 2.0;
    const double cy = panel / 2.0;
    const double radius = 130.0;
    const bool with_polytope = bundle != nullptr;
    const double width = with_polytope ? 2 * panel + 20 : panel;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(width)
        << "\" height=\"" << fmt2(panel) << "\" viewBox=\"0 0 " << fmt2(width) << " "
        << fmt2(panel) << "\">\n";
    svg << "<rect width=\"" << fmt2(width) << "\" height=\"" << fmt2(panel)
        << "\" fill=\"white\"/>\n";

    auto unit = [&](const LatticeVector& v) {
        const double len = std::hypot(double(v[0]), double(v[1]));
        return std::pair<double, double>{v[0] / len, v[1] / len};
    };

    // shaded cones
    for (int c = 0; c < fan.cone_count(); ++c) {
        const auto& idx = fan.cone(c).ray_indices;
        auto [ax, ay] = unit(fan.ray(idx[0]));
        auto [bx, by] = unit(fan.ray(idx[1]));
        double mx = ax + bx;
        double my = ay + by;
        const double ml = std::hypot(mx, my);
        mx /= ml;
        my /= ml;
        svg << "<polygon points=\"" << fmt2(cx) << "," << fmt2(cy) << " "
            << fmt2(cx + radius * ax) << "," << fmt2(cy - radius * ay) << " "
            << fmt2(cx + radius * mx) << "," << fmt2(cy - radius * my) << " "
            << fmt2(cx + radius * bx) << "," << fmt2(cy - radius * by) << "\" fill=\""
            << detail::palette(c) << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
    }

    // rays with labels
    for (int i = 0; i < fan.ray_count(); ++i) {
        auto [ux, uy] = unit(fan.ray(i));
        const double tx = cx + radius * ux;
        const double ty = cy - radius * uy;
        svg << "<line x1=\"" << fmt2(cx) << "\" y1=\"" << fmt2(cy) << "\" x2=\"" << fmt2(tx)
            << "\" y2=\"" << fmt2(ty) << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
        // arrowhead
        const double hx = tx - 8 * ux;
        const double hy = ty + 8 * uy;
        svg << "<line x1=\"" << fmt2(hx - 4 * uy) << "\" y1=\"" << fmt2(hy - 4 * ux)
            << "\" x2=\"" << fmt2(tx) << "\" y2=\"" << fmt2(ty)
            << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
        svg << "<line x1=\"" << fmt2(hx + 4 * uy) << "\" y1=\"" << fmt2(hy + 4 * ux)
            << "\" x2=\"" << fmt2(tx) << "\" y2=\"" << fmt2(ty)
            << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt2(cx + (radius + 16) * ux) << "\" y=\""
            << fmt2(cy - (radius + 16) * uy + 4)
            << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"monospace\">r"
            << (i + 1) << "=" << fan.ray(i).str() << "</text>\n";
    }
    svg << "<text x=\"" << fmt2(cx) << "\" y=\"16\" font-size=\"13\" text-anchor=\"middle\" "
           "font-family=\"monospace\">fan: "
        << fan.ray_count() << " rays, " << fan.cone_count() << " cones</text>\n";

    if (with_polytope) {
        const double ox = panel + 20;
        const SectionSet sections = lattice_points(*bundle);
        SupportFunction psi(*bundle);
        const bool convex = psi.is_k_convex(0);

        Int lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
        bool first = true;
        auto stretch = [&](const DualVector& p) {
            if (first) {
                lo_x = hi_x = p[0];
                lo_y = hi_y = p[1];
                first = false;
            } else {
                lo_x = std::min(lo_x, p[0]);
                hi_x = std::max(hi_x, p[0]);
                lo_y = std::min(lo_y, p[1]);
                hi_y = std::max(hi_y, p[1]);
            }
        };
        for (const auto& m : psi.linear_forms()) stretch(m);
        for (const auto& p : sections.points) stretch(p);
        const double span = std::max<double>(std::max(hi_x - lo_x, hi_y - lo_y), 1);
        const double scale = 280.0 / span;
        const double mid_x = (lo_x + hi_x) / 2.0;
        const double mid_y = (lo_y + hi_y) / 2.0;
        auto px = [&](double x) { return ox + cx + (x - mid_x) * scale; };
        auto py = [&](double y) { return cy - (y - mid_y) * scale; };

        // light lattice grid
        for (Int gx = lo_x - 1; gx <= hi_x + 1; ++gx)
            for (Int gy = lo_y - 1; gy <= hi_y + 1; ++gy)
                svg << "<circle cx=\"" << fmt2(px(double(gx))) << "\" cy=\""
                    << fmt2(py(double(gy)))
                    << "\" r=\"1\" fill=\"#cccccc\"/>\n";

        if (convex) {
            auto verts = polytope_vertices(*bundle);
            if (verts.size() >= 2) {
                // order around the centroid for the outline
                const Int nv = static_cast<Int>(verts.size());
                Int sx = 0, sy = 0;
                for (const auto& v : verts) {
                    sx += v[0];
                    sy += v[1];
                }
                std::sort(verts.begin(), verts.end(),
                          [&](const DualVector& a, const DualVector& b) {
                              const Int axv = nv * a[0] - sx, ayv = nv * a[1] - sy;
                              const Int bxv = nv * b[0] - sx, byv = nv * b[1] - sy;
                              const bool ua = ayv > 0 || (ayv == 0 && axv > 0);
                              const bool ub = byv > 0 || (byv == 0 && bxv > 0);
                              if (ua != ub) return ua;
                              return axv * byv - ayv * bxv > 0;
                          });
                svg << "<polygon points=\"";
                for (std::size_t i = 0; i < verts.size(); ++i)
                    svg << (i ? " " : "") << fmt2(px(double(verts[i][0]))) << ","
                        << fmt2(py(double(verts[i][1])));
                svg << "\" fill=\"#1f78b4\" fill-opacity=\"0.15\" stroke=\"#1f78b4\" "
                       "stroke-width=\"1.5\"/>\n";
            }
            // labelled edges, one per wall with positive lattice length
            for (int w = 0; w < fan.wall_count(); ++w) {
                const Int len = edge_length(*bundle, w);
                if (len == 0) continue;
                const Wall& wall = fan.walls()[static_cast<std::size_t>(w)];
                const auto& a = psi.linear_form(wall.cone_a);
                const auto& b = psi.linear_form(wall.cone_b);
                svg << "<text x=\"" << fmt2(px((a[0] + b[0]) / 2.0) + 6) << "\" y=\""
                    << fmt2(py((a[1] + b[1]) / 2.0) - 6)
                    << "\" font-size=\"12\" fill=\"#1f4e79\" font-family=\"monospace\">" << len
                    << "</text>\n";
            }
        }

        for (const auto& p : sections.points)
            svg << "<circle cx=\"" << fmt2(px(double(p[0]))) << "\" cy=\""
                << fmt2(py(double(p[1]))) << "\" r=\"3.5\" fill=\"#e31a1c\"/>\n";

        svg << "<text x=\"" << fmt2(ox + cx)
            << "\" y=\"16\" font-size=\"13\" text-anchor=\"middle\" font-family=\"monospace\">"
            << "P_L: " << sections.count() << " lattice points"
            << (convex ? "" : " (support function not convex)") << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace toric
