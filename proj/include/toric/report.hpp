#pragma once

#include "toric/jets.hpp"
#include "toric/surface.hpp"

namespace toric {

// Everything the analyze command reports. The four criterion fields answer
// the same question four ways (minimum wall degree, convexity level, minimum
// polytope edge, Seshadri bound) and must agree; `criteria_agree` records
// that the check was made.
struct Analysis {
    int dim = 0;
    int ray_count = 0;
    int cone_count = 0;
    int wall_count = 0;
    std::vector<Int> bundle;

    std::vector<Int> wall_table;
    std::optional<Int> jet_level;
    std::optional<Int> max_convexity;
    std::optional<Int> min_edge;  // empty when the support function is not convex
    std::optional<Int> seshadri;
    bool spanned = false;
    bool criteria_agree = false;

    Int h0 = 0;
    std::vector<DualVector> vertices;  // empty when not convex
    std::vector<DualVector> points;

    bool oracle_ran = false;
    Int oracle_max_k = 0;
    std::optional<Int> oracle_level;
    bool oracle_agrees = false;
};

inline Analysis analyze(const LineBundle& bundle, std::optional<Int> oracle_max_k = std::nullopt,
                        OracleOptions oracle_options = {}) {
    Analysis a;
    const Fan& fan = bundle.fan();
    a.dim = fan.dim();
    a.ray_count = fan.ray_count();
    a.cone_count = fan.cone_count();
    a.wall_count = fan.wall_count();
    a.bundle = bundle.coeffs();

    a.wall_table = intersection_table(bundle);
    a.jet_level = jet_level(bundle);
    a.max_convexity = max_convexity(bundle);
    a.seshadri = seshadri_constant(bundle);
    a.spanned = a.jet_level.has_value();
    if (a.spanned) {
        a.min_edge = min_edge_length(bundle);
        a.vertices = polytope_vertices(bundle);
    }

    a.criteria_agree = (a.jet_level == a.max_convexity) && (a.jet_level == a.seshadri) &&
                       (!a.spanned || a.min_edge == a.jet_level);

    const SectionSet sections = lattice_points(bundle);
    a.h0 = sections.count();
    a.points = sections.points;

    if (oracle_max_k) {
        a.oracle_ran = true;
        a.oracle_max_k = *oracle_max_k;
        a.oracle_level = oracle_jet_level(bundle, *oracle_max_k, oracle_options);
        std::optional<Int> expected = a.jet_level;
        if (expected && *expected > a.oracle_max_k) expected = a.oracle_max_k;
        a.oracle_agrees = a.oracle_level == expected;
    }
    return a;
}

inline std::string format_level(const std::optional<Int>& level) {
    return level ? std::to_string(*level) : std::string("not spanned");
}

inline std::string to_text(const Analysis& a) {
    std::ostringstream out;
    out << "fan: dim " << a.dim << ", " << a.ray_count << " rays, " << a.cone_count
        << " maximal cones, " << a.wall_count << " walls\n";
    out << "bundle:";
    for (Int c : a.bundle) out << " " << c;
    out << "\n";
    out << "jet level (min wall degree):   " << format_level(a.jet_level) << "\n";
    out << "support function convexity:    " << format_level(a.max_convexity) << "\n";
    out << "min polytope edge length:      "
        << (a.min_edge ? std::to_string(*a.min_edge) : std::string("undefined (not convex)"))
        << "\n";
    out << "toric Seshadri constant:       " << format_level(a.seshadri) << "\n";
    out << "criteria agreement:            " << (a.criteria_agree ? "yes" : "NO (internal bug)")
        << "\n";
    out << "wall degrees:";
    for (Int v : a.wall_table) out << " " << v;
    out << "\n";
    out << "h^0 (lattice points of P_L):   " << a.h0 << "\n";
    if (!a.vertices.empty()) {
        out << "polytope vertices:";
        for (const auto& v : a.vertices) out << " " << v.str();
        out << "\n";
    }
    if (a.oracle_ran) {
        out << "oracle level (max k " << a.oracle_max_k << "):      " << format_level(a.oracle_level)
            << (a.oracle_agrees ? " [agrees]" : " [DISAGREES: internal bug]") << "\n";
    }
    if (a.spanned) {
        out << "verdict: generates " << *a.jet_level << "-jets";
        if (*a.jet_level == 0) out << " (globally generated, not very ample)";
        if (*a.jet_level == 1) out << " (very ample)";
        if (*a.jet_level >= 2) out << " (" << *a.jet_level << "-very ample as well)";
        out << "\n";
    } else {
        out << "verdict: not spanned by global sections\n";
    }
    return out.str();
}

}  // namespace toric
