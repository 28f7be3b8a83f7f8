#pragma once

#include "toric/jets.hpp"

namespace toric {

/// On a surface every ray is itself a wall; this maps ray index to the
/// index of that wall.
inline int wall_of_ray(const Fan& fan, int ray_index) {
    if (fan.dim() != 2) throw DimensionError("rays are walls only on surfaces");
    for (int w = 0; w < fan.wall_count(); ++w)
        if (fan.walls()[static_cast<std::size_t>(w)].shared_rays ==
            std::vector<int>{ray_index})
            return w;
    throw InconsistencyError("ray is not a wall of the surface fan");
}

/// L . M on a surface, expanded over the rays of M: sum b_i (L . D_i).
inline Int intersection_product(const LineBundle& left, const LineBundle& right) {
    if (!(left.fan() == right.fan())) throw FanMismatchError("bundles live on different fans");
    if (left.fan().dim() != 2)
        throw DimensionError("intersection products are surface-specific here");
    Int total = 0;
    for (int i = 0; i < right.fan().ray_count(); ++i) {
        Int li = intersection_number(left, wall_of_ray(right.fan(), i));
        total = checked_add(total, checked_mul(right.coeff(i), li));
    }
    return total;
}

inline Int self_intersection(const LineBundle& bundle) {
    return intersection_product(bundle, bundle);
}

/// Twice the area of P_L by the shoelace formula over the hull of the
/// linear forms. Used as an independent route to L^2 for nef surface
/// bundles.
inline Int polytope_double_area(const LineBundle& bundle) {
    if (bundle.fan().dim() != 2) throw DimensionError("area is defined for surfaces");
    auto pts = polytope_vertices(bundle);
    if (pts.size() < 3) return 0;
    // order around the centroid; scale by the count to stay integral
    const Int n = static_cast<Int>(pts.size());
    std::vector<Int> cx(2, 0);
    for (const auto& p : pts) {
        cx[0] = checked_add(cx[0], p[0]);
        cx[1] = checked_add(cx[1], p[1]);
    }
    auto angle_less = [&](const DualVector& a, const DualVector& b) {
        const Int ax = checked_sub(checked_mul(n, a[0]), cx[0]);
        const Int ay = checked_sub(checked_mul(n, a[1]), cx[1]);
        const Int bx = checked_sub(checked_mul(n, b[0]), cx[0]);
        const Int by = checked_sub(checked_mul(n, b[1]), cx[1]);
        const bool ua = ay > 0 || (ay == 0 && ax > 0);
        const bool ub = by > 0 || (by == 0 && bx > 0);
        if (ua != ub) return ua;
        return checked_sub(checked_mul(ax, by), checked_mul(ay, bx)) > 0;
    };
    std::sort(pts.begin(), pts.end(), angle_less);
    Int twice = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        twice = checked_add(twice,
                            checked_sub(checked_mul(p[0], q[1]), checked_mul(p[1], q[0])));
    }
    return abs_int(twice);
}

enum class AdjointClass {
    Nef,
    MinimalPlaneException,  // the 3-ray surface with L of degree < 3k
    MinimalRuledException,  // a 4-ray surface with fiber degree < 2k
    NonMinimal,             // blown-up surface; always nef under the preconditions
};

inline const char* to_string(AdjointClass c) {
    switch (c) {
        case AdjointClass::Nef: return "nef";
        case AdjointClass::MinimalPlaneException: return "minimal-plane-exception";
        case AdjointClass::MinimalRuledException: return "minimal-ruled-exception";
        case AdjointClass::NonMinimal: return "non-minimal-analysis";
    }
    return "?";
}

struct AdjointReport {
    LineBundle adjoint;  // kK + L
    std::vector<Int> table;
    bool nef = false;
    std::vector<int> violating_walls;
    AdjointClass classification = AdjointClass::Nef;
};

/// Nefness of the k-adjoint bundle kK + L for a bundle generating k-jets,
/// L not a multiple of -K. The only non-nef outcomes are the two minimal
/// surfaces with L small against the ruling; this classification is checked
/// against the computed wall table rather than assumed.
inline AdjointReport k_reduction_check(const LineBundle& bundle, Int k) {
    const Fan& fan = bundle.fan();
    if (fan.dim() != 2) throw DimensionError("k-reduction analysis needs a surface");
    if (k < 0) throw ParameterError("jet order must be >= 0");
    const auto level = jet_level(bundle);
    if (!level || *level < k)
        throw PreconditionError("bundle does not generate " + std::to_string(k) + "-jets");
    const LineBundle adjoint = bundle + k * canonical_bundle(fan);
    if (is_principal(adjoint))
        throw PreconditionError("L = -kK is the excluded del Pezzo case");

    AdjointReport report{adjoint, intersection_table(adjoint), true, {}, AdjointClass::Nef};
    for (std::size_t i = 0; i < report.table.size(); ++i)
        if (report.table[i] < 0) {
            report.nef = false;
            report.violating_walls.push_back(static_cast<int>(i));
        }

    if (fan.ray_count() == 3) {
        if (!report.nef) report.classification = AdjointClass::MinimalPlaneException;
        // degree of L: every wall of the 3-ray surface meets L equally
        const Int a = intersection_number(bundle, 0);
        if (report.nef != (a >= 3 * k))
            throw InconsistencyError("adjoint classification disagrees with the wall table");
    } else if (fan.ray_count() == 4) {
        if (!report.nef) report.classification = AdjointClass::MinimalRuledException;
        // smallest degree on a self-intersection-zero ray (a fiber class)
        std::optional<Int> fiber_degree;
        for (int i = 0; i < fan.ray_count(); ++i) {
            const int w = wall_of_ray(fan, i);
            LineBundle di(fan, [&] {
                std::vector<Int> c(4, 0);
                c[static_cast<std::size_t>(i)] = 1;
                return c;
            }());
            if (intersection_number(di, w) != 0) continue;
            const Int deg = intersection_number(bundle, w);
            fiber_degree = fiber_degree ? std::min(*fiber_degree, deg) : deg;
        }
        if (!fiber_degree)
            throw InconsistencyError("minimal ruled surface without a fiber ray");
        if (report.nef != (*fiber_degree >= 2 * k))
            throw InconsistencyError("adjoint classification disagrees with the wall table");
    } else {
        report.classification = AdjointClass::NonMinimal;
        if (!report.nef)
            throw InconsistencyError(
                "adjoint bundle of a non-minimal surface must be nef under the preconditions");
    }
    return report;
}

inline void require_higher_adjoint_hypotheses(const LineBundle& bundle, Int k) {
    if (bundle.fan().dim() != 2)
        throw DimensionError("higher adjoint analysis needs a surface");
    if (k < 0) throw ParameterError("jet order must be >= 0");
    const auto level = jet_level(bundle);
    if (!level || *level < 1) throw PreconditionError("bundle must be ample");
    if (self_intersection(bundle) <= 1)
        throw PreconditionError("bundle must have self-intersection > 1");
}

/// K + (k+2)L generates k-jets at every single fixed point. Only the fixed
/// points are inspected; that is the scope of the brute-force oracle.
inline bool higher_adjoint_fixed_point_jets(const LineBundle& bundle, Int k) {
    require_higher_adjoint_hypotheses(bundle, k);
    const LineBundle adjoint =
        canonical_bundle(bundle.fan()) + checked_add(k, 2) * bundle;
    for (int c = 0; c < bundle.fan().cone_count(); ++c)
        if (!is_jet_surjective(adjoint, {{c, k + 1}})) return false;
    return true;
}

/// K + (2k+2)L generates simultaneous k-jets over the fixed points.
inline bool higher_adjoint_simultaneous(const LineBundle& bundle, Int k,
                                        OracleOptions options = {}) {
    require_higher_adjoint_hypotheses(bundle, k);
    const LineBundle adjoint =
        canonical_bundle(bundle.fan()) + checked_add(checked_mul(2, k), 2) * bundle;
    const auto level = oracle_jet_level(adjoint, k, options);
    return level && *level >= k;
}

}  // namespace toric
