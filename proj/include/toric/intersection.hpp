#pragma once

#include "toric/divisor.hpp"

namespace toric {

/// The integer relation n0 + n1 = sum s_i n_i across a wall, where n0, n1
/// are the two opposite rays and the n_i run over the shared rays. The s_i
/// are integers because the shared rays extend to a Z-basis by either
/// opposite ray.
struct WallRelation {
    int wall_index = -1;
    std::vector<Int> s;  // aligned with wall.shared_rays
};

inline WallRelation wall_relation(const Fan& fan, int wall_index) {
    if (wall_index < 0 || wall_index >= fan.wall_count())
        throw ParameterError("wall index out of range");
    const Wall& w = fan.walls()[static_cast<std::size_t>(wall_index)];

    WallRelation rel;
    rel.wall_index = wall_index;

    if (fan.dim() == 1) {
        // no shared rays; the relation degenerates to n0 + n1 = 0
        if (!(fan.ray(w.opposite_a) + fan.ray(w.opposite_b)).is_zero())
            throw InconsistencyError("opposite rays of a line wall must cancel");
        return rel;
    }

    // Coordinates of n1 in the Z-basis of cone_a, ordered as the cone's rays.
    const auto coords = fan.cone_coordinates(w.cone_a, fan.ray(w.opposite_b));
    const auto& cone_rays = fan.cone(w.cone_a).ray_indices;

    rel.s.assign(w.shared_rays.size(), 0);
    for (std::size_t k = 0; k < cone_rays.size(); ++k) {
        if (cone_rays[k] == w.opposite_a) {
            if (coords[k] != -1)
                throw InconsistencyError(
                    "opposite ray coefficient across a wall of a smooth fan must be -1");
        } else {
            auto it = std::find(w.shared_rays.begin(), w.shared_rays.end(), cone_rays[k]);
            rel.s[static_cast<std::size_t>(it - w.shared_rays.begin())] = coords[k];
        }
    }

    // n0 + n1 - sum s_i n_i = 0, verified exactly.
    LatticeVector check = fan.ray(w.opposite_a) + fan.ray(w.opposite_b);
    for (std::size_t k = 0; k < w.shared_rays.size(); ++k)
        check = check - rel.s[k] * fan.ray(w.shared_rays[k]);
    if (!check.is_zero()) throw InconsistencyError("wall relation does not close");
    return rel;
}

/// Degree of L restricted to the invariant curve of a wall. Computed twice,
/// from the wall relation and from the neighbouring linear form, and the
/// two answers are required to agree.
inline Int intersection_number(const LineBundle& bundle, int wall_index) {
    const Fan& fan = bundle.fan();
    const Wall& w = fan.walls()[static_cast<std::size_t>(wall_index)];
    const WallRelation rel = wall_relation(fan, wall_index);

    // a_{n0} + a_{n1} - sum s_i a_{n_i}
    Int value = checked_add(bundle.coeff(w.opposite_a), bundle.coeff(w.opposite_b));
    for (std::size_t k = 0; k < w.shared_rays.size(); ++k)
        value = checked_sub(value, checked_mul(rel.s[k], bundle.coeff(w.shared_rays[k])));

    // <m_{sigma_b}, n0> - psi(n0)
    SupportFunction psi(bundle);
    Int alt = checked_sub(pair(psi.linear_form(w.cone_b), fan.ray(w.opposite_a)),
                          psi.value_at_ray(w.opposite_a));
    if (alt != value)
        throw InconsistencyError("wall intersection formulas disagree: " + std::to_string(value) +
                                 " vs " + std::to_string(alt));
    return value;
}

/// All wall degrees, in the fan's wall order.
inline std::vector<Int> intersection_table(const LineBundle& bundle) {
    std::vector<Int> t;
    t.reserve(static_cast<std::size_t>(bundle.fan().wall_count()));
    for (int w = 0; w < bundle.fan().wall_count(); ++w)
        t.push_back(intersection_number(bundle, w));
    return t;
}

inline bool is_nef(const LineBundle& bundle) {
    for (Int v : intersection_table(bundle))
        if (v < 0) return false;
    return true;
}

/// The number of jets the bundle generates: the minimum wall degree when
/// that is >= 0, nothing otherwise. Always cross-checked against the
/// convexity level of the support function; the two criteria are equivalent
/// and a mismatch would mean a bug.
inline std::optional<Int> jet_level(const LineBundle& bundle) {
    const auto table = intersection_table(bundle);
    Int min_value = table.front();
    for (Int v : table) min_value = std::min(min_value, v);

    std::optional<Int> level;
    if (min_value >= 0) level = min_value;

    const auto convexity = max_convexity(bundle);
    if (convexity != level)
        throw InconsistencyError("wall criterion and convexity criterion disagree");
    return level;
}

/// Global toric Seshadri constant. On a smooth fan every invariant curve is
/// a smooth rational curve with multiplicity one, so the bound is the same
/// minimum wall degree that jet_level reports; it is exported separately
/// because it answers a differently phrased question.
inline std::optional<Int> seshadri_constant(const LineBundle& bundle) {
    return jet_level(bundle);
}

struct AdjointNefReport {
    LineBundle adjoint;              // kK + L
    std::vector<Int> table;          // wall degrees of the adjoint
    bool nef = false;
    std::vector<int> negative_walls; // indices with negative degree
};

/// Wall table and nefness of kK + L on a surface.
inline AdjointNefReport adjoint_nef_report(const LineBundle& bundle, Int k) {
    if (bundle.fan().dim() != 2)
        throw DimensionError("adjoint analysis is surface-specific");
    if (k < 0) throw ParameterError("jet order must be >= 0");
    const auto level = jet_level(bundle);
    if (!level || *level < k)
        throw PreconditionError("bundle does not generate " + std::to_string(k) + "-jets");

    AdjointNefReport report{bundle + k * canonical_bundle(bundle.fan()), {}, true, {}};
    report.table = intersection_table(report.adjoint);
    for (std::size_t i = 0; i < report.table.size(); ++i)
        if (report.table[i] < 0) {
            report.nef = false;
            report.negative_walls.push_back(static_cast<int>(i));
        }
    return report;
}

}  // namespace toric
