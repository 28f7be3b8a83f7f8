#pragma once

#include "toric/intersection.hpp"
#include "toric/rational.hpp"

namespace toric {

struct HalfSpace {
    LatticeVector normal;  // a ray rho_i
    Int bound;             // the inequality is <m, normal> >= bound, with bound = -a_i
};

/// The section polytope P_L in inequality form, one half-space per ray.
struct HPolytope {
    std::vector<HalfSpace> inequalities;

    bool contains(const DualVector& m) const {
        for (const auto& h : inequalities)
            if (pair(m, h.normal) < h.bound) return false;
        return true;
    }
};

inline HPolytope polytope_of(const LineBundle& bundle) {
    HPolytope p;
    p.inequalities.reserve(static_cast<std::size_t>(bundle.fan().ray_count()));
    for (int i = 0; i < bundle.fan().ray_count(); ++i)
        p.inequalities.push_back({bundle.fan().ray(i), checked_neg(bundle.coeff(i))});
    return p;
}

/// The linear forms m_sigma, deduplicated and lexicographically sorted.
/// For a convex support function these are the hull points of P_L; strict
/// convexity makes them exactly its vertices.
inline std::vector<DualVector> polytope_vertices(const LineBundle& bundle) {
    SupportFunction psi(bundle);
    if (!psi.is_k_convex(0))
        throw NotConvexError("support function is not convex; P_L has no vertex description");
    auto v = psi.linear_forms();
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Lattice length of the polytope edge dual to a wall: the integer lambda
/// with m_{sigma_a} - m_{sigma_b} = lambda * (primitive vector), zero when
/// the two forms agree.
inline Int edge_length(const LineBundle& bundle, int wall_index) {
    SupportFunction psi(bundle);
    if (!psi.is_k_convex(0)) throw NotConvexError("support function is not convex");
    const Wall& w = bundle.fan().walls()[static_cast<std::size_t>(wall_index)];
    DualVector d = psi.linear_form(w.cone_a) - psi.linear_form(w.cone_b);
    Int g = 0;
    for (std::size_t i = 0; i < d.dim(); ++i) g = gcd_int(g, d[i]);
    return g;
}

inline Int min_edge_length(const LineBundle& bundle) {
    Int best = edge_length(bundle, 0);
    for (int w = 1; w < bundle.fan().wall_count(); ++w)
        best = std::min(best, edge_length(bundle, w));
    return best;
}

// The lattice points of P_L with, for every point and every maximal cone,
// the exponent tuple of the corresponding monomial section in that cone's
// chart coordinates. Point order is lexicographic.
struct SectionSet {
    std::vector<DualVector> points;
    // exponents[p][c][j] = <m_p, rho_j> + a_j over the rays of cone c
    std::vector<std::vector<std::vector<Int>>> exponents;

    Int count() const { return static_cast<Int>(points.size()); }
};

/// Enumerates P_L ∩ M over the coordinate bounding box of the linear forms
/// {m_sigma} and filters by the defining inequalities. The box is valid for
/// every bundle, convex support function or not, because P_L is always
/// contained in the convex hull of the m_sigma.
inline SectionSet lattice_points(const LineBundle& bundle) {
    const Fan& fan = bundle.fan();
    SupportFunction psi(bundle);
    const std::size_t n = static_cast<std::size_t>(fan.dim());

    std::vector<Int> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = psi.linear_form(0)[j];
        hi[j] = psi.linear_form(0)[j];
        for (const auto& m : psi.linear_forms()) {
            lo[j] = std::min(lo[j], m[j]);
            hi[j] = std::max(hi[j], m[j]);
        }
    }

    const HPolytope poly = polytope_of(bundle);
    SectionSet sections;
    std::vector<Int> current(n);
    auto enumerate = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            DualVector m(current);
            if (poly.contains(m)) sections.points.push_back(std::move(m));
            return;
        }
        for (Int x = lo[j]; x <= hi[j]; ++x) {
            current[j] = x;
            self(self, j + 1);
        }
    };
    enumerate(enumerate, 0);
    std::sort(sections.points.begin(), sections.points.end());

    sections.exponents.reserve(sections.points.size());
    for (const auto& m : sections.points) {
        std::vector<std::vector<Int>> per_cone;
        per_cone.reserve(static_cast<std::size_t>(fan.cone_count()));
        for (int c = 0; c < fan.cone_count(); ++c) {
            std::vector<Int> e;
            e.reserve(n);
            for (int ri : fan.cone(c).ray_indices)
                e.push_back(checked_add(pair(m, fan.ray(ri)), bundle.coeff(ri)));
            per_cone.push_back(std::move(e));
        }
        sections.exponents.push_back(std::move(per_cone));
    }
    return sections;
}

/// The section point guaranteed by k-convexity: starting from m_sigma, walk
/// t_j lattice steps along each adjacent polytope edge. The combination has
/// rational weights t_j / l_j but always lands on a lattice point, which is
/// asserted. The result has chart exponents exactly t at sigma.
inline DualVector section_with_exponents(const LineBundle& bundle, int cone_index,
                                      const std::vector<Int>& t) {
    const Fan& fan = bundle.fan();
    if (cone_index < 0 || cone_index >= fan.cone_count())
        throw ConeError("cone index out of range");
    const std::size_t n = static_cast<std::size_t>(fan.dim());
    if (t.size() != n) throw ParameterError("exponent tuple has wrong length");
    Int total = 0;
    for (Int x : t) {
        if (x < 0) throw ParameterError("exponent tuple entries must be >= 0");
        total = checked_add(total, x);
    }

    SupportFunction psi(bundle);
    const auto k = psi.max_convexity();
    if (!k) throw NotConvexError("support function is not convex");
    if (total > *k)
        throw NotKConvexError("requested jet order " + std::to_string(total) +
                              " exceeds convexity level " + std::to_string(*k));

    const auto& cone_rays = fan.cone(cone_index).ray_indices;
    std::vector<Rational> acc(n);
    for (std::size_t j = 0; j < n; ++j) acc[j] = Rational(psi.linear_form(cone_index)[j]);

    for (std::size_t pos = 0; pos < n; ++pos) {
        if (t[pos] == 0) continue;
        // wall opposite to ray cone_rays[pos] inside this cone
        std::vector<int> shared;
        for (std::size_t q = 0; q < n; ++q)
            if (q != pos) shared.push_back(cone_rays[q]);
        int adjacent = -1;
        Int length = 0;
        for (int w = 0; w < fan.wall_count(); ++w) {
            const Wall& wall = fan.walls()[static_cast<std::size_t>(w)];
            if (wall.shared_rays != shared) continue;
            if (wall.cone_a == cone_index)
                adjacent = wall.cone_b;
            else if (wall.cone_b == cone_index)
                adjacent = wall.cone_a;
            else
                continue;
            length = edge_length(bundle, w);
            break;
        }
        if (adjacent < 0) throw InconsistencyError("maximal cone is missing a wall");
        if (length < t[pos])
            throw InconsistencyError("edge shorter than the convexity level allows");
        const Rational weight(t[pos], length);
        const DualVector& target = psi.linear_form(adjacent);
        const DualVector& origin = psi.linear_form(cone_index);
        for (std::size_t j = 0; j < n; ++j)
            acc[j] = acc[j] + weight * Rational(checked_sub(target[j], origin[j]));
    }

    std::vector<Int> coords(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!acc[j].is_integer())
            throw InconsistencyError("edge walk left the lattice; construction violated");
        coords[j] = acc[j].num();
    }
    DualVector m(coords);

    if (!polytope_of(bundle).contains(m))
        throw InconsistencyError("constructed section point lies outside P_L");
    for (std::size_t q = 0; q < n; ++q) {
        Int e = checked_add(pair(m, fan.ray(cone_rays[q])), bundle.coeff(cone_rays[q]));
        if (e != t[q])
            throw InconsistencyError("constructed section point has wrong chart exponents");
    }
    return m;
}

}  // namespace toric
