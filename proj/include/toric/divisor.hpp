#pragma once

#include <optional>

#include "toric/fan.hpp"

namespace toric {

// A line bundle written on the invariant divisors, one integer coefficient
// per ray: L = sum a_i D_i. The fan travels with the bundle by value; fans
// are small and immutable, so copies are cheap and sharing is safe.
class LineBundle {
public:
    LineBundle(Fan fan, std::vector<Int> coeffs) : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<std::size_t>(fan_.ray_count()))
            throw ParameterError("bundle needs one coefficient per ray");
    }

    const Fan& fan() const { return fan_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int ray) const { return coeffs_[static_cast<std::size_t>(ray)]; }

    friend LineBundle operator+(const LineBundle& a, const LineBundle& b) {
        if (!(a.fan_ == b.fan_)) throw FanMismatchError("bundles live on different fans");
        std::vector<Int> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a.coeffs_[i], b.coeffs_[i]);
        return LineBundle(a.fan_, std::move(c));
    }

    friend LineBundle operator*(Int s, const LineBundle& a) {
        std::vector<Int> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(s, a.coeffs_[i]);
        return LineBundle(a.fan_, std::move(c));
    }

    LineBundle operator-() const { return Int(-1) * *this; }

    friend LineBundle operator-(const LineBundle& a, const LineBundle& b) { return a + (-b); }

    bool operator==(const LineBundle& other) const {
        return fan_ == other.fan_ && coeffs_ == other.coeffs_;
    }

private:
    Fan fan_;
    std::vector<Int> coeffs_;
};

/// The canonical bundle: coefficient -1 on every ray.
inline LineBundle canonical_bundle(const Fan& fan) {
    return LineBundle(fan, std::vector<Int>(static_cast<std::size_t>(fan.ray_count()), -1));
}

/// -K, coefficient +1 on every ray.
inline LineBundle anticanonical_bundle(const Fan& fan) {
    return LineBundle(fan, std::vector<Int>(static_cast<std::size_t>(fan.ray_count()), 1));
}

/// The principal divisor of the character m: coefficients <m, rho_i>.
inline LineBundle character_divisor(const Fan& fan, const DualVector& m) {
    std::vector<Int> c;
    c.reserve(static_cast<std::size_t>(fan.ray_count()));
    for (const auto& rho : fan.rays()) c.push_back(pair(m, rho));
    return LineBundle(fan, std::move(c));
}

// The piecewise-linear support function of a bundle: one linear form m_sigma
// per maximal cone, pinned by <m_sigma, rho_i> = -a_i on the cone's rays.
// Adjacent cones agree on shared rays by construction, so the function is
// well defined on all of N.
class SupportFunction {
public:
    explicit SupportFunction(const LineBundle& bundle) : fan_(bundle.fan()) {
        m_.reserve(static_cast<std::size_t>(fan_.cone_count()));
        for (int c = 0; c < fan_.cone_count(); ++c) {
            const auto& idx = fan_.cone(c).ray_indices;
            std::vector<Int> rhs;
            rhs.reserve(idx.size());
            for (int ri : idx) rhs.push_back(checked_neg(bundle.coeff(ri)));
            m_.emplace_back(fan_.cone_matrix(c).solve_unimodular(rhs));
        }
        coeffs_ = bundle.coeffs();
    }

    const Fan& fan() const { return fan_; }
    const DualVector& linear_form(int cone_index) const {
        return m_[static_cast<std::size_t>(cone_index)];
    }
    const std::vector<DualVector>& linear_forms() const { return m_; }

    /// psi at a ray is -a_i by definition; no cone lookup needed.
    Int value_at_ray(int ray_index) const {
        return checked_neg(coeffs_[static_cast<std::size_t>(ray_index)]);
    }

    /// Evaluates the support function at any lattice vector. The value does
    /// not depend on which containing cone is picked, because adjacent forms
    /// agree on shared faces.
    Int evaluate(const LatticeVector& v) const {
        return pair(linear_form(fan_.cone_containing(v)), v);
    }

    /// True when <m_sigma, v> >= psi(v) + k for every maximal cone sigma and
    /// every ray v outside sigma. Checking rays only is enough: both sides
    /// are linear on each cone, so the inequality propagates from the
    /// generators of every cone to the cone itself.
    bool is_k_convex(Int k) const { return deficiency() >= k; }

    /// Largest k for which the function is k-convex, or nothing when it is
    /// not even convex. Callers must treat the two outcomes differently:
    /// level 0 still means spanned, the empty case does not.
    std::optional<Int> max_convexity() const {
        Int d = deficiency();
        if (d < 0) return std::nullopt;
        return d;
    }

    /// min over (sigma, ray v outside sigma) of <m_sigma, v> - psi(v).
    Int deficiency() const {
        bool first = true;
        Int best = 0;
        for (int c = 0; c < fan_.cone_count(); ++c) {
            const auto& idx = fan_.cone(c).ray_indices;
            for (int ri = 0; ri < fan_.ray_count(); ++ri) {
                if (std::find(idx.begin(), idx.end(), ri) != idx.end()) continue;
                Int gap = checked_sub(pair(linear_form(c), fan_.ray(ri)), value_at_ray(ri));
                if (first || gap < best) {
                    best = gap;
                    first = false;
                }
            }
        }
        if (first)
            throw InconsistencyError("fan with a single maximal cone cannot be complete");
        return best;
    }

private:
    Fan fan_;
    std::vector<DualVector> m_;
    std::vector<Int> coeffs_;
};

inline SupportFunction support_function(const LineBundle& bundle) {
    return SupportFunction(bundle);
}

inline bool is_k_convex(const LineBundle& bundle, Int k) {
    return SupportFunction(bundle).is_k_convex(k);
}

inline std::optional<Int> max_convexity(const LineBundle& bundle) {
    return SupportFunction(bundle).max_convexity();
}

/// True when the bundle is the divisor of a character, i.e. all the linear
/// forms of its support function coincide.
inline bool is_principal(const LineBundle& bundle) {
    SupportFunction psi(bundle);
    for (int c = 1; c < bundle.fan().cone_count(); ++c)
        if (!(psi.linear_form(c) == psi.linear_form(0))) return false;
    return true;
}

/// Transform of a bundle under one star subdivision: p*(L) - eps E. Old rays
/// keep their coefficients; the new ray receives the value forced by
/// extending the support function linearly over the subdivided cone, minus
/// eps.
inline LineBundle pullback_minus_exceptional(const LineBundle& bundle, const Fan& blown_fan,
                                             int new_ray, Int eps) {
    const Fan& base = bundle.fan();
    if (eps < 0) throw ParameterError("exceptional multiple must be >= 0");
    if (blown_fan.dim() != base.dim() || blown_fan.ray_count() != base.ray_count() + 1 ||
        new_ray != base.ray_count())
        throw FanMismatchError("fan is not a one-step blow-up of the bundle's fan");
    for (int i = 0; i < base.ray_count(); ++i)
        if (!(blown_fan.ray(i) == base.ray(i)))
            throw FanMismatchError("blown-up fan does not preserve the original rays");

    const LatticeVector& rho = blown_fan.ray(new_ray);
    // The new ray must be the coordinate sum of one maximal cone of the base.
    int sigma = base.cone_containing(rho);
    for (Int c : base.cone_coordinates(sigma, rho))
        if (c != 1) throw FanMismatchError("new ray is not the star-subdivision ray of a cone");

    SupportFunction psi(bundle);
    Int pullback_coeff = checked_neg(pair(psi.linear_form(sigma), rho));
    auto coeffs = bundle.coeffs();
    coeffs.push_back(checked_sub(pullback_coeff, eps));
    return LineBundle(blown_fan, std::move(coeffs));
}

}  // namespace toric
