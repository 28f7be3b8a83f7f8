#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "toric/lattice.hpp"

namespace toric {

/// A cone of the fan, stored as sorted indices into the fan's ray list.
struct Cone {
    std::vector<int> ray_indices;

    bool operator==(const Cone&) const = default;
    auto operator<=>(const Cone&) const = default;
};

/// A codimension-one cone shared by exactly two maximal cones. The two
/// cones are oriented so that cone_a has the lower index; opposite_a and
/// opposite_b are the rays that belong to only one side.
struct Wall {
    int cone_a = -1;
    int cone_b = -1;
    std::vector<int> shared_rays;  // sorted, size n-1
    int opposite_a = -1;
    int opposite_b = -1;
};

// A complete regular fan. Construction validates smoothness (every maximal
// cone spans a Z-basis), the two-cone wall condition, and completeness:
// exactly, by cyclic ray order, in dimension <= 2, and by deterministic
// containment probes in higher dimension. Instances are immutable and safe
// to share between threads.
class Fan {
public:
    static Fan make(int dim, std::vector<LatticeVector> rays, std::vector<Cone> cones) {
        Fan f;
        f.dim_ = dim;
        f.rays_ = std::move(rays);
        f.cones_ = std::move(cones);
        f.validate_and_finish();
        return f;
    }

    int dim() const { return dim_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(int i) const { return rays_[static_cast<std::size_t>(i)]; }
    const std::vector<Cone>& max_cones() const { return cones_; }
    const Cone& cone(int i) const { return cones_[static_cast<std::size_t>(i)]; }
    const std::vector<Wall>& walls() const { return walls_; }

    int ray_count() const { return static_cast<int>(rays_.size()); }
    int cone_count() const { return static_cast<int>(cones_.size()); }
    int wall_count() const { return static_cast<int>(walls_.size()); }

    /// Ray matrix of a maximal cone, rows in ray-index order.
    IntegerMatrix cone_matrix(int cone_index) const {
        std::vector<std::vector<Int>> rows;
        rows.reserve(cone(cone_index).ray_indices.size());
        for (int ri : cone(cone_index).ray_indices) rows.push_back(ray(ri).coords());
        return IntegerMatrix(std::move(rows));
    }

    /// Coordinates of v in the Z-basis formed by the cone's rays.
    std::vector<Int> cone_coordinates(int cone_index, const LatticeVector& v) const {
        std::vector<LatticeVector> basis;
        for (int ri : cone(cone_index).ray_indices) basis.push_back(ray(ri));
        return basis_coordinates(basis, v);
    }

    bool cone_contains(int cone_index, const LatticeVector& v) const {
        for (Int c : cone_coordinates(cone_index, v))
            if (c < 0) return false;
        return true;
    }

    bool cone_interior_contains(int cone_index, const LatticeVector& v) const {
        for (Int c : cone_coordinates(cone_index, v))
            if (c <= 0) return false;
        return true;
    }

    /// Index of some maximal cone containing v. Complete fans always have one.
    int cone_containing(const LatticeVector& v) const {
        for (int c = 0; c < cone_count(); ++c)
            if (cone_contains(c, v)) return c;
        throw InconsistencyError("no maximal cone contains " + v.str() +
                                 "; the fan is not complete");
    }

    bool has_ray(const LatticeVector& v) const {
        return std::find(rays_.begin(), rays_.end(), v) != rays_.end();
    }

    bool operator==(const Fan& other) const {
        return dim_ == other.dim_ && rays_ == other.rays_ && cones_ == other.cones_;
    }

private:
    Fan() = default;

    void validate_and_finish() {
        if (dim_ < 1) throw DimensionError("fan dimension must be at least 1");
        if (rays_.empty()) throw ValidationError("fan has no rays");
        const std::size_t n = static_cast<std::size_t>(dim_);

        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (rays_[i].dim() != n)
                throw DimensionError("ray " + std::to_string(i + 1) + " has wrong dimension");
            if (!is_primitive(rays_[i]))
                throw NonPrimitiveRay("ray " + std::to_string(i + 1) + " " + rays_[i].str() +
                                      " is not primitive");
            for (std::size_t j = 0; j < i; ++j)
                if (rays_[i] == rays_[j])
                    throw ValidationError("duplicate ray " + rays_[i].str());
        }

        if (cones_.empty()) throw ValidationError("fan has no maximal cones");
        // canonical cone order: indices sorted within a cone, cones sorted
        // lexicographically, so equal fans compare equal however they were
        // assembled
        for (auto& c : cones_) std::sort(c.ray_indices.begin(), c.ray_indices.end());
        std::sort(cones_.begin(), cones_.end());
        std::vector<bool> used(rays_.size(), false);
        for (auto& c : cones_) {
            if (c.ray_indices.size() != n)
                throw ValidationError("maximal cone must have exactly " + std::to_string(dim_) +
                                      " rays");
            for (std::size_t k = 0; k < c.ray_indices.size(); ++k) {
                int ri = c.ray_indices[k];
                if (ri < 0 || ri >= ray_count())
                    throw ValidationError("cone references ray index out of range");
                if (k > 0 && c.ray_indices[k] == c.ray_indices[k - 1])
                    throw ValidationError("cone repeats a ray");
                used[static_cast<std::size_t>(ri)] = true;
            }
        }
        for (std::size_t i = 0; i < rays_.size(); ++i)
            if (!used[i])
                throw ValidationError("ray " + std::to_string(i + 1) +
                                      " is not part of any maximal cone");
        for (std::size_t i = 0; i < cones_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (cones_[i] == cones_[j]) throw ValidationError("duplicate maximal cone");

        for (int c = 0; c < cone_count(); ++c) {
            Int d = cone_matrix(c).det();
            if (d != 1 && d != -1)
                throw NonUnimodularCone("maximal cone " + std::to_string(c + 1) +
                                        " has determinant " + std::to_string(d));
        }

        derive_walls();

        if (dim_ == 2)
            check_complete_dim2();
        else if (dim_ >= 3)
            check_complete_probes();
        // dim 1: the facet map already forces the two rays +1 and -1 to share
        // the origin wall, which is completeness on a line.
    }

    void derive_walls() {
        // facet (as sorted ray-index set) -> list of (cone, opposite ray)
        std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
        for (int c = 0; c < cone_count(); ++c) {
            const auto& idx = cone(c).ray_indices;
            for (std::size_t drop = 0; drop < idx.size(); ++drop) {
                std::vector<int> facet;
                facet.reserve(idx.size() - 1);
                for (std::size_t k = 0; k < idx.size(); ++k)
                    if (k != drop) facet.push_back(idx[k]);
                facets[facet].emplace_back(c, idx[drop]);
            }
        }
        walls_.clear();
        for (const auto& [facet, touching] : facets) {
            if (touching.size() == 1)
                throw IncompleteFan("wall bounded by only one maximal cone");
            if (touching.size() > 2)
                throw DanglingWall("wall shared by " + std::to_string(touching.size()) +
                                   " maximal cones");
            Wall w;
            w.shared_rays = facet;
            auto [c0, o0] = touching[0];
            auto [c1, o1] = touching[1];
            if (c0 > c1) {
                std::swap(c0, c1);
                std::swap(o0, o1);
            }
            w.cone_a = c0;
            w.opposite_a = o0;
            w.cone_b = c1;
            w.opposite_b = o1;
            walls_.push_back(std::move(w));
        }
        // std::map iteration already gives a deterministic wall order
        // (lexicographic in the shared ray indices).
    }

    // Exact completeness in the plane: rays sorted by angle must be pairwise
    // consecutive and every consecutive pair must span a listed cone.
    void check_complete_dim2() {
        std::vector<int> order(rays_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        auto upper = [&](const LatticeVector& v) {
            return v[1] > 0 || (v[1] == 0 && v[0] > 0);
        };
        auto cross = [&](const LatticeVector& a, const LatticeVector& b) {
            return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const auto& va = ray(a);
            const auto& vb = ray(b);
            if (upper(va) != upper(vb)) return upper(va);
            return cross(va, vb) > 0;
        });

        std::vector<Cone> expected;
        for (std::size_t k = 0; k < order.size(); ++k) {
            int a = order[k];
            int b = order[(k + 1) % order.size()];
            Cone c{{std::min(a, b), std::max(a, b)}};
            expected.push_back(std::move(c));
        }
        auto listed = cones_;
        std::sort(listed.begin(), listed.end());
        std::sort(expected.begin(), expected.end());
        if (listed != expected)
            throw IncompleteFan(
                "2-dimensional fan is not the full cyclic arrangement of its rays");
    }

    // Probe-based completeness for dimension >= 3. Every probe direction must
    // be covered by some maximal cone and interior to at most one; wall
    // probes just inside each bounding cone must be interior only there.
    void check_complete_probes() {
        auto check_probe = [&](const LatticeVector& p) {
            int weak = 0;
            int interior = 0;
            for (int c = 0; c < cone_count(); ++c) {
                bool in = true;
                bool strict = true;
                for (Int x : cone_coordinates(c, p)) {
                    if (x < 0) {
                        in = false;
                        break;
                    }
                    if (x == 0) strict = false;
                }
                if (in) {
                    ++weak;
                    if (strict) ++interior;
                }
            }
            if (weak == 0)
                throw IncompleteFan("probe direction " + p.str() +
                                    " is not covered by any maximal cone");
            if (interior > 1)
                throw ValidationError("probe direction " + p.str() +
                                      " lies in the interior of two maximal cones");
            if (interior == 1 && weak > 1)
                throw ValidationError("maximal cones overlap near " + p.str());
        };

        for (const Wall& w : walls_) {
            std::vector<Int> acc(static_cast<std::size_t>(dim_), 0);
            LatticeVector s(acc);
            for (int ri : w.shared_rays) s = s + ray(ri);
            check_probe(s + ray(w.opposite_a));
            check_probe(s + ray(w.opposite_b));
        }

        std::mt19937_64 rng(0x746f726963ULL);  // fixed seed, same probes every run
        int produced = 0;
        while (produced < 64) {
            std::vector<Int> c(static_cast<std::size_t>(dim_));
            for (auto& x : c) x = static_cast<Int>(rng() % 19) - 9;
            LatticeVector v(c);
            if (v.is_zero()) continue;
            ++produced;
            check_probe(v);
        }
    }

    int dim_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<Cone> cones_;
    std::vector<Wall> walls_;
};

/// Fan of projective n-space: rays e_1..e_n and -(e_1+...+e_n), with the
/// n+1 coordinate-omitting maximal cones.
inline Fan projective_space(int n) {
    if (n < 1) throw DimensionError("projective space needs dimension >= 1");
    std::vector<LatticeVector> rays;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(i)] = 1;
        rays.emplace_back(std::move(c));
    }
    rays.emplace_back(std::vector<Int>(static_cast<std::size_t>(n), -1));

    std::vector<Cone> cones;
    for (int omit = 0; omit <= n; ++omit) {
        Cone c;
        for (int i = 0; i <= n; ++i)
            if (i != omit) c.ray_indices.push_back(i);
        cones.push_back(std::move(c));
    }
    return Fan::make(n, std::move(rays), std::move(cones));
}

/// Hirzebruch surface fan on the rays e2, e1, -e2, -e1+r*e2 (in that ray
/// order, matching the usual divisor labels D1..D4), with the four cones
/// between cyclically adjacent rays.
inline Fan hirzebruch(Int r) {
    if (r < 0) throw ParameterError("Hirzebruch parameter must be >= 0");
    std::vector<LatticeVector> rays = {{0, 1}, {1, 0}, {0, -1}, {-1, r}};
    std::vector<Cone> cones = {{{0, 1}}, {{0, 3}}, {{2, 3}}, {{1, 2}}};
    return Fan::make(2, std::move(rays), std::move(cones));
}

/// The hexagonal fan of the degree-six del Pezzo surface.
inline Fan del_pezzo_6() {
    std::vector<LatticeVector> rays = {{0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}};
    std::vector<Cone> cones = {{{0, 1}}, {{1, 2}}, {{2, 3}}, {{3, 4}}, {{4, 5}}, {{5, 0}}};
    return Fan::make(2, std::move(rays), std::move(cones));
}

struct BlowUpResult {
    Fan fan;
    int new_ray;  // index appended at the end of the ray list
};

/// Star subdivision at a maximal cone: inserts the ray sum of the cone and
/// replaces the cone by the n cones obtained by swapping the new ray for
/// each original one. Old ray indices are preserved.
inline BlowUpResult blow_up(const Fan& fan, int cone_index) {
    if (cone_index < 0 || cone_index >= fan.cone_count())
        throw ConeError("blow-up cone index out of range");
    const Cone target = fan.cone(cone_index);

    std::vector<Int> acc(static_cast<std::size_t>(fan.dim()), 0);
    LatticeVector sum(acc);
    for (int ri : target.ray_indices) sum = sum + fan.ray(ri);
    if (!is_primitive(sum))
        throw InconsistencyError("ray sum of a unimodular cone must be primitive");
    if (fan.has_ray(sum))
        throw ConeError("star subdivision ray " + sum.str() + " already present");

    auto rays = fan.rays();
    rays.push_back(sum);
    const int new_ray = static_cast<int>(rays.size()) - 1;

    std::vector<Cone> cones;
    for (int c = 0; c < fan.cone_count(); ++c)
        if (c != cone_index) cones.push_back(fan.cone(c));
    for (std::size_t drop = 0; drop < target.ray_indices.size(); ++drop) {
        Cone c;
        for (std::size_t k = 0; k < target.ray_indices.size(); ++k)
            if (k != drop) c.ray_indices.push_back(target.ray_indices[k]);
        c.ray_indices.push_back(new_ray);
        cones.push_back(std::move(c));
    }
    return BlowUpResult{Fan::make(fan.dim(), std::move(rays), std::move(cones)), new_ray};
}

/// Equality after matching rays by their coordinate vectors (the ray lists
/// must coincide as sets).
inline bool equal_up_to_ray_order(const Fan& a, const Fan& b) {
    if (a.dim() != b.dim() || a.ray_count() != b.ray_count() || a.cone_count() != b.cone_count())
        return false;
    std::vector<int> map_ab(static_cast<std::size_t>(a.ray_count()), -1);
    for (int i = 0; i < a.ray_count(); ++i) {
        const auto& br = b.rays();
        auto it = std::find(br.begin(), br.end(), a.ray(i));
        if (it == br.end()) return false;
        map_ab[static_cast<std::size_t>(i)] = static_cast<int>(it - br.begin());
    }
    std::vector<Cone> mapped;
    for (const Cone& c : a.max_cones()) {
        Cone m;
        for (int ri : c.ray_indices) m.ray_indices.push_back(map_ab[static_cast<std::size_t>(ri)]);
        std::sort(m.ray_indices.begin(), m.ray_indices.end());
        mapped.push_back(std::move(m));
    }
    auto bc = b.max_cones();
    std::sort(mapped.begin(), mapped.end());
    std::sort(bc.begin(), bc.end());
    return mapped == bc;
}

/// Lattice isomorphism test: searches for a GL(n,Z) map sending rays to rays
/// and cones to cones, anchored at the first maximal cone of `a`. Intended
/// for test-sized fans only.
inline bool isomorphic(const Fan& a, const Fan& b) {
    if (a.dim() != b.dim() || a.ray_count() != b.ray_count() || a.cone_count() != b.cone_count())
        return false;
    const Cone& anchor = a.cone(0);

    std::vector<LatticeVector> domain;
    for (int ri : anchor.ray_indices) domain.push_back(a.ray(ri));
    IntegerMatrix dom_rows = IntegerMatrix::from_rows(domain);

    for (int bc = 0; bc < b.cone_count(); ++bc) {
        std::vector<int> perm = b.cone(bc).ray_indices;
        std::sort(perm.begin(), perm.end());
        do {
            // g maps domain[k] to b.ray(perm[k]); solve for g columnwise.
            // For x with coordinates c in the domain basis, g(x) has the same
            // coordinates in the image basis.
            std::vector<LatticeVector> image;
            for (int ri : perm) image.push_back(b.ray(ri));
            IntegerMatrix img_cols = IntegerMatrix::from_rows(image).transposed();

            auto apply_g = [&](const LatticeVector& v) {
                auto c = dom_rows.transposed().solve_unimodular(v.coords());
                return LatticeVector(img_cols.apply(c));
            };

            std::vector<int> ray_map(static_cast<std::size_t>(a.ray_count()), -1);
            bool ok = true;
            for (int i = 0; i < a.ray_count() && ok; ++i) {
                LatticeVector gi = apply_g(a.ray(i));
                const auto& br = b.rays();
                auto it = std::find(br.begin(), br.end(), gi);
                if (it == br.end())
                    ok = false;
                else
                    ray_map[static_cast<std::size_t>(i)] = static_cast<int>(it - br.begin());
            }
            if (ok) {
                std::vector<Cone> mapped;
                for (const Cone& c : a.max_cones()) {
                    Cone m;
                    for (int ri : c.ray_indices)
                        m.ray_indices.push_back(ray_map[static_cast<std::size_t>(ri)]);
                    std::sort(m.ray_indices.begin(), m.ray_indices.end());
                    mapped.push_back(std::move(m));
                }
                auto bcones = b.max_cones();
                std::sort(mapped.begin(), mapped.end());
                std::sort(bcones.begin(), bcones.end());
                if (mapped == bcones) return true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

}  // namespace toric
