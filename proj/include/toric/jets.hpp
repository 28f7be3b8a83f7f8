#pragma once

#include "toric/polytope.hpp"

namespace toric {

/// One jet target: a torus-fixed point, named by its maximal cone, and the
/// multiplicity k_i >= 1 requested there.
struct JetTarget {
    int cone = -1;
    Int multiplicity = 1;
};

/// Simultaneous jet targets. The order k of the jets being tested is
/// sum(multiplicities) - 1.
using JetSpec = std::vector<JetTarget>;

/// Chart exponents of the monomial section m at the fixed point of a cone:
/// the tuple <m, rho_j> + a_j over the cone's rays. Nonnegative entries are
/// exactly membership of m in P_L.
inline std::vector<Int> chart_exponents(const LineBundle& bundle, const DualVector& m,
                                        int cone_index) {
    const Fan& fan = bundle.fan();
    if (cone_index < 0 || cone_index >= fan.cone_count())
        throw ConeError("cone index out of range");
    if (!polytope_of(bundle).contains(m))
        throw NotASectionError("lattice point " + m.str() + " is outside P_L");
    std::vector<Int> e;
    e.reserve(static_cast<std::size_t>(fan.dim()));
    for (int ri : fan.cone(cone_index).ray_indices)
        e.push_back(checked_add(pair(m, fan.ray(ri)), bundle.coeff(ri)));
    return e;
}

namespace detail {

inline Int factorial(Int n) {
    Int f = 1;
    for (Int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

/// All tuples t in Z_{>=0}^n with |t| <= bound, ordered by total degree and
/// lexicographically within a degree.
inline std::vector<std::vector<Int>> derivative_orders(std::size_t n, Int bound) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> current(n, 0);
    auto rec = [&](auto&& self, std::size_t j, Int remaining) -> void {
        if (j == n) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        for (Int x = 0; x <= remaining; ++x) {
            current[j] = x;
            self(self, j + 1, remaining - x);
        }
        current[j] = 0;
    };
    for (Int degree = 0; degree <= bound; ++degree) rec(rec, 0, degree);
    return out;
}

using Wide = __int128;

inline Wide wide_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("overflow in exact rank computation");
    return r;
}

inline Wide wide_sub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("overflow in exact rank computation");
    return r;
}

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) row elimination. No floating point
/// anywhere: divisions are exact by the Bareiss identity.
inline Int matrix_rank(const std::vector<std::vector<Int>>& matrix) {
    if (matrix.empty()) return 0;
    const std::size_t rows = matrix.size();
    const std::size_t cols = matrix.front().size();
    std::vector<std::vector<detail::Wide>> a(rows, std::vector<detail::Wide>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (matrix[i].size() != cols) throw ShapeError("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = matrix[i][j];
    }

    std::size_t rank = 0;
    detail::Wide prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = detail::wide_sub(detail::wide_mul(a[rank][col], a[i][j]),
                                           detail::wide_mul(a[i][col], a[rank][j])) /
                          prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return static_cast<Int>(rank);
}

// The jet evaluation matrix: rows are the monomial sections of L, columns
// are derivative orders at the requested fixed points, entries match a
// section's chart exponents against the derivative order. Differentiating a
// monomial at the chart origin leaves the constant t_1!...t_n! exactly when
// the exponents equal the order, and zero otherwise.
struct JetMatrix {
    struct Column {
        int target;                  // index into the spec
        std::vector<Int> order;      // derivative order tuple
    };

    std::vector<DualVector> row_points;
    std::vector<Column> columns;
    std::vector<std::vector<Int>> entries;  // rows x columns

    Int row_count() const { return static_cast<Int>(row_points.size()); }
    Int column_count() const { return static_cast<Int>(columns.size()); }
};

inline void validate_spec(const Fan& fan, const JetSpec& spec) {
    if (spec.empty()) throw SpecError("jet spec has no targets");
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (spec[i].cone < 0 || spec[i].cone >= fan.cone_count())
            throw SpecError("jet target names a cone out of range");
        if (spec[i].multiplicity < 1) throw SpecError("jet multiplicities must be >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (spec[j].cone == spec[i].cone)
                throw SpecError("jet targets must be distinct fixed points");
    }
}

inline JetMatrix jet_matrix(const LineBundle& bundle, const JetSpec& spec) {
    const Fan& fan = bundle.fan();
    validate_spec(fan, spec);

    JetMatrix jm;
    const SectionSet sections = lattice_points(bundle);
    jm.row_points = sections.points;

    for (std::size_t i = 0; i < spec.size(); ++i)
        for (auto& order :
             detail::derivative_orders(static_cast<std::size_t>(fan.dim()),
                                       spec[i].multiplicity - 1))
            jm.columns.push_back({static_cast<int>(i), order});

    jm.entries.assign(sections.points.size(),
                      std::vector<Int>(jm.columns.size(), 0));
    for (std::size_t r = 0; r < sections.points.size(); ++r) {
        for (std::size_t c = 0; c < jm.columns.size(); ++c) {
            const auto& col = jm.columns[c];
            const auto& expo =
                sections.exponents[r][static_cast<std::size_t>(spec[static_cast<std::size_t>(col.target)].cone)];
            if (expo == col.order) {
                Int scale = 1;
                for (Int t : col.order) scale = checked_mul(scale, detail::factorial(t));
                jm.entries[r][c] = scale;
            }
        }
    }
    return jm;
}

/// Surjectivity of the jet evaluation map: exact rank equals column count.
inline bool is_jet_surjective(const LineBundle& bundle, const JetSpec& spec) {
    const JetMatrix jm = jet_matrix(bundle, spec);
    if (jm.row_count() == 0) return false;
    return matrix_rank(jm.entries) == jm.column_count();
}

struct OracleOptions {
    int max_fixed_points = 8;  // refuse larger fans unless raised
};

/// Brute-force jet level at the torus-fixed points: the largest k <= max_k
/// such that every spec with total multiplicity k+1 over distinct fixed
/// points is surjective, or nothing when even k = 0 fails. Checking fixed
/// points only is sufficient on a complete toric variety because the locus
/// where the evaluation map drops rank is invariant and, if nonempty, must
/// contain a fixed point.
inline std::optional<Int> oracle_jet_level(const LineBundle& bundle, Int max_k,
                                           OracleOptions options = {}) {
    if (max_k < 0) throw ParameterError("oracle bound must be >= 0");
    const Fan& fan = bundle.fan();
    if (fan.cone_count() > options.max_fixed_points)
        throw ParameterError("fan has " + std::to_string(fan.cone_count()) +
                             " fixed points; raise max_fixed_points to search it exhaustively");

    const int cones = fan.cone_count();
    std::optional<Int> achieved;
    for (Int k = 0; k <= max_k; ++k) {
        const Int total = k + 1;
        // distribute `total` over the fixed points; zero means not targeted
        std::vector<Int> mult(static_cast<std::size_t>(cones), 0);
        bool all_ok = true;
        auto rec = [&](auto&& self, int cone, Int remaining) -> void {
            if (!all_ok) return;
            if (cone == cones) {
                if (remaining != 0) return;
                JetSpec spec;
                for (int c = 0; c < cones; ++c)
                    if (mult[static_cast<std::size_t>(c)] > 0)
                        spec.push_back({c, mult[static_cast<std::size_t>(c)]});
                if (!is_jet_surjective(bundle, spec)) all_ok = false;
                return;
            }
            for (Int m = 0; m <= remaining; ++m) {
                mult[static_cast<std::size_t>(cone)] = m;
                self(self, cone + 1, remaining - m);
                if (!all_ok) return;
            }
            mult[static_cast<std::size_t>(cone)] = 0;
        };
        rec(rec, 0, total);
        if (!all_ok) break;
        achieved = k;
    }
    return achieved;
}

}  // namespace toric
