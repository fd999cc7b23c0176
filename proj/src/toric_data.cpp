#include "prequant/toric_data.hpp"

#include "prequant/errors.hpp"

#include <functional>
#include <stdexcept>

namespace prequant {

Rational ToricData::p_of(const IntVector& m) const { return p_of(to_rational(m)); }

Rational ToricData::p_of(const RatVector& m) const {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i)
        s += p[i] * m[i];
    return s;
}

Integer ToricData::c_of(const IntVector& m) const {
    Integer s = 0;
    for (std::size_t i = 0; i < k; ++i)
        s += chern[i] * m[i];
    return s;
}

ToricData toric_data(const DelzantPolytope& polytope) {
    ValidationReport report = validate(polytope);
    if (!report.compact)
        throw HypothesisError("compact", "polytope is unbounded");
    if (!report.smooth)
        throw HypothesisError("smooth", "polytope is not Delzant");

    ToricData T;
    T.n = polytope.facet_count();
    T.d = polytope.dim();
    std::vector<IntVector> normals;
    for (const auto& f : polytope.facets())
        normals.push_back(f.normal);
    T.beta = IntMatrix::from_columns(normals, T.d);
    T.kappa = integer_kernel(T.beta);
    T.k = T.kappa.size();
    if (T.k + T.d != T.n)
        throw std::logic_error("conormals do not span the torus lattice");
    T.iota = T.kappa.matrix();
    T.a = polytope.offsets();
    T.p = T.iota_star(T.a);
    T.chern.assign(T.k, 0);
    for (std::size_t i = 0; i < T.k; ++i)
        for (std::size_t j = 0; j < T.n; ++j)
            T.chern[i] += T.iota(j, i);

    if (rationality_check(T))
        T.hbar = 1;
    T.N_M = monotonicity_check(T);

    IntVector prow = primitive_integer_multiple(T.p);
    T.k0 = integer_kernel(IntMatrix::from_rows({prow}, T.k));
    T.b = find_positive_b(T);
    return T;
}

bool rationality_check(const ToricData& T) {
    auto integral = to_integral(T.p);
    return integral && gcd(*integral) == 1;
}

std::optional<Integer> monotonicity_check(const ToricData& T) {
    if (!rationality_check(T))
        return std::nullopt;
    std::size_t i = 0;
    while (i < T.k && T.p[i] == 0)
        ++i;
    if (i == T.k)
        return std::nullopt;
    Rational ratio = Rational(T.chern[i]) / T.p[i];
    if (ratio <= 0 || !is_integral(ratio))
        return std::nullopt;
    for (std::size_t j = 0; j < T.k; ++j)
        if (Rational(T.chern[j]) != ratio * T.p[j])
            return std::nullopt;
    return ratio.get_num();
}

IntVector find_positive_b(const ToricData& T) {
    const std::size_t k = T.k;
    IntVector b(k);
    std::optional<IntVector> found;
    // all vectors of l1-norm `left` in coordinates [pos, k), ascending lex
    std::function<void(std::size_t, long)> visit = [&](std::size_t pos, long left) {
        if (found)
            return;
        if (pos + 1 == k) {
            for (long v : {-left, left}) {
                b[pos] = v;
                bool positive = true;
                for (const auto& e : T.iota_of(b))
                    positive = positive && e > 0;
                if (positive) {
                    found = b;
                    return;
                }
                if (left == 0)
                    break;
            }
            return;
        }
        for (long v = -left; v <= left; ++v) {
            b[pos] = v;
            visit(pos + 1, left - std::labs(v));
            if (found)
                return;
        }
    };
    for (long norm = 1; norm <= 256 && !found; ++norm)
        visit(0, norm);
    if (!found)
        throw std::logic_error("no positive vector in the kernel lattice; polytope not compact?");
    return *found;
}

bool is_cpn(const ToricData& T) { return T.k0.empty(); }

std::vector<IntVector> k0_in_ambient(const ToricData& T) {
    std::vector<IntVector> out;
    for (const auto& v : T.k0.vectors)
        out.push_back(T.iota_of(v));
    return out;
}

}  // namespace prequant
