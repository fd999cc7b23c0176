#include "prequant/kernel_modules.hpp"

#include "prequant/errors.hpp"

#include <functional>

namespace prequant {

void require_not_cpn(const ToricData& T) {
    if (is_cpn(T))
        throw HypothesisError("M = CP^n excluded", "k0 = {0}, so R0 is the zero ring");
}

void require_rational(const ToricData& T) {
    if (!rationality_check(T))
        throw HypothesisError("rational", "p = (" + join(T.p) + ") is not primitive integral");
}

Integer require_monotone(const ToricData& T) {
    if (!T.N_M)
        throw HypothesisError("monotone", "c = (" + join(T.chern) + ") is not a positive multiple of p = (" +
                                              join(T.p) + ")");
    return *T.N_M;
}

BoundingData bounding_modules(const ToricData& T, const Rational& nu, const Rational& c_minus,
                              const Rational& c_plus, int W) {
    if (!(c_minus < c_plus))
        throw std::invalid_argument("need c_minus < c_plus, got " + to_string(c_minus) + " and " +
                                    to_string(c_plus));
    require_rational(T);
    require_monotone(T);
    BoundingData B;
    B.nu = nu;
    B.c_minus = c_minus;
    B.c_plus = c_plus;
    B.r_minus = nu + c_minus;
    B.r_plus = nu + c_plus;
    B.J0_minus = kernel_K0(T, B.r_minus, W);
    B.J0_plus = kernel_K0(T, B.r_plus, W);
    GroebnerOracle outer(B.J0_minus);
    for (const auto& g : B.J0_plus.generators()) {
        if (!outer.contains(LaurentPoly::monomial(g)))
            throw std::logic_error("generator of J0_plus outside J0_minus");
        ++B.inclusions_checked;
    }
    return B;
}

Rational min_degree_bound(const Rational& r, const Integer& N_M) { return r * Rational(N_M); }

IntVector nullstellensatz_exponents(const ToricData& T, const Rational& r, int W, int cap) {
    require_not_cpn(T);
    require_rational(T);
    require_monotone(T);
    const std::size_t n = T.n;
    MonomialOrder grevlex;
    std::vector<Polynomial> polys;
    for (const auto& y : LinearSubspace::of_K0(T).annihilator()) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < n; ++i)
            if (y[i] != 0) {
                Mono e(n, 0);
                e[i] = 1;
                terms.push_back({e, Rational(y[i])});
            }
        polys.push_back(Polynomial::from_terms(std::move(terms), grevlex));
    }
    std::vector<Mono> positive;
    for (auto g : module_generators(T, r, W)) {
        for (auto& x : g)
            x = std::max(x, 0);
        positive.push_back(g);
    }
    for (const auto& g : minimal_generators(positive, std::numeric_limits<int>::max()))
        polys.push_back(Polynomial::monomial(g));
    GroebnerBasis gb = groebner_basis(std::move(polys), grevlex);

    IntVector m(n);
    for (std::size_t i = 0; i < n; ++i) {
        int e = 0;
        Mono power(n, 0);
        while (!gb.contains(Polynomial::monomial(power))) {
            if (++e > cap)
                throw Inconclusive("no power u" + std::to_string(i + 1) + "^m with m <= " + std::to_string(cap) +
                                   " lies in the ideal");
            power[i] = e;
        }
        m[i] = e;
    }
    return m;
}

namespace {

// exponent vectors a >= 0 with |a| = d, ascending lex
std::vector<Mono> compositions(std::size_t n, int d) {
    std::vector<Mono> out;
    Mono a(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            a[i] = left;
            out.push_back(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, d);
    return out;
}

Mono unit(std::size_t n, std::size_t i) {
    Mono e(n, 0);
    e[i] = 1;
    return e;
}

}  // namespace

MinimalDegreeWitness find_minimal_degree_element(const ToricData& T, const Rational& nu, int W) {
    require_not_cpn(T);
    require_rational(T);
    const std::size_t n = T.n;
    MonomialModule M = kernel_K0(T, nu, W);
    if (membership(LaurentPoly::constant(n, 1), M, Backend::groebner) == Verdict::member)
        throw NoMinimalElement("1 lies in J*_K0(" + to_string(nu) + "), so the module is the whole ring R0");
    Integer N_M = require_monotone(T);

    MinimalDegreeWitness out;
    out.nu = nu;
    Rational pb = T.p_of(T.b);
    Integer t = 1;
    while ((nu + Rational(t) * pb) * Rational(N_M) < 1)
        ++t;
    for (const auto& x : T.b)
        out.shift.push_back(t * x);
    out.shifted_level = nu + Rational(t) * pb;
    out.nullstellensatz = nullstellensatz_exponents(T, out.shifted_level, W);
    for (const auto& x : out.nullstellensatz)
        out.degree_cap += static_cast<int>(x.get_si());
    out.degree_cap += 2;

    GroebnerOracle oracle(novikov_shift(M, out.shift));
    bool found = false;
    for (int d = 0; d <= out.degree_cap && !found; ++d) {
        for (const auto& a : compositions(n, d)) {
            LaurentPoly ua = LaurentPoly::monomial(a);
            if (oracle.contains(ua))
                continue;
            bool frontier = true;
            for (std::size_t i = 0; i < n && frontier; ++i)
                frontier = oracle.contains(ua.shifted(unit(n, i)));
            if (frontier) {
                out.a = a;
                found = true;
                break;
            }
        }
    }
    if (!found)
        throw Inconclusive("no witness of degree <= " + std::to_string(out.degree_cap));

    Mono e = out.a;
    Mono back = to_mono(T.iota_of(out.shift));
    for (std::size_t i = 0; i < n; ++i)
        e[i] -= back[i];
    out.q = LaurentPoly::monomial(e);
    out.restricted = restrict(out.q, M.subspace);

    out.verdicts.push_back(membership(out.q, M, Backend::brute));
    for (std::size_t i = 0; i < n; ++i)
        out.verdicts.push_back(membership(out.q.shifted(unit(n, i)), M, Backend::brute));
    bool ok = out.verdicts[0] == Verdict::non_member;
    for (std::size_t i = 1; i <= n; ++i)
        ok = ok && out.verdicts[i] == Verdict::member;
    if (!ok)
        throw Inconclusive("bounded-degree backend did not confirm the witness " + out.q.to_string());
    return out;
}

BoundCertificate translated_point_bound(const ToricData& T) {
    require_not_cpn(T);
    require_rational(T);
    BoundCertificate C;
    C.N_M = require_monotone(T);
    C.witness = find_minimal_degree_element(T, Rational(1, 2), 4);
    C.period = T.b;
    C.period_level = T.p_of(T.b);
    C.period_degree = 2 * T.c_of(T.b);
    if (Rational(T.c_of(T.b)) != Rational(C.N_M) * C.period_level)
        throw std::logic_error("c(b) != N_M p(b) for a monotone polytope");
    return C;
}

std::vector<Mono> degree_floor_violations(const ToricData& T, const Rational& r, int W, int box) {
    require_not_cpn(T);
    Integer N_M = require_monotone(T);
    const Rational bound = min_degree_bound(r, N_M);
    const std::size_t n = T.n;
    // largest integer degree strictly below the bound
    Integer top = ceil(bound) - 1;
    std::vector<Mono> bad;
    if (top < -static_cast<long>(n) * box)
        return bad;
    GroebnerOracle oracle(kernel_K0(T, r, W));
    oracle.reserve(Mono(n, box), static_cast<int>(top.get_si()));
    Mono e(n, -box);
    while (true) {
        if (total_degree(e) <= top && oracle.contains(LaurentPoly::monomial(e)))
            bad.push_back(e);
        std::size_t i = n;
        while (i > 0 && e[i - 1] == box)
            e[--i] = -box;
        if (i == 0)
            break;
        ++e[i - 1];
    }
    return bad;
}

}  // namespace prequant
