#include "prequant/spectrum_oracle.hpp"

#include "prequant/errors.hpp"
#include "prequant/linear_feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prequant {

namespace {

bool contains_all(const Support& big, const Support& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// largest g with every value an integer multiple of g
Rational rational_gcd(const RatVector& values) {
    Integer L = 1;
    for (const auto& v : values)
        L = lcm(L, v.get_den());
    IntVector scaled;
    for (const auto& v : values)
        scaled.push_back(Rational(v * Rational(L)).get_num());
    Rational g(gcd(scaled), L);
    g.canonicalize();
    return g;
}

Rational mod(const Rational& x, const Rational& m) {
    if (m == 0)
        return x;
    return x - Rational(floor(x / m)) * m;
}

}  // namespace

Rational Progression::residue() const { return mod(base, step); }

std::vector<Support> feasible_supports(const ToricData& T) {
    const std::size_t n = T.n;
    std::vector<Support> candidates;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        Support S;
        for (std::size_t j = 0; j < n; ++j)
            if (mask >> j & 1)
                S.push_back(j);
        candidates.push_back(S);
    }
    std::sort(candidates.begin(), candidates.end(), [](const Support& a, const Support& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::vector<Support> out;
    for (const auto& S : candidates) {
        bool dominated = false;
        for (const auto& s : out)
            dominated = dominated || contains_all(S, s);
        if (dominated)
            continue;
        LinearSystem sys;
        sys.variables = S.size();
        for (std::size_t a = 0; a < S.size(); ++a) {
            RatVector e(S.size());
            e[a] = 1;
            sys.add_ge(e, 0);
        }
        for (std::size_t i = 0; i < T.k; ++i) {
            RatVector row;
            for (std::size_t j : S)
                row.push_back(Rational(T.iota(j, i)));
            sys.add_eq(row, T.p[i]);
        }
        if (is_feasible(sys))
            out.push_back(S);
    }
    return out;
}

std::optional<Progression> support_progression(const ToricData& T, const DiagonalMap& D, const Support& S) {
    if (D.mu.size() != T.n)
        throw std::invalid_argument("mu must have " + std::to_string(T.n) + " entries");
    const std::size_t k = T.k, s = S.size();
    IntMatrix A(s, k);
    RatVector c(s);
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t i = 0; i < k; ++i)
            A(a, i) = T.iota(S[a], i);
        c[a] = (D.twisted ? Rational(1, 2) : Rational(0)) - D.mu[S[a]];
    }
    // U A V = D: A lambda = c + z  <=>  D y = U c + z', lambda = V y
    SmithForm F = smith_normal_form(A);
    RatVector Uc(s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = 0; b < s; ++b)
            Uc[a] += Rational(F.U(a, b)) * c[b];
    for (std::size_t a = F.rank; a < s; ++a)
        if (!is_integral(Uc[a]))
            return std::nullopt;

    RatVector y(k);
    for (std::size_t i = 0; i < F.rank; ++i)
        y[i] = Uc[i] / Rational(F.D(i, i));
    Progression P;
    P.support = S;
    P.lambda.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            P.lambda[i] += Rational(F.V(i, j)) * y[j];

    // p . V y: the free directions y_i (i >= rank) must not move s
    RatVector pv(k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            pv[j] += T.p[i] * Rational(F.V(i, j));
    for (std::size_t j = F.rank; j < k; ++j)
        if (pv[j] != 0)
            throw std::logic_error("support does not pin down the level: p is not in the row space");
    RatVector pi;
    for (std::size_t j = 0; j < F.rank; ++j)
        pi.push_back(pv[j] / Rational(F.D(j, j)));
    P.base = -T.p_of(P.lambda);
    P.step = pi.empty() ? Rational(0) : rational_gcd(pi);
    return P;
}

std::vector<Progression> spectrum_progressions(const ToricData& T, const DiagonalMap& D) {
    if (!rationality_check(T))
        throw HypothesisError("rational", "p = (" + join(T.p) + ") is not primitive integral");
    std::vector<Progression> out;
    for (const auto& S : feasible_supports(T))
        if (auto P = support_progression(T, D, S))
            out.push_back(std::move(*P));
    return out;
}

namespace {

std::vector<SpectrumValue> values_in(const std::vector<Progression>& progs, const Rational& lo, const Rational& hi) {
    std::map<Rational, std::vector<Support>> acc;
    for (const auto& P : progs) {
        if (P.step == 0) {
            if (lo <= P.base && P.base <= hi)
                acc[P.base].push_back(P.support);
            continue;
        }
        Integer first = ceil((lo - P.base) / P.step), last = floor((hi - P.base) / P.step);
        for (Integer t = first; t <= last; ++t)
            acc[P.base + Rational(t) * P.step].push_back(P.support);
    }
    std::vector<SpectrumValue> out;
    for (auto& [s, sup] : acc) {
        std::sort(sup.begin(), sup.end());
        out.push_back({s, std::move(sup)});
    }
    return out;
}

}  // namespace

SpectrumReport spectrum(const ToricData& T, const DiagonalMap& D, const Rational& lo, const Rational& hi) {
    if (hi < lo)
        throw std::invalid_argument("empty window " + to_string(lo) + ":" + to_string(hi));
    SpectrumReport R;
    R.lo = lo;
    R.hi = hi;
    R.progressions = spectrum_progressions(T, D);
    R.values = values_in(R.progressions, lo, hi);
    auto shifted = values_in(R.progressions, lo + 1, hi + 1);
    for (auto& v : shifted)
        v.s -= 1;
    R.period_check = shifted == R.values;
    return R;
}

PeriodCount count_in_period(const ToricData& T, const DiagonalMap& D, const Rational& nu) {
    PeriodCount C;
    C.nu = nu;
    for (const auto& v : values_in(spectrum_progressions(T, D), nu, nu + 1))
        if (v.s < nu + 1)
            C.values.push_back(v.s);
    C.boundary = !C.values.empty() && C.values.front() == nu;
    return C;
}

}  // namespace prequant
