#include "prequant/monomial_module.hpp"

#include "prequant/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace prequant {

std::string to_string(TargetRing t) {
    switch (t) {
    case TargetRing::R:
        return "R";
    case TargetRing::R0:
        return "R0";
    case TargetRing::ZeroRing:
        return "ZeroRing";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::member:
        return "member";
    case Verdict::non_member:
        return "non_member";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<IntVector> box_points(const IntVector& center, int W) {
    const std::size_t k = center.size();
    std::vector<IntVector> out;
    IntVector m(k);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            out.push_back(m);
            return;
        }
        for (long v = -W; v <= W; ++v) {
            m[i] = center[i] + v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<IntVector> MonomialModule::lattice_points() const {
    std::vector<IntVector> out;
    for (auto& m : box_points(center, window))
        if (!threshold || toric->p_of(m) >= *threshold)
            out.push_back(std::move(m));
    return out;
}

std::vector<Mono> MonomialModule::generators() const {
    std::vector<Mono> out;
    for (const auto& m : lattice_points())
        out.push_back(to_mono(toric->iota_of(m)));
    return out;
}

MonomialModule MonomialModule::with_window(int W) const {
    MonomialModule M = *this;
    M.window = W;
    return M;
}

std::vector<Mono> module_generators(const ToricData& T, const std::optional<Rational>& r, int W) {
    if (W < 1)
        throw std::invalid_argument("window must be at least 1");
    MonomialModule M;
    M.threshold = r;
    M.toric = std::make_shared<ToricData>(T);
    M.window = W;
    M.center = IntVector(T.k);
    return M.generators();
}

MonomialModule novikov_shift(const MonomialModule& M, const IntVector& m) {
    MonomialModule out = M;
    if (out.threshold)
        *out.threshold += M.toric->p_of(m);
    for (std::size_t i = 0; i < m.size(); ++i)
        out.center[i] += m[i];
    out.degree_shift += 2 * M.toric->c_of(m);
    return out;
}

namespace {

MonomialModule make_kernel(const ToricData& T, const Rational& nu, int W, bool k0) {
    if (!rationality_check(T))
        throw HypothesisError("rational", "p = (" + join(T.p) + ") is not primitive integral");
    if (W < 1)
        throw std::invalid_argument("window must be at least 1");
    MonomialModule M;
    M.threshold = nu;
    M.toric = std::make_shared<ToricData>(T);
    M.window = W;
    M.center = IntVector(T.k);
    M.subspace = k0 ? LinearSubspace::of_K0(T) : LinearSubspace::of_K(T);
    M.target = M.subspace.zero_ring() ? TargetRing::ZeroRing : (k0 ? TargetRing::R0 : TargetRing::R);
    return M;
}

Polynomial to_polynomial(const LaurentPoly& q, const Mono& shift, const MonomialOrder& order) {
    std::vector<Term> terms;
    for (const auto& [e, c] : q.terms()) {
        Mono m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            m[i] = e[i] + shift[i];
            if (m[i] < 0)
                throw std::logic_error("shift does not clear denominators");
        }
        terms.push_back({m, c});
    }
    return Polynomial::from_terms(std::move(terms), order);
}

}  // namespace

MonomialModule kernel_K(const ToricData& T, const Rational& nu, int W) { return make_kernel(T, nu, W, false); }

MonomialModule kernel_K0(const ToricData& T, const Rational& nu, int W) { return make_kernel(T, nu, W, true); }

std::vector<Polynomial> saturated_linear_ideal(const LinearSubspace& V) {
    const std::size_t n = V.ambient();
    MonomialOrder elim(1);
    std::vector<Polynomial> gens;
    for (const auto& y : V.annihilator()) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] == 0)
                continue;
            Mono m(n + 1, 0);
            m[i + 1] = 1;
            terms.push_back({m, Rational(y[i])});
        }
        gens.push_back(Polynomial::from_terms(std::move(terms), elim));
    }
    Mono tu(n + 1, 1);
    gens.push_back(Polynomial::from_terms({{tu, 1}, {Mono(n + 1, 0), -1}}, elim));
    GroebnerBasis gb = groebner_basis(std::move(gens), elim);

    MonomialOrder grevlex;
    std::vector<Polynomial> out;
    for (const auto& g : gb.polys()) {
        bool has_t = false;
        for (const auto& t : g.terms())
            has_t = has_t || t.mono[0] != 0;
        if (has_t)
            continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms())
            terms.push_back({Mono(t.mono.begin() + 1, t.mono.end()), t.coeff});
        out.push_back(Polynomial::from_terms(std::move(terms), grevlex));
    }
    return out;
}

std::vector<Mono> minimal_generators(const std::vector<Mono>& gens, int max_degree) {
    std::vector<Mono> cand;
    for (const auto& g : gens)
        if (total_degree(g) <= max_degree)
            cand.push_back(g);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Mono> out;
    for (std::size_t a = 0; a < cand.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < cand.size() && !dominated; ++b)
            dominated = a != b && divides(cand[b], cand[a]);
        if (!dominated)
            out.push_back(cand[a]);
    }
    return out;
}

GroebnerOracle::GroebnerOracle(MonomialModule M) : module_(std::move(M)) {
    saturated_ = saturated_linear_ideal(module_.subspace);
    generators_ = module_.generators();
    shift_ = Mono(module_.subspace.ambient(), 0);
}

void GroebnerOracle::rebuild(const Mono& floor, int max_degree) {
    std::vector<Mono> gens = minimal_generators(generators_, max_degree);
    Mono shift = floor;
    for (const auto& g : gens)
        for (std::size_t i = 0; i < g.size(); ++i)
            shift[i] = std::max(shift[i], -g[i]);
    MonomialOrder grevlex;
    std::vector<Polynomial> polys = saturated_;
    for (const auto& g : gens) {
        Mono m(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            m[i] = g[i] + shift[i];
        polys.push_back(Polynomial::monomial(m));
    }
    basis_ = groebner_basis(std::move(polys), grevlex);
    shift_ = shift;
    max_degree_ = max_degree;
}

void GroebnerOracle::reserve(const Mono& floor, int max_degree) {
    Mono f = shift_;
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = std::max(f[i], floor[i]);
    rebuild(f, std::max(max_degree_, max_degree));
}

bool GroebnerOracle::contains(const LaurentPoly& q) {
    if (q.is_zero())
        return true;
    Mono need = q.min_exponents();
    bool fits = basis_.has_value() && q.max_degree() <= max_degree_;
    Mono floor = shift_;
    for (std::size_t i = 0; i < need.size(); ++i) {
        if (-need[i] > shift_[i])
            fits = false;
        floor[i] = std::max(floor[i], -need[i]);
    }
    if (!fits)
        rebuild(floor, std::max(max_degree_, q.max_degree()));
    return basis_->contains(to_polynomial(q, shift_, basis_->order()));
}

bool groebner_membership(const LaurentPoly& q, const MonomialModule& M) { return GroebnerOracle(M).contains(q); }

bool brute_membership(const LaurentPoly& q, const MonomialModule& M, int degree_bound) {
    const LinearSubspace& V = M.subspace;
    if (V.zero_ring())
        return true;
    const std::size_t n = V.ambient(), k = V.dim();
    std::vector<LaurentPoly> ell;
    for (std::size_t i = 0; i < n; ++i)
        ell.push_back(linear_form(V.form(i)));
    std::vector<std::vector<LaurentPoly>> powers(n, {LaurentPoly::constant(k, 1)});
    auto ell_power = [&](const Mono& a) {
        LaurentPoly r = LaurentPoly::constant(k, 1);
        for (std::size_t i = 0; i < n; ++i) {
            while (powers[i].size() <= static_cast<std::size_t>(a[i]))
                powers[i].push_back(powers[i].back() * ell[i]);
            if (a[i] > 0)
                r = r * powers[i][a[i]];
        }
        return r;
    };
    auto monomials_of_degree = [&](int deg) {
        std::vector<Mono> out;
        Mono m(k, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 == k) {
                m[i] = left;
                out.push_back(m);
                return;
            }
            for (int v = left; v >= 0; --v) {
                m[i] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, deg);
        return out;
    };

    const std::vector<Mono> all_gens = M.generators();
    for (const auto& [d, qd] : q.homogeneous_components()) {
        std::vector<Mono> gens;
        for (const auto& g : all_gens) {
            int gap = d - total_degree(g);
            if (gap >= 0 && gap <= degree_bound)
                gens.push_back(g);
        }
        Mono E(n, 0);
        Mono low = qd.min_exponents();
        for (std::size_t i = 0; i < n; ++i) {
            E[i] = std::max(0, -low[i]);
            for (const auto& g : gens)
                E[i] = std::max(E[i], -g[i]);
        }
        // l^E q_d as a polynomial in w
        LaurentPoly target(k);
        for (const auto& [e, c] : qd.terms()) {
            Mono a(n);
            for (std::size_t i = 0; i < n; ++i)
                a[i] = e[i] + E[i];
            target = target + ell_power(a) * c;
        }
        if (target.is_zero())
            continue;

        // echelon form of the span of l^{E+g} w^b, deg w^b = d - |g|
        using Vec = std::map<Mono, Rational>;
        std::vector<std::pair<Mono, Vec>> echelon;
        auto reduce = [&](Vec v) {
            for (const auto& [pivot, row] : echelon) {
                auto it = v.find(pivot);
                if (it == v.end())
                    continue;
                Rational f = it->second;
                for (const auto& [m, x] : row) {
                    auto [jt, inserted] = v.emplace(m, -f * x);
                    if (!inserted) {
                        jt->second -= f * x;
                        if (jt->second == 0)
                            v.erase(jt);
                    }
                }
            }
            return v;
        };
        for (const auto& g : gens) {
            Mono a(n);
            for (std::size_t i = 0; i < n; ++i)
                a[i] = g[i] + E[i];
            LaurentPoly base = ell_power(a);
            for (const auto& b : monomials_of_degree(d - total_degree(g))) {
                Vec v;
                LaurentPoly column = base.shifted(b);
                for (const auto& [e, c] : column.terms())
                    v.emplace(e, c);
                v = reduce(std::move(v));
                if (v.empty())
                    continue;
                Mono pivot = v.rbegin()->first;
                Rational inv = 1 / v.rbegin()->second;
                for (auto& [m, x] : v)
                    x *= inv;
                echelon.emplace_back(pivot, std::move(v));
            }
        }
        Vec t;
        for (const auto& [e, c] : target.terms())
            t.emplace(e, c);
        if (!reduce(std::move(t)).empty())
            return false;
    }
    return true;
}

bool membership_at_window(const LaurentPoly& q, const MonomialModule& M, Backend backend, int degree_bound) {
    return backend == Backend::groebner ? groebner_membership(q, M) : brute_membership(q, M, degree_bound);
}

Verdict membership(const LaurentPoly& q, const MonomialModule& M, Backend backend, int degree_bound) {
    const int cap = std::max(kWindowCap, M.window + 2);
    int W = M.window;
    bool prev = membership_at_window(q, M, backend, degree_bound);
    while (W + 2 <= cap) {
        W += 2;
        bool cur = membership_at_window(q, M.with_window(W), backend, degree_bound);
        if (cur == prev)
            return cur ? Verdict::member : Verdict::non_member;
        prev = cur;
    }
    return Verdict::inconclusive;
}

}  // namespace prequant
