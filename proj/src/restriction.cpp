#include "prequant/restriction.hpp"

#include <stdexcept>

namespace prequant {

LinearSubspace::LinearSubspace(std::size_t ambient, std::vector<IntVector> columns)
    : ambient_(ambient), columns_(std::move(columns)) {
    for (const auto& c : columns_)
        if (c.size() != ambient_)
            throw std::invalid_argument("subspace basis vector has wrong length");
    if (!columns_.empty() && IntMatrix::from_columns(columns_, ambient_).rank() != columns_.size())
        throw std::invalid_argument("subspace basis is not independent");
}

LinearSubspace LinearSubspace::of_K(const ToricData& T) { return LinearSubspace(T.n, T.kappa.vectors); }

LinearSubspace LinearSubspace::of_K0(const ToricData& T) { return LinearSubspace(T.n, k0_in_ambient(T)); }

IntVector LinearSubspace::form(std::size_t i) const {
    IntVector f;
    for (const auto& c : columns_)
        f.push_back(c[i]);
    return f;
}

bool LinearSubspace::zero_ring() const {
    if (columns_.empty())
        return true;
    for (std::size_t i = 0; i < ambient_; ++i) {
        bool zero = true;
        for (const auto& c : columns_)
            zero = zero && c[i] == 0;
        if (zero)
            return true;
    }
    return false;
}

std::vector<IntVector> LinearSubspace::annihilator() const {
    if (columns_.empty()) {
        std::vector<IntVector> all;
        for (std::size_t i = 0; i < ambient_; ++i) {
            IntVector e(ambient_);
            e[i] = 1;
            all.push_back(e);
        }
        return all;
    }
    return integer_kernel(IntMatrix::from_columns(columns_, ambient_).transpose()).vectors;
}

LaurentPoly linear_form(const IntVector& f) {
    LaurentPoly p(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Mono e(f.size(), 0);
        e[i] = 1;
        p.add_term(e, Rational(f[i]));
    }
    return p;
}

std::optional<LaurentPoly> divide_by_linear(const LaurentPoly& p, const IntVector& f) {
    const std::size_t n = f.size();
    std::size_t lead = 0;
    while (lead < n && f[lead] == 0)
        ++lead;
    if (lead == n)
        throw std::invalid_argument("division by the zero form");
    // lex division: the leading variable of f is w_lead
    std::map<Mono, Rational, std::greater<Mono>> rest;
    for (const auto& [e, c] : p.terms())
        rest.emplace(e, c);
    LaurentPoly quotient(n);
    while (!rest.empty()) {
        auto [e, c] = *rest.begin();
        if (e[lead] <= 0)
            return std::nullopt;
        Mono qe = e;
        --qe[lead];
        Rational qc = c / Rational(f[lead]);
        quotient.add_term(qe, qc);
        for (std::size_t i = 0; i < n; ++i) {
            if (f[i] == 0)
                continue;
            Mono m = qe;
            ++m[i];
            Rational v = -qc * Rational(f[i]);
            auto [it, inserted] = rest.emplace(m, v);
            if (!inserted) {
                it->second += v;
                if (it->second == 0)
                    rest.erase(it);
            }
        }
    }
    return quotient;
}

namespace {

struct CanonicalForm {
    IntVector form;
    Integer scale;  // l = scale * form
};

CanonicalForm canonical(const IntVector& l) {
    Integer g = gcd(l);
    std::size_t i = 0;
    while (l[i] == 0)
        ++i;
    if (l[i] < 0)
        g = -g;
    IntVector f(l.size());
    for (std::size_t j = 0; j < l.size(); ++j)
        f[j] = l[j] / g;
    return {f, g};
}

LaurentPoly power(const IntVector& f, int e, std::map<std::pair<IntVector, int>, LaurentPoly>& cache) {
    auto key = std::make_pair(f, e);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    LaurentPoly r = e == 0 ? LaurentPoly::constant(f.size(), 1) : power(f, e - 1, cache) * linear_form(f);
    cache.emplace(key, r);
    return r;
}

void cancel(RestrictedElement& r) {
    if (r.numerator.is_zero()) {
        r.denominator.clear();
        return;
    }
    for (auto it = r.denominator.begin(); it != r.denominator.end();) {
        while (it->second > 0) {
            auto q = divide_by_linear(r.numerator, it->first);
            if (!q)
                break;
            r.numerator = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = r.denominator.erase(it);
        else
            ++it;
    }
}

}  // namespace

RestrictedElement restrict(const LaurentPoly& q, const LinearSubspace& V) {
    RestrictedElement out;
    if (V.zero_ring()) {
        out.zero_ring = true;
        return out;
    }
    const std::size_t n = V.ambient(), k = V.dim();
    if (q.nvars() != n)
        throw std::invalid_argument("polynomial lives in the wrong number of variables");
    std::vector<CanonicalForm> forms;
    for (std::size_t i = 0; i < n; ++i)
        forms.push_back(canonical(V.form(i)));

    struct Piece {
        Rational coeff;
        std::map<IntVector, int> exps;
    };
    std::vector<Piece> pieces;
    std::map<IntVector, int> lowest;
    for (const auto& [e, c] : q.terms()) {
        Piece piece{c, {}};
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0)
                continue;
            Integer mag;
            mpz_pow_ui(mag.get_mpz_t(), forms[i].scale.get_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
            piece.coeff *= e[i] > 0 ? Rational(mag) : 1 / Rational(mag);
            piece.exps[forms[i].form] += e[i];
        }
        for (const auto& [f, x] : piece.exps)
            lowest[f] = std::min(lowest[f], x);
        pieces.push_back(std::move(piece));
    }
    for (const auto& [f, x] : lowest)
        if (x < 0)
            out.denominator[f] = -x;

    std::map<std::pair<IntVector, int>, LaurentPoly> cache;
    out.numerator = LaurentPoly(k);
    for (const auto& piece : pieces) {
        LaurentPoly t = LaurentPoly::constant(k, piece.coeff);
        std::map<IntVector, int> exps = piece.exps;
        for (const auto& [f, d] : out.denominator)
            exps[f] += d;
        for (const auto& [f, x] : exps)
            if (x > 0)
                t = t * power(f, x, cache);
        out.numerator = out.numerator + t;
    }
    cancel(out);
    return out;
}

RestrictedElement multiply(const RestrictedElement& a, const RestrictedElement& b) {
    RestrictedElement out;
    if (a.zero_ring || b.zero_ring) {
        out.zero_ring = true;
        return out;
    }
    out.numerator = a.numerator * b.numerator;
    out.denominator = a.denominator;
    for (const auto& [f, x] : b.denominator)
        out.denominator[f] += x;
    cancel(out);
    return out;
}

bool proportional(const RestrictedElement& a, const RestrictedElement& b) {
    if (a.zero_ring || b.zero_ring)
        return a.zero_ring == b.zero_ring;
    if (a.numerator.is_zero() || b.numerator.is_zero())
        return a.numerator.is_zero() && b.numerator.is_zero();
    if (a.denominator != b.denominator || a.numerator.terms().size() != b.numerator.terms().size())
        return false;
    const auto& [ea, ca] = *a.numerator.terms().begin();
    auto it = b.numerator.terms().find(ea);
    if (it == b.numerator.terms().end())
        return false;
    return a.numerator == b.numerator * (ca / it->second);
}

std::string RestrictedElement::to_string() const {
    if (zero_ring)
        return "ZeroRing";
    std::string num = numerator.to_string("w");
    if (denominator.empty())
        return num;
    std::string den;
    for (const auto& [f, e] : denominator) {
        if (!den.empty())
            den += "*";
        den += "(" + linear_form(f).to_string("w") + ")";
        if (e != 1)
            den += "^" + std::to_string(e);
    }
    return "(" + num + ")/(" + den + ")";
}

}  // namespace prequant
