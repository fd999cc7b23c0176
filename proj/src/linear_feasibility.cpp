#include "prequant/linear_feasibility.hpp"

#include <map>
#include <stdexcept>

namespace prequant {

namespace {

struct Row {
    RatVector a;
    Rational b;  // a.x >= b
};

Rational dot(const RatVector& a, const RatVector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

bool all_zero(const RatVector& a) {
    for (const auto& x : a)
        if (x != 0)
            return false;
    return true;
}

// Scale so the first nonzero coefficient has absolute value one, then drop duplicates
// keeping the tightest right-hand side. Returns false on a contradiction 0 >= positive.
bool normalize(std::vector<Row>& rows) {
    std::map<RatVector, Rational> best;
    for (auto& r : rows) {
        std::size_t i = 0;
        while (i < r.a.size() && r.a[i] == 0)
            ++i;
        if (i == r.a.size()) {
            if (r.b > 0)
                return false;
            continue;
        }
        Rational s = abs(r.a[i]);
        for (auto& x : r.a)
            x /= s;
        r.b /= s;
        auto [it, inserted] = best.emplace(r.a, r.b);
        if (!inserted && it->second < r.b)
            it->second = r.b;
    }
    rows.clear();
    for (auto& [a, b] : best)
        rows.push_back({a, b});
    return true;
}

}  // namespace

void LinearSystem::add_ge(RatVector coeffs, Rational rhs) {
    constraints.push_back({std::move(coeffs), std::move(rhs), Relation::greater_equal});
}

void LinearSystem::add_eq(RatVector coeffs, Rational rhs) {
    constraints.push_back({std::move(coeffs), std::move(rhs), Relation::equal});
}

std::optional<RatVector> feasible_point(const LinearSystem& system) {
    const std::size_t n = system.variables;
    std::vector<Row> eqs, rows;
    for (const auto& c : system.constraints) {
        if (c.coeffs.size() != n)
            throw std::invalid_argument("constraint length does not match variable count");
        (c.relation == Relation::equal ? eqs : rows).push_back({c.coeffs, c.rhs});
    }

    // x_v = (b - sum_{i != v} a_i x_i) / a_v, recorded for back substitution
    struct Substitution {
        std::size_t var;
        Row eq;
    };
    std::vector<Substitution> subs;
    std::vector<bool> substituted(n, false);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        Row eq = eqs[e];
        std::size_t v = 0;
        while (v < n && eq.a[v] == 0)
            ++v;
        if (v == n) {
            if (eq.b != 0)
                return std::nullopt;
            continue;
        }
        auto eliminate = [&](Row& r) {
            if (r.a[v] == 0)
                return;
            Rational f = r.a[v] / eq.a[v];
            for (std::size_t i = 0; i < n; ++i)
                r.a[i] -= f * eq.a[i];
            r.b -= f * eq.b;
        };
        for (std::size_t later = e + 1; later < eqs.size(); ++later)
            eliminate(eqs[later]);
        for (auto& r : rows)
            eliminate(r);
        subs.push_back({v, eq});
        substituted[v] = true;
    }

    // Fourier-Motzkin over the remaining variables; stages[v] holds the rows before v is eliminated.
    if (!normalize(rows))
        return std::nullopt;
    std::vector<std::vector<Row>> stages(n);
    for (std::size_t v = 0; v < n; ++v) {
        stages[v] = rows;
        if (substituted[v])
            continue;
        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            if (r.a[v] > 0)
                pos.push_back(r);
            else if (r.a[v] < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                Rational fp = -q.a[v], fq = p.a[v];
                Row c{RatVector(n), fp * p.b + fq * q.b};
                for (std::size_t i = 0; i < n; ++i)
                    c.a[i] = fp * p.a[i] + fq * q.a[i];
                c.a[v] = 0;
                next.push_back(std::move(c));
            }
        rows = std::move(next);
        if (!normalize(rows))
            return std::nullopt;
    }
    for (const auto& r : rows)
        if (!all_zero(r.a) || r.b > 0)
            return std::nullopt;

    RatVector x(n);
    for (std::size_t v = n; v-- > 0;) {
        if (substituted[v])
            continue;
        std::optional<Rational> lo, hi;
        for (const auto& r : stages[v]) {
            if (r.a[v] == 0)
                continue;
            Rational rest = 0;
            for (std::size_t i = v + 1; i < n; ++i)
                rest += r.a[i] * x[i];
            Rational bound = (r.b - rest) / r.a[v];
            if (r.a[v] > 0) {
                if (!lo || bound > *lo)
                    lo = bound;
            } else if (!hi || bound < *hi) {
                hi = bound;
            }
        }
        x[v] = lo ? *lo : (hi ? *hi : Rational(0));
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        const Row& eq = it->eq;
        Rational rest = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != it->var)
                rest += eq.a[i] * x[i];
        x[it->var] = (eq.b - rest) / eq.a[it->var];
    }
    if (!satisfies(system, x))
        throw std::logic_error("Fourier-Motzkin back substitution produced an infeasible point: " + join(x));
    return x;
}

bool satisfies(const LinearSystem& system, const RatVector& x) {
    for (const auto& c : system.constraints) {
        Rational v = dot(c.coeffs, x);
        if (c.relation == Relation::equal ? v != c.rhs : v < c.rhs)
            return false;
    }
    return true;
}

std::optional<RatVector> solve_square(std::vector<RatVector> A, RatVector b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && A[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c] == 0)
                continue;
            Rational f = A[r][c] / A[c][c];
            for (std::size_t j = c; j < n; ++j)
                A[r][j] -= f * A[c][j];
            b[r] -= f * b[c];
        }
    }
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace prequant
