#include "prequant/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prequant {

namespace {

int grevlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    return 0;
}

Mono quotient(const Mono& a, const Mono& b) {
    Mono q(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        q[i] = a[i] - b[i];
    return q;
}

bool coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

}  // namespace

int MonomialOrder::compare(const Mono& a, const Mono& b) const {
    if (eliminate_ > 0)
        if (int c = grevlex(a, b, 0, eliminate_))
            return c;
    return grevlex(a, b, eliminate_, a.size());
}

bool divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Mono lcm(const Mono& a, const Mono& b) {
    Mono l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        l[i] = std::max(a[i], b[i]);
    return l;
}

int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& x, const Term& y) { return order.greater(x.mono, y.mono); });
    std::vector<Term> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (merged.back().coeff == 0)
            merged.pop_back();
    }
    return Polynomial(std::move(merged));
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, total_degree(t.mono));
    return d;
}

void Polynomial::make_monic() {
    if (terms_.empty() || terms_.front().coeff == 1)
        return;
    Rational inv = 1 / terms_.front().coeff;
    for (auto& t : terms_)
        t.coeff *= inv;
}

Polynomial Polynomial::add_multiple(const Rational& c, const Mono& m, const Polynomial& other,
                                    const MonomialOrder& order) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto it = terms_.begin();
    Mono shifted(m.size());
    for (const auto& t : other.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i)
            shifted[i] = t.mono[i] + m[i];
        while (it != terms_.end() && order.greater(it->mono, shifted))
            out.push_back(*it++);
        Rational v = c * t.coeff;
        if (it != terms_.end() && it->mono == shifted) {
            v += it->coeff;
            ++it;
        }
        if (v != 0)
            out.push_back(Term{shifted, std::move(v)});
    }
    out.insert(out.end(), it, terms_.end());
    return Polynomial(std::move(out));
}

namespace {

Polynomial reduce_by(const std::vector<Polynomial>& polys_, const Polynomial& p, const MonomialOrder& order_) {
    std::vector<Term> remainder;
    Polynomial work = p;
    while (!work.is_zero()) {
        const Term& lt = work.lead();
        const Polynomial* divisor = nullptr;
        for (const auto& g : polys_)
            if (divides(g.lead().mono, lt.mono)) {
                divisor = &g;
                break;
            }
        if (divisor) {
            Rational f = -lt.coeff / divisor->lead().coeff;
            Mono m = quotient(lt.mono, divisor->lead().mono);
            work = work.add_multiple(f, m, *divisor, order_);
        } else {
            remainder.push_back(lt);
            Mono zero(lt.mono.size());
            work = work.add_multiple(-1, zero, Polynomial::monomial(lt.mono, lt.coeff), order_);
        }
    }
    return Polynomial::from_terms(std::move(remainder), order_);
}

}  // namespace

Polynomial GroebnerBasis::reduce(const Polynomial& p) const { return reduce_by(polys_, p, order_); }

bool GroebnerBasis::is_unit() const {
    for (const auto& g : polys_)
        if (!g.is_zero() && total_degree(g.lead().mono) == 0)
            return true;
    return false;
}

GroebnerBasis groebner_basis(std::vector<Polynomial> generators, const MonomialOrder& order) {
    std::vector<Polynomial> G;
    for (auto& g : generators)
        if (!g.is_zero()) {
            g.make_monic();
            G.push_back(std::move(g));
        }
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pending.insert({i, j});

    auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

    while (!pending.empty()) {
        // normal strategy: smallest lcm first
        auto best = pending.begin();
        Mono best_lcm = lcm(G[best->first].lead().mono, G[best->second].lead().mono);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Mono l = lcm(G[it->first].lead().mono, G[it->second].lead().mono);
            if (order.greater(best_lcm, l)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        const Polynomial& f = G[i];
        const Polynomial& g = G[j];
        if (coprime(f.lead().mono, g.lead().mono))
            continue;
        if (f.is_monomial() && g.is_monomial())
            continue;
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k)
            chain = k != i && k != j && divides(G[k].lead().mono, best_lcm) && !is_pending(i, k) && !is_pending(j, k);
        if (chain)
            continue;
        Polynomial s = Polynomial().add_multiple(1 / f.lead().coeff, quotient(best_lcm, f.lead().mono), f, order);
        s = s.add_multiple(-1 / g.lead().coeff, quotient(best_lcm, g.lead().mono), g, order);
        Polynomial r = reduce_by(G, s, order);
        if (r.is_zero())
            continue;
        r.make_monic();
        if (total_degree(r.lead().mono) == 0)
            return GroebnerBasis(order, {r});
        G.push_back(std::move(r));
        for (std::size_t k = 0; k + 1 < G.size(); ++k)
            pending.insert({k, G.size() - 1});
    }

    // minimal basis, then tail-reduce
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < G.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < G.size() && !redundant; ++b) {
            if (a == b || !divides(G[b].lead().mono, G[a].lead().mono))
                continue;
            redundant = G[b].lead().mono != G[a].lead().mono || b < a;
        }
        if (!redundant)
            minimal.push_back(G[a]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        std::vector<Polynomial> others;
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a)
                others.push_back(minimal[b]);
        Polynomial tail = reduce_by(others, minimal[a], order);
        tail.make_monic();
        reduced.push_back(std::move(tail));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& x, const Polynomial& y) { return order.greater(y.lead().mono, x.lead().mono); });
    return GroebnerBasis(order, std::move(reduced));
}

}  // namespace prequant
