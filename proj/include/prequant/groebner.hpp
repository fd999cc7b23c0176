#pragma once

#include "prequant/rational.hpp"

#include <vector>

namespace prequant {

using Mono = std::vector<int>;

struct Term {
    Mono mono;
    Rational coeff;
};

// Graded reverse lex, optionally preceded by an elimination block on the first `eliminate` variables.
class MonomialOrder {
public:
    explicit MonomialOrder(std::size_t eliminate = 0) : eliminate_(eliminate) {}
    int compare(const Mono& a, const Mono& b) const;
    bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }
    std::size_t eliminated() const { return eliminate_; }

private:
    std::size_t eliminate_;
};

// Terms strictly decreasing in the order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& order);
    static Polynomial monomial(Mono m, Rational c = 1) { return Polynomial({Term{std::move(m), std::move(c)}}); }

    bool is_zero() const { return terms_.empty(); }
    const Term& lead() const { return terms_.front(); }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const;
    void make_monic();
    bool is_monomial() const { return terms_.size() == 1; }

    // this + c * m * other, all in the same order
    Polynomial add_multiple(const Rational& c, const Mono& m, const Polynomial& other, const MonomialOrder& order) const;

private:
    explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
    std::vector<Term> terms_;
};

bool divides(const Mono& a, const Mono& b);
Mono lcm(const Mono& a, const Mono& b);
int total_degree(const Mono& m);

class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> polys) : order_(order), polys_(std::move(polys)) {}
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    Polynomial reduce(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    bool is_unit() const;

private:
    MonomialOrder order_;
    std::vector<Polynomial> polys_;
};

// Reduced Groebner basis by Buchberger's algorithm with the product and chain criteria.
GroebnerBasis groebner_basis(std::vector<Polynomial> generators, const MonomialOrder& order);

}  // namespace prequant
