#pragma once

#include "prequant/monomial_module.hpp"

namespace prequant {

constexpr int kNullstellensatzCap = 64;

struct BoundingData {
    Rational nu, c_minus, c_plus;
    Rational r_minus, r_plus;
    MonomialModule J0_minus, J0_plus;
    std::size_t inclusions_checked = 0;  // generators of J0_plus confirmed in J0_minus
};

// r_pm = nu + c_pm; requires c_minus < c_plus and a monotone rational T.
BoundingData bounding_modules(const ToricData& T, const Rational& nu, const Rational& c_minus,
                              const Rational& c_plus, int W = 4);

Rational min_degree_bound(const Rational& r, const Integer& N_M);

// smallest m_i with u_i^{m_i} in (C[u] cap J_r) + I0
IntVector nullstellensatz_exponents(const ToricData& T, const Rational& r, int W = 4, int cap = kNullstellensatzCap);

struct MinimalDegreeWitness {
    Rational nu;
    IntVector shift;         // t*b, with (nu + p(t b)) N_M >= 1
    Rational shifted_level;  // nu + p(t b)
    IntVector nullstellensatz;
    int degree_cap = 0;
    Mono a;                  // u^a is the witness for the shifted module
    LaurentPoly q;           // u^{a - iota(t b)}
    RestrictedElement restricted;
    std::vector<Verdict> verdicts;  // q, u_1 q, ..., u_n q against J*_{K0}(nu), brute backend
};

MinimalDegreeWitness find_minimal_degree_element(const ToricData& T, const Rational& nu, int W = 4);

struct BoundCertificate {
    Integer N_M;
    MinimalDegreeWitness witness;  // at nu = 1/2
    IntVector period;              // b, with c(b) = N_M p(b)
    Rational period_level;         // p(b)
    Integer period_degree;         // 2 c(b)
};

BoundCertificate translated_point_bound(const ToricData& T);

// Monomials u^e, e in [-box, box]^n, of total degree < r N_M that are members of J0_r (should be none).
std::vector<Mono> degree_floor_violations(const ToricData& T, const Rational& r, int W = 4, int box = 2);

// shared hypothesis checks, each throwing HypothesisError with the hypothesis named
void require_not_cpn(const ToricData& T);
void require_rational(const ToricData& T);
Integer require_monotone(const ToricData& T);

}  // namespace prequant
