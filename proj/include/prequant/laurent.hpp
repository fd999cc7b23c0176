#pragma once

#include "prequant/groebner.hpp"

#include <map>
#include <string>
#include <string_view>

namespace prequant {

// total degree first, then lexicographic
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

class LaurentPoly {
public:
    using TermMap = std::map<Mono, Rational, GradedLexLess>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}
    static LaurentPoly monomial(Mono exponent, Rational coeff = 1);
    static LaurentPoly constant(std::size_t nvars, Rational c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Mono& exponent, const Rational& coeff);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // multiplication by u^e
    LaurentPoly shifted(const Mono& e) const;

    int min_degree() const;
    int max_degree() const;
    // componentwise minimum of the exponents
    Mono min_exponents() const;
    std::map<int, LaurentPoly> homogeneous_components() const;

    std::string to_string(std::string_view var = "u") const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

// "3/2*u1^2*u3^-1 - u2 + 4"; variables are var1..varN.
LaurentPoly parse_laurent(std::string_view text, std::size_t nvars, std::string_view var = "u");

// A comma-separated exponent vector or a polynomial expression.
LaurentPoly parse_query(std::string_view text, std::size_t nvars);

Mono to_mono(const IntVector& v);
IntVector to_int_vector(const Mono& m);

}  // namespace prequant
