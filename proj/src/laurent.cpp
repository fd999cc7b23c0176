#include "prequant/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace prequant {

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

LaurentPoly LaurentPoly::monomial(Mono exponent, Rational coeff) {
    LaurentPoly p(exponent.size());
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, Rational c) { return monomial(Mono(nvars, 0), std::move(c)); }

void LaurentPoly::add_term(const Mono& exponent, const Rational& coeff) {
    if (exponent.size() != nvars_)
        throw std::invalid_argument("exponent length mismatch");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o * Rational(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("variable count mismatch");
    LaurentPoly r(nvars_);
    Mono e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(nvars_);
    if (c == 0)
        return r;
    for (const auto& [e, x] : terms_)
        r.terms_.emplace(e, x * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Mono& s) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Mono f = e;
        for (std::size_t i = 0; i < nvars_; ++i)
            f[i] += s[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

int LaurentPoly::min_degree() const {
    int d = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_)
        d = std::min(d, total_degree(e));
    return d;
}

int LaurentPoly::max_degree() const {
    int d = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

Mono LaurentPoly::min_exponents() const {
    Mono m(nvars_, std::numeric_limits<int>::max());
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            m[i] = std::min(m[i], e[i]);
    if (terms_.empty())
        std::fill(m.begin(), m.end(), 0);
    return m;
}

std::map<int, LaurentPoly> LaurentPoly::homogeneous_components() const {
    std::map<int, LaurentPoly> out;
    for (const auto& [e, c] : terms_)
        out.try_emplace(total_degree(e), nvars_).first->second.add_term(e, c);
    return out;
}

std::string LaurentPoly::to_string(std::string_view var) const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += std::string(var) + std::to_string(i + 1);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += prequant::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += prequant::to_string(mag) + "*" + mono;
    }
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, std::size_t nvars, std::string_view var) : s_(text), n_(nvars), var_(var) {}

    LaurentPoly parse() {
        LaurentPoly p(n_);
        skip();
        if (pos_ == s_.size())
            throw error("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            Rational coeff = 1;
            Mono e(n_, 0);
            bool any = false;
            while (true) {
                skip();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    coeff *= number();
                } else if (s_.substr(pos_, var_.size()) == var_) {
                    pos_ += var_.size();
                    std::size_t idx = static_cast<std::size_t>(integer(false));
                    if (idx < 1 || idx > n_)
                        throw error("variable index out of range");
                    int power = 1;
                    skip();
                    if (pos_ < s_.size() && s_[pos_] == '^') {
                        ++pos_;
                        power = static_cast<int>(integer(true));
                    }
                    e[idx - 1] += power;
                } else {
                    throw error("expected a coefficient or a variable");
                }
                any = true;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    ++pos_;
                    continue;
                }
                break;
            }
            if (!any)
                throw error("empty term");
            p.add_term(e, coeff * sign);
            skip();
        }
        return p;
    }

private:
    std::invalid_argument error(const std::string& msg) const {
        return std::invalid_argument("cannot parse '" + std::string(s_) + "': " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    long integer(bool allow_sign) {
        skip();
        std::size_t start = pos_;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        Integer v = parse_integer(s_.substr(start, pos_ - start));
        if (!v.fits_sint_p())
            throw error("integer too large");
        return v.get_si();
    }
    Rational number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
            ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
            throw error("floating-point coefficients are not accepted");
        return parse_rational(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t n_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars, std::string_view var) {
    return TermParser(text, nvars, var).parse();
}

LaurentPoly parse_query(std::string_view text, std::size_t nvars) {
    if (text.find('u') != std::string_view::npos)
        return parse_laurent(text, nvars);
    IntVector v = parse_integer_list(text);
    if (v.size() != nvars)
        throw std::invalid_argument("exponent vector must have " + std::to_string(nvars) + " entries");
    return LaurentPoly::monomial(to_mono(v));
}

Mono to_mono(const IntVector& v) {
    Mono m;
    for (const auto& x : v) {
        if (!x.fits_sint_p())
            throw std::overflow_error("exponent too large");
        m.push_back(static_cast<int>(x.get_si()));
    }
    return m;
}

IntVector to_int_vector(const Mono& m) {
    IntVector v;
    for (int x : m)
        v.emplace_back(x);
    return v;
}

}  // namespace prequant
