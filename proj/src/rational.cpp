#include "prequant/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace prequant {

namespace {

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    text = trim(text);
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    if (!is_digits(body))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    std::string normalized(text.front() == '+' ? text.substr(1) : text);
    return Integer(normalized, 10);
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.find_first_of(".eE") != std::string_view::npos)
        throw std::invalid_argument("floating-point literal rejected, use p/q: '" + std::string(text) + "'");
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    std::string_view den_text = trim(text.substr(slash + 1));
    if (!is_digits(den_text))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer num = parse_integer(text.substr(0, slash));
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer floor(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer gcd(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& v : values)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

RatVector parse_rational_list(std::string_view text) {
    RatVector out;
    text = trim(text);
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

IntVector parse_integer_list(std::string_view text) {
    IntVector out;
    for (const auto& r : parse_rational_list(text)) {
        if (!is_integral(r))
            throw std::invalid_argument("expected integers: '" + std::string(text) + "'");
        out.push_back(r.get_num());
    }
    return out;
}

std::string join(std::span<const Rational> values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(values[i]);
    }
    return out;
}

std::string join(std::span<const Integer> values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += to_string(values[i]);
    }
    return out;
}

std::string join(std::span<const int> values, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

RatVector to_rational(std::span<const Integer> values) {
    return RatVector(values.begin(), values.end());
}

std::optional<IntVector> to_integral(std::span<const Rational> values) {
    IntVector out;
    out.reserve(values.size());
    for (const auto& v : values) {
        if (!is_integral(v))
            return std::nullopt;
        out.push_back(v.get_num());
    }
    return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace prequant
