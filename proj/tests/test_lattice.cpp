#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prequant/lattice.hpp"

#include <random>

using namespace prequant;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

void check_hermite_shape(const HermiteForm& hf) {
    const IntMatrix& H = hf.H;
    std::size_t c = 0;
    for (std::size_t i = 0; i < H.rows() && c < hf.rank; ++i) {
        for (std::size_t j = c + 1; j < H.cols(); ++j)
            CHECK(H(i, j) == 0);
        if (H(i, c) == 0)
            continue;
        CHECK(H(i, c) > 0);
        for (std::size_t l = 0; l < c; ++l) {
            CHECK(H(i, l) >= 0);
            CHECK(H(i, l) < H(i, c));
        }
        ++c;
    }
    for (std::size_t j = hf.rank; j < H.cols(); ++j)
        for (std::size_t i = 0; i < H.rows(); ++i)
            CHECK(H(i, j) == 0);
}

// Is x in the integer span of the basis? The basis is in column HNF, so solve by back substitution on pivots.
bool in_integer_span(const LatticeBasis& b, IntVector x) {
    for (const auto& v : b.vectors) {
        std::size_t piv = 0;
        while (v[piv] == 0)
            ++piv;
        if (x[piv] % v[piv] != 0)
            return false;
        Integer q = x[piv] / v[piv];
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] -= q * v[i];
    }
    for (const auto& e : x)
        if (e != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("hermite normal form examples") {
    IntMatrix m{{2, 4}, {0, 3}};
    auto hf = hermite_normal_form(m);
    CHECK(m * hf.U == hf.H);
    CHECK(abs(hf.U.determinant()) == 1);
    CHECK(hf.H == IntMatrix{{2, 0}, {0, 3}});

    auto id = hermite_normal_form(IntMatrix::identity(3));
    CHECK(id.H == IntMatrix::identity(3));
    CHECK(id.U == IntMatrix::identity(3));

    auto row = hermite_normal_form(IntMatrix{{1, 1}});
    CHECK(row.H == IntMatrix{{1, 0}});
    CHECK(row.U == IntMatrix{{1, -1}, {0, 1}});
    CHECK(row.rank == 1);
}

TEST_CASE("hermite normal form random") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, r, c, 6);
        auto hf = hermite_normal_form(m);
        CHECK(m * hf.U == hf.H);
        CHECK(abs(hf.U.determinant()) == 1);
        CHECK(hf.rank == m.rank());
        check_hermite_shape(hf);
    }
}

TEST_CASE("smith normal form") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, r, c, 8);
        auto sf = smith_normal_form(m);
        CHECK(sf.U * m * sf.V == sf.D);
        CHECK(abs(sf.U.determinant()) == 1);
        CHECK(abs(sf.V.determinant()) == 1);
        CHECK(sf.rank == m.rank());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j)
                    CHECK(sf.D(i, j) == 0);
        auto f = sf.invariant_factors();
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f[i] > 0);
            if (i + 1 < f.size())
                CHECK(f[i + 1] % f[i] == 0);
        }
    }
    // diag(2,3) has invariant factors 1, 6
    auto sf = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(sf.invariant_factors() == iv({1, 6}));
}

TEST_CASE("integer kernel examples") {
    auto k1 = integer_kernel(IntMatrix{{1, -1}});
    REQUIRE(k1.size() == 1);
    CHECK(k1.vectors[0] == iv({1, 1}));

    auto k2 = integer_kernel(IntMatrix{{1, -1, 0, 0}, {0, 0, 1, -1}});
    REQUIRE(k2.size() == 2);
    CHECK(k2.vectors[0] == iv({1, 1, 0, 0}));
    CHECK(k2.vectors[1] == iv({0, 0, 1, 1}));

    CHECK(integer_kernel(IntMatrix::identity(2)).empty());

    auto k3 = integer_kernel(IntMatrix{{1, 0, -1}, {0, 1, -1}});
    REQUIRE(k3.size() == 1);
    CHECK(k3.vectors[0] == iv({1, 1, 1}));
}

TEST_CASE("integer kernel is saturated") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t c = 3;
        std::size_t r = 1 + rng() % 2;
        IntMatrix m = random_matrix(rng, r, c, 3);
        auto k = integer_kernel(m);
        for (const auto& v : k.vectors) {
            for (const auto& e : m * v)
                CHECK(e == 0);
        }
        CHECK(k.size() == c - m.rank());
        // every kernel vector in [-5,5]^3 is an integer combination
        for (int a = -5; a <= 5; ++a)
            for (int b = -5; b <= 5; ++b)
                for (int d = -5; d <= 5; ++d) {
                    IntVector x = iv({a, b, d});
                    bool zero = true;
                    for (const auto& e : m * x)
                        zero = zero && e == 0;
                    if (zero)
                        CHECK(in_integer_span(k, x));
                }
    }
    // a case where the rational kernel has a non-primitive integer generator
    auto k = integer_kernel(IntMatrix{{2, -4}});
    CHECK(k.vectors[0] == iv({2, 1}));
}

TEST_CASE("primitivity and basis extension") {
    CHECK(is_primitive(iv({1, -1})));
    CHECK_FALSE(is_primitive(iv({2, 4})));
    CHECK(is_primitive(iv({3, 5})));
    CHECK_THROWS_AS(is_primitive(iv({0, 0})), std::invalid_argument);

    CHECK(extends_to_lattice_basis({iv({1, 0}), iv({0, 1})}, 2));
    CHECK_FALSE(extends_to_lattice_basis({iv({2, 0})}, 2));
    CHECK(extends_to_lattice_basis({iv({1, 1}), iv({0, 1})}, 2));
    CHECK_FALSE(extends_to_lattice_basis({iv({1, 1}), iv({1, -1})}, 2));
    CHECK(extends_to_lattice_basis({iv({1, 2, 3})}, 3));
}

TEST_CASE("determinant and unimodular inverse") {
    IntMatrix m{{2, 1}, {1, 1}};
    CHECK(m.determinant() == 1);
    CHECK(m * unimodular_inverse(m) == IntMatrix::identity(2));
    CHECK(IntMatrix({{0, 1, 2}, {3, 4, 5}, {6, 7, 9}}).determinant() == -3);
}
