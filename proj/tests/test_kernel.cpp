#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prequant/errors.hpp"
#include "prequant/kernel_modules.hpp"

#include <random>

using namespace prequant;

namespace {

std::string data(const std::string& name) { return std::string(PREQUANT_DATA_DIR) + "/" + name; }

ToricData load(const std::string& name) { return toric_data(load_polytope(data(name))); }

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

template <class F>
std::string hypothesis_of(F&& f) {
    try {
        f();
    } catch (const HypothesisError& e) {
        return e.hypothesis();
    }
    return "";
}

}  // namespace

TEST_CASE("bounding modules") {
    ToricData T = load("cp1xcp1_monotone.poly");
    BoundingData B = bounding_modules(T, q(1, 2), q(-1, 4), q(1, 4));
    CHECK(B.r_minus == q(1, 4));
    CHECK(B.r_plus == q(3, 4));
    CHECK(B.inclusions_checked == B.J0_plus.generators().size());
    CHECK(B.inclusions_checked > 0);
    CHECK_THROWS_AS(bounding_modules(T, q(1, 2), Rational(0), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(bounding_modules(T, q(1, 2), Rational(1), Rational(0)), std::invalid_argument);

    BoundingData C = bounding_modules(load("cp2.poly"), Rational(0), q(-1, 2), q(1, 2));
    CHECK(C.J0_minus.target == TargetRing::ZeroRing);
    CHECK(C.inclusions_checked > 0);

    CHECK(hypothesis_of([] { bounding_modules(load("cp1xcp1_p12.poly"), Rational(0), Rational(-1), Rational(1)); }) ==
          "monotone");

    // sandwich: J0_plus membership implies J0_minus membership on random monomials
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> e(-3, 3);
    GroebnerOracle plus(B.J0_plus), minus(B.J0_minus);
    int inside = 0;
    for (int trial = 0; trial < 60; ++trial) {
        Mono m(4);
        for (auto& x : m)
            x = e(rng);
        LaurentPoly u = LaurentPoly::monomial(m);
        if (plus.contains(u)) {
            ++inside;
            CHECK(minus.contains(u));
        }
    }
    CHECK(inside > 5);
}

TEST_CASE("minimal degree bound") {
    CHECK(min_degree_bound(Rational(1), Integer(2)) == 2);
    ToricData T = load("cp1xcp1_monotone.poly");
    CHECK(min_degree_bound(q(1, 2), *T.N_M) == 1);
    ToricData P = load("cp3.poly");
    REQUIRE(P.N_M);
    CHECK(*P.N_M == 4);
    CHECK(min_degree_bound(Rational(1), *P.N_M) == 4);
    auto gens = module_generators(P, Rational(1), 2);
    REQUIRE(!gens.empty());
    CHECK(gens.front() == Mono{1, 1, 1, 1});
    for (const auto& g : gens)
        CHECK(total_degree(g) >= 4);
    for (const auto& g : module_generators(T, q(1, 2), 3))
        CHECK(total_degree(g) >= 1);
}

TEST_CASE("nullstellensatz exponents") {
    ToricData T = load("cp1xcp1_monotone.poly");
    IntVector m = nullstellensatz_exponents(T, q(1, 2));
    CHECK(m == iv({2, 2, 2, 2}));
    // at level 5/2 the module starts in degree 6
    CHECK(nullstellensatz_exponents(T, q(5, 2)) == iv({6, 6, 6, 6}));

    long total = 0;
    for (const auto& x : m)
        total += x.get_si();
    GroebnerOracle oracle(kernel_K0(T, q(1, 2), 4));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> extra(0, 4);
    std::uniform_int_distribution<int> slot(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Mono a(4, 0);
        int d = static_cast<int>(total) + extra(rng);
        for (int i = 0; i < d; ++i)
            ++a[slot(rng)];
        CHECK(oracle.contains(LaurentPoly::monomial(a)));
    }

    ToricData H = load("hirzebruch1.poly");
    IntVector h = nullstellensatz_exponents(H, Rational(1));
    // the module is saturated, so it may contain lower powers than the polynomial ideal does
    CHECK(h == iv({2, 2, 2, 2}));
    GroebnerOracle o(kernel_K0(H, Rational(1), 4));
    for (std::size_t i = 0; i < h.size(); ++i) {
        Mono up(4, 0);
        up[i] = static_cast<int>(h[i].get_si());
        CHECK(o.contains(LaurentPoly::monomial(up)));
    }
    // u1 -> 2w is hit by the generator u1 u2^-1 u3 -> -4/3 w, which has no polynomial part of degree 1
    CHECK(o.contains(parse_laurent("u1", 4)));

    for (const char* name : {"cp1.poly", "cp2.poly", "cp3.poly"})
        CHECK(hypothesis_of([&] { nullstellensatz_exponents(load(name), Rational(1)); }) == "M = CP^n excluded");
}

TEST_CASE("minimal degree element") {
    ToricData T = load("cp1xcp1_monotone.poly");
    MinimalDegreeWitness w = find_minimal_degree_element(T, q(1, 2));
    CHECK(w.shift == iv({1, 1}));
    CHECK(w.shifted_level == q(5, 2));
    CHECK(w.a == Mono{0, 0, 0, 5});
    CHECK(w.q == LaurentPoly::monomial({-1, -1, -1, 4}));
    LinearSubspace V0 = LinearSubspace::of_K0(T);
    CHECK(proportional(w.restricted, restrict(parse_laurent("u1", 4), V0)));
    REQUIRE(w.verdicts.size() == 5);
    CHECK(w.verdicts[0] == Verdict::non_member);
    for (int i = 1; i <= 4; ++i)
        CHECK(w.verdicts[i] == Verdict::member);

    // u1 itself satisfies the same verdicts
    MonomialModule M = kernel_K0(T, q(1, 2), 4);
    CHECK(membership(parse_laurent("u1", 4), M, Backend::brute) == Verdict::non_member);
    for (const char* s : {"u1^2", "u1*u2", "u1*u3", "u1*u4"})
        CHECK(membership(parse_laurent(s, 4), M, Backend::brute) == Verdict::member);

    // shift invariance: u^{iota(m)} q is a witness at nu + p(m)
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> step(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        IntVector m{step(rng), step(rng)};
        LaurentPoly moved = w.q * LaurentPoly::monomial(to_mono(T.iota_of(m)));
        MonomialModule N = kernel_K0(T, q(1, 2) + T.p_of(m), 4);
        CHECK(membership(moved, N, Backend::groebner) == Verdict::non_member);
        for (std::size_t i = 0; i < 4; ++i) {
            Mono e(4, 0);
            e[i] = 1;
            CHECK(membership(moved.shifted(e), N, Backend::groebner) == Verdict::member);
        }
    }

    ToricData H = load("hirzebruch1.poly");
    MinimalDegreeWitness h = find_minimal_degree_element(H, q(1, 2));
    CHECK(h.verdicts[0] == Verdict::non_member);
    for (std::size_t i = 1; i < h.verdicts.size(); ++i)
        CHECK(h.verdicts[i] == Verdict::member);

    CHECK(hypothesis_of([] { find_minimal_degree_element(load("cp1xcp1_p12.poly"), q(1, 2)); }) ==
          "NoMinimalElement");
    CHECK_THROWS_AS(find_minimal_degree_element(load("cp1xcp1_p12.poly"), Rational(3)), NoMinimalElement);
    CHECK(hypothesis_of([] { find_minimal_degree_element(load("cp2.poly"), q(1, 2)); }) == "M = CP^n excluded");
}

TEST_CASE("translated point bound") {
    BoundCertificate C = translated_point_bound(load("cp1xcp1_monotone.poly"));
    CHECK(C.N_M == 2);
    CHECK(C.period_degree == 2 * 2 * C.period_level);
    CHECK(translated_point_bound(load("cube.poly")).N_M == 2);
    CHECK(translated_point_bound(load("hirzebruch1.poly")).N_M == 1);
    CHECK(hypothesis_of([] { translated_point_bound(load("cp3.poly")); }) == "M = CP^n excluded");
    CHECK(hypothesis_of([] { translated_point_bound(load("cp1xcp1_p12.poly")); }) == "monotone");
    DelzantPolytope odd = parse_polytope("dim 2\nfacet 1 0 ; 1/3\nfacet -1 0 ; 1/3\nfacet 0 1 ; 1/3\nfacet 0 -1 ; 1/3\n");
    CHECK(hypothesis_of([&] { translated_point_bound(toric_data(odd)); }) == "rational");
}

TEST_CASE("degree floor") {
    for (const char* name : {"cp1xcp1_monotone.poly", "cube.poly"}) {
        ToricData T = load(name);
        for (Rational r : {q(1, 2), Rational(1), q(3, 2)}) {
            CHECK(degree_floor_violations(T, r).empty());
            // the scan is not vacuous: members start at degree ceil(r) N_M
            IntVector m(T.k);
            m[0] = ceil(r);
            Mono g = to_mono(T.iota_of(m));
            CHECK(Integer(total_degree(g)) == ceil(r) * *T.N_M);
            CHECK(groebner_membership(LaurentPoly::monomial(g), kernel_K0(T, r, 4)));
        }
    }
}
