#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prequant/errors.hpp"
#include "prequant/linear_feasibility.hpp"
#include "prequant/toric_data.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace prequant;

namespace {

std::string data(const std::string& name) { return std::string(PREQUANT_DATA_DIR) + "/" + name; }

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

RatVector rv(std::initializer_list<const char*> xs) {
    RatVector v;
    for (auto x : xs)
        v.push_back(parse_rational(x));
    return v;
}

const char* kAll[] = {"cp1.poly",  "cp2.poly",         "cp2_unit.poly",     "cp3.poly",
                      "cube.poly", "cp1xcp1_monotone.poly", "cp1xcp1_p12.poly", "hirzebruch1.poly"};

}  // namespace

TEST_CASE("fourier-motzkin on planted and refuted systems") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + rng() % 4, m = 1 + rng() % 6;
        RatVector x0(n);
        for (auto& x : x0)
            x = q(coef(rng), 1 + rng() % 3);
        LinearSystem sys{n, {}};
        for (std::size_t r = 0; r < m; ++r) {
            RatVector a(n);
            Rational ax = 0;
            for (std::size_t i = 0; i < n; ++i) {
                a[i] = coef(rng);
                ax += a[i] * x0[i];
            }
            if (rng() % 4 == 0)
                sys.add_eq(a, ax);
            else
                sys.add_ge(a, ax - Rational(rng() % 3));
        }
        auto pt = feasible_point(sys);
        REQUIRE(pt.has_value());
        CHECK(satisfies(sys, *pt));

        // Farkas: a nonnegative combination of the inequalities yields 0 >= 1
        LinearSystem bad{n, {}};
        RatVector sum(n);
        Rational rhs = 0;
        for (const auto& c : sys.constraints) {
            Rational y = rng() % 3;
            bad.constraints.push_back(c);
            if (c.relation == Relation::equal)
                y = coef(rng);
            for (std::size_t i = 0; i < n; ++i)
                sum[i] += y * c.coeffs[i];
            rhs += y * c.rhs;
        }
        for (auto& s : sum)
            s = -s;
        bad.add_ge(sum, -rhs + 1);
        CHECK_FALSE(is_feasible(bad));
    }
}

TEST_CASE("polytope text format") {
    auto P = load_polytope(data("cp1xcp1_p12.poly"));
    CHECK(P.dim() == 2);
    CHECK(P.facet_count() == 4);
    CHECK(P.facets()[2].offset == 1);
    CHECK(P.facets()[0].offset == Rational(1, 2));
    for (auto name : kAll) {
        std::ifstream in(data(name));
        std::stringstream buf;
        buf << in.rdbuf();
        auto Q = parse_polytope(buf.str());
        CHECK(serialize(Q) == buf.str());
        CHECK(parse_polytope(serialize(Q)) == Q);
    }
    auto H = load_polytope(data("halfplane.poly"));
    CHECK(serialize(parse_polytope(serialize(H))) == serialize(H));

    CHECK_THROWS_AS(parse_polytope("dim 1\nfacet 1 ; 0.5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope("dim 1\nfacet 1.0 ; 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope("dim 2\nfacet 2 0 ; 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope("dim 1\nfacet 1 ; -1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope("dim 2\nfacet 1 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polytope("facet 1 ; 1\n"), std::invalid_argument);
    auto C = parse_polytope("# comment\n dim 1 # trailing\nfacet 1 ; 2/4\nfacet -1;1\n");
    CHECK(serialize(C) == "dim 1\nfacet 1 ; 1/2\nfacet -1 ; 1\n");
}

TEST_CASE("validation") {
    auto r = validate(load_polytope(data("cp2_unit.poly")));
    CHECK(r.compact);
    CHECK(r.smooth);
    CHECK(r.vertices.size() == 3);

    r = validate(load_polytope(data("cp1xcp1_monotone.poly")));
    CHECK(r.compact);
    CHECK(r.smooth);
    CHECK(r.vertices.size() == 4);

    r = validate(load_polytope(data("halfplane.poly")));
    CHECK_FALSE(r.compact);

    r = validate(load_polytope(data("cube.poly")));
    CHECK(r.vertices.size() == 8);
    CHECK(r.smooth);

    // weighted projective plane P(1,1,2): compact, singular vertex
    auto W = parse_polytope("dim 2\nfacet 1 0 ; 1\nfacet 0 1 ; 1\nfacet -1 -2 ; 1\n");
    r = validate(W);
    CHECK(r.compact);
    CHECK_FALSE(r.smooth);
    CHECK_THROWS_AS(toric_data(W), HypothesisError);

    // a strip is unbounded
    auto S = parse_polytope("dim 2\nfacet 1 0 ; 1\nfacet -1 0 ; 1\n");
    CHECK_FALSE(validate(S).compact);
    CHECK_FALSE(dual_compactness(S));
    CHECK_THROWS_AS(toric_data(S), HypothesisError);

    for (auto name : kAll) {
        auto P = load_polytope(data(name));
        CHECK(recession_cone_trivial(P) == dual_compactness(P));
    }
    CHECK(recession_cone_trivial(load_polytope(data("halfplane.poly"))) ==
          dual_compactness(load_polytope(data("halfplane.poly"))));
}

TEST_CASE("toric data of the worked examples") {
    auto T = toric_data(load_polytope(data("cp1xcp1_monotone.poly")));
    REQUIRE(T.k == 2);
    CHECK(T.kappa.vectors[0] == iv({1, 1, 0, 0}));
    CHECK(T.kappa.vectors[1] == iv({0, 0, 1, 1}));
    CHECK(T.p == rv({"1", "1"}));
    CHECK(T.chern == iv({2, 2}));
    CHECK(T.N_M == Integer(2));
    REQUIRE(T.k0.size() == 1);
    CHECK(T.k0.vectors[0] == iv({1, -1}));
    CHECK(k0_in_ambient(T)[0] == iv({1, 1, -1, -1}));
    CHECK(T.b == iv({1, 1}));
    CHECK(T.iota_of(T.b) == iv({1, 1, 1, 1}));
    CHECK(T.p_of(T.b) == 2);
    CHECK(T.hbar == Integer(1));
    CHECK_FALSE(is_cpn(T));

    for (auto [name, n] : {std::pair{"cp1.poly", 1}, {"cp2.poly", 2}, {"cp3.poly", 3}}) {
        auto C = toric_data(load_polytope(data(name)));
        REQUIRE(C.k == 1);
        CHECK(C.kappa.vectors[0] == IntVector(n + 1, Integer(1)));
        CHECK(C.p == rv({"1"}));
        CHECK(C.chern == IntVector{Integer(n + 1)});
        CHECK(C.N_M == Integer(n + 1));
        CHECK(C.k0.empty());
        CHECK(C.b == iv({1}));
        CHECK(is_cpn(C));
    }

    auto N = toric_data(load_polytope(data("cp1xcp1_p12.poly")));
    CHECK(N.p == rv({"1", "2"}));
    CHECK(N.chern == iv({2, 2}));
    CHECK_FALSE(N.N_M.has_value());
    CHECK(rationality_check(N));
    CHECK_FALSE(monotonicity_check(N).has_value());
    REQUIRE(N.k0.size() == 1);
    CHECK(N.k0.vectors[0] == iv({2, -1}));
    CHECK(N.b == iv({1, 1}));
    CHECK(N.p_of(N.b) == 3);

    auto U = toric_data(load_polytope(data("cp2_unit.poly")));
    CHECK(U.p == rv({"3"}));
    CHECK_FALSE(rationality_check(U));
    CHECK_FALSE(U.hbar.has_value());

    auto F = toric_data(load_polytope(data("hirzebruch1.poly")));
    CHECK(F.kappa.vectors[0] == iv({1, 0, 1, 1}));
    CHECK(F.kappa.vectors[1] == iv({0, 1, 0, 1}));
    CHECK(F.p == rv({"3", "2"}));
    CHECK(F.N_M == Integer(1));
    CHECK(F.k0.vectors[0] == iv({2, -3}));

    auto Q = toric_data(load_polytope(data("cube.poly")));
    CHECK(Q.N_M == Integer(2));
    CHECK(Q.k0.size() == 2);
}

TEST_CASE("rationality predicate on raw p") {
    ToricData T;
    T.k = 2;
    T.chern = iv({2, 2});
    T.p = rv({"1", "1"});
    CHECK(rationality_check(T));
    T.p = rv({"2", "2"});
    CHECK_FALSE(rationality_check(T));
    T.p = rv({"1", "3/2"});
    CHECK_FALSE(rationality_check(T));
    T.p = rv({"1", "1"});
    CHECK(monotonicity_check(T) == Integer(2));
}

TEST_CASE("structural invariants on every test polytope") {
    std::mt19937 rng(17);
    for (auto name : kAll) {
        auto T = toric_data(load_polytope(data(name)));
        CHECK((T.beta * T.iota).is_zero());
        CHECK(T.iota.rank() == T.k);
        CHECK(T.p_of(T.b) > 0);
        for (const auto& e : T.iota_of(T.b))
            CHECK(e >= 0);
        if (T.N_M) {
            for (std::size_t i = 0; i < T.k; ++i)
                CHECK(Rational(T.chern[i]) - Rational(*T.N_M) * T.p[i] == 0);
        }
        for (const auto& v : T.k0.vectors)
            CHECK(T.p_of(v) == 0);
        // momentum map: iota^T r vs. pairing r with each kappa vector
        for (int s = 0; s < 10; ++s) {
            RatVector r(T.n);
            for (auto& x : r)
                x = q(rng() % 7, 1 + rng() % 5);
            RatVector viaT = T.iota_star(r);
            for (std::size_t i = 0; i < T.k; ++i) {
                Rational pair = 0;
                for (std::size_t j = 0; j < T.n; ++j)
                    pair += Rational(T.kappa.vectors[i][j]) * r[j];
                CHECK(pair == viaT[i]);
            }
        }
        // b is the first strictly positive vector in graded-lex order
        for (long a = -3; a <= 3; ++a)
            for (long c = -3; c <= 3 && T.k == 2; ++c) {
                IntVector m = iv({a, c});
                bool positive = true;
                for (const auto& e : T.iota_of(m))
                    positive = positive && e > 0;
                if (positive)
                    CHECK(std::labs(a) + std::labs(c) >= T.b[0] * sgn(T.b[0]) + T.b[1] * sgn(T.b[1]));
            }
    }
}
