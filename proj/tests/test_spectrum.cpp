#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prequant/errors.hpp"
#include "prequant/genfun_spectra.hpp"
#include "prequant/linear_feasibility.hpp"
#include "prequant/spectrum_oracle.hpp"

#include <random>
#include <set>

using namespace prequant;

namespace {

std::string data(const std::string& name) { return std::string(PREQUANT_DATA_DIR) + "/" + name; }

ToricData load(const std::string& name) { return toric_data(load_polytope(data(name))); }

Rational q(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

DiagonalMap quarter(std::size_t n) {
    DiagonalMap D{RatVector(n, 0)};
    D.mu[0] = q(1, 4);
    return D;
}

std::set<Rational> residues(const SpectrumReport& R) {
    std::set<Rational> out;
    for (const auto& v : R.values)
        out.insert(v.s - Rational(floor(v.s)));
    return out;
}

Rational random_rational(std::mt19937& rng, long lo, long hi) {
    std::uniform_int_distribution<long> num(lo * 97, hi * 97);
    return q(num(rng), 97);
}

}  // namespace

TEST_CASE("feasible supports") {
    CHECK(feasible_supports(load("cp1xcp1_monotone.poly")) == std::vector<Support>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(feasible_supports(load("cp2.poly")) == std::vector<Support>{{0}, {1}, {2}});
    CHECK(feasible_supports(load("cube.poly")).size() == 8);
    // p = (1,2) on the product: still one facet per factor
    CHECK(feasible_supports(load("cp1xcp1_p12.poly")).size() == 4);

    // every reported support passes an independent recheck, and no proper subset is feasible
    for (const char* name : {"cp1xcp1_monotone.poly", "hirzebruch1.poly", "cube.poly", "cp3.poly"}) {
        ToricData T = load(name);
        auto feasible = [&](const Support& S) {
            LinearSystem sys;
            sys.variables = T.n;
            for (std::size_t j = 0; j < T.n; ++j) {
                RatVector e(T.n);
                e[j] = 1;
                if (std::find(S.begin(), S.end(), j) != S.end())
                    sys.add_ge(e, 0);
                else
                    sys.add_eq(e, 0);
            }
            for (std::size_t i = 0; i < T.k; ++i) {
                RatVector row;
                for (std::size_t j = 0; j < T.n; ++j)
                    row.push_back(Rational(T.iota(j, i)));
                sys.add_eq(row, T.p[i]);
            }
            return is_feasible(sys);
        };
        for (const auto& S : feasible_supports(T)) {
            CHECK(feasible(S));
            for (std::size_t drop = 0; drop < S.size(); ++drop) {
                Support smaller = S;
                smaller.erase(smaller.begin() + static_cast<long>(drop));
                CHECK_FALSE(feasible(smaller));
            }
        }
    }
}

TEST_CASE("spectrum of the monotone product") {
    ToricData T = load("cp1xcp1_monotone.poly");
    SpectrumReport zero = spectrum(T, DiagonalMap{RatVector(4, 0)}, Rational(-3), Rational(3));
    CHECK(residues(zero) == std::set<Rational>{0});
    CHECK(zero.values.size() == 7);
    CHECK(zero.period_check);
    // all four supports give the integers
    CHECK(zero.values[3].supports.size() == 4);

    SpectrumReport R = spectrum(T, quarter(4), Rational(-2), Rational(2));
    // lambda_1 in Z + 1/4 or Z + 1/2, lambda_2 in Z + 1/2, s = -(lambda_1 + lambda_2)
    CHECK(residues(R) == std::set<Rational>{0, q(1, 4)});
    CHECK(R.period_check);
    for (const auto& v : R.values) {
        CHECK(v.supports.size() == 2);
        bool first_facet = v.s - Rational(floor(v.s)) == q(1, 4);
        for (const auto& S : v.supports)
            CHECK((S[0] == 0) == first_facet);
    }

    PeriodCount C = count_in_period(T, quarter(4), q(1, 8));
    CHECK(C.count() == 2);
    CHECK(C.values == std::vector<Rational>{q(1, 4), Rational(1)});
    CHECK_FALSE(C.boundary);
    CHECK(count_in_period(T, DiagonalMap{RatVector(4, 0)}, q(1, 8)).count() == 1);
    PeriodCount B = count_in_period(T, quarter(4), q(1, 4));
    CHECK(B.boundary);
    CHECK(B.count() == 2);

    // untwisted: lambda_j + mu_j in Z
    DiagonalMap U = quarter(4);
    U.twisted = false;
    CHECK(residues(spectrum(T, U, Rational(0), Rational(3))) == std::set<Rational>{0, q(1, 4)});
    DiagonalMap U0{RatVector(4, 0), false};
    CHECK(residues(spectrum(T, U0, Rational(0), Rational(3))) == std::set<Rational>{0});
}

TEST_CASE("periodicity, novikov shifts and lower bounds") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> den(1, 6), num(-11, 11), step(-3, 3);
    for (const char* name : {"cp1xcp1_monotone.poly", "cube.poly", "hirzebruch1.poly", "cp2.poly", "cp1xcp1_p12.poly"}) {
        ToricData T = load(name);
        for (int trial = 0; trial < 6; ++trial) {
            DiagonalMap D{RatVector(T.n)};
            for (auto& x : D.mu)
                x = q(num(rng), den(rng));
            Rational lo = random_rational(rng, -3, 3);
            Rational hi = lo + random_rational(rng, 0, 4);
            SpectrumReport R = spectrum(T, D, lo, hi);
            CHECK(R.period_check);
            Rational nu = random_rational(rng, -5, 5);
            CHECK(count_in_period(T, D, nu).count() == count_in_period(T, D, nu + 1).count());

            IntVector m(T.k);
            for (auto& x : m)
                x = step(rng);
            DiagonalMap moved = D;
            IntVector im = T.iota_of(m);
            for (std::size_t j = 0; j < T.n; ++j)
                moved.mu[j] += Rational(im[j]);
            Rational pm = T.p_of(m);
            SpectrumReport A = spectrum(T, moved, lo, hi);
            SpectrumReport B = spectrum(T, D, lo + pm, hi + pm);
            REQUIRE(A.values.size() == B.values.size());
            for (std::size_t i = 0; i < A.values.size(); ++i)
                CHECK(A.values[i].s == B.values[i].s - pm);
        }
    }

    for (const char* name : {"cp1xcp1_monotone.poly", "cube.poly"}) {
        ToricData T = load(name);
        for (int trial = 0; trial < 10; ++trial) {
            Rational nu = random_rational(rng, -4, 4);
            CHECK(count_in_period(T, quarter(T.n), nu).count() >= *T.N_M);
        }
    }
}

TEST_CASE("progressions agree with the front of the generating form") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> den(1, 5), num(-9, 9);
    for (const char* name : {"cp1xcp1_monotone.poly", "hirzebruch1.poly", "cube.poly"}) {
        ToricData T = load(name);
        for (int trial = 0; trial < 5; ++trial) {
            DiagonalMap D{RatVector(T.n)};
            for (auto& x : D.mu)
                x = q(num(rng), den(rng));
            for (const auto& P : spectrum_progressions(T, D)) {
                RatVector coords = T.iota_of(P.lambda);
                Rational top = 0;
                for (std::size_t j = 0; j < T.n; ++j) {
                    coords[j] += D.mu[j];
                    top = std::max(top, Rational(abs(coords[j])));
                }
                DecompositionParams params{0, static_cast<int>(ceil(top).get_si()) + 1};
                auto front = front_membership_of_coordinates(params, coords);
                for (std::size_t j : P.support)
                    CHECK(front.count(j) == 1);
                CHECK(P.base == -T.p_of(P.lambda));
                CHECK(P.step > 0);
                CHECK(is_integral(Rational(1) / P.step));
            }
        }
    }
}

TEST_CASE("spectrum preconditions") {
    ToricData T = load("cp1xcp1_monotone.poly");
    CHECK_THROWS_AS(spectrum(T, DiagonalMap{RatVector(3)}, Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(spectrum(T, DiagonalMap{RatVector(4)}, Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(spectrum(load("cp2_unit.poly"), DiagonalMap{RatVector(3)}, Rational(0), Rational(1)),
                    HypothesisError);
}
