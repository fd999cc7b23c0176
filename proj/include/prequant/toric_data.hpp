#pragma once

#include "prequant/lattice.hpp"
#include "prequant/polytope.hpp"

#include <optional>

namespace prequant {

struct ToricData {
    std::size_t n = 0;  // facets
    std::size_t d = 0;  // torus dimension
    std::size_t k = 0;  // n - d
    IntMatrix beta;     // d x n, columns v_j
    LatticeBasis kappa; // basis of k_Z inside Z^n
    IntMatrix iota;     // n x k, columns are the kappa vectors
    RatVector a;        // facet offsets
    RatVector p;        // iota^T a
    IntVector chern;    // iota^T (1,...,1)
    std::optional<Integer> N_M;
    LatticeBasis k0;    // ker p inside Z^k
    IntVector b;
    std::optional<Integer> hbar;

    IntVector iota_of(const IntVector& m) const { return iota * m; }
    RatVector iota_of(const RatVector& m) const { return iota * m; }
    RatVector iota_star(const RatVector& r) const { return iota.apply_transpose(r); }
    Rational p_of(const IntVector& m) const;
    Rational p_of(const RatVector& m) const;
    Integer c_of(const IntVector& m) const;

    bool operator==(const ToricData&) const = default;
};

ToricData toric_data(const DelzantPolytope& polytope);

// p primitive integral.
bool rationality_check(const ToricData& T);
// N_M with chern = N_M * p, when it exists.
std::optional<Integer> monotonicity_check(const ToricData& T);
// Graded-lex smallest b in k_Z with iota(b) componentwise positive.
IntVector find_positive_b(const ToricData& T);
bool is_cpn(const ToricData& T);

// k0 basis pushed into Z^n (columns iota * k0_i).
std::vector<IntVector> k0_in_ambient(const ToricData& T);

}  // namespace prequant
