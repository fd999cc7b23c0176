#pragma once

#include "prequant/rational.hpp"

#include <optional>
#include <vector>

namespace prequant {

enum class Relation { greater_equal, equal };

// coeffs . x  (>= | =)  rhs
struct LinearConstraint {
    RatVector coeffs;
    Rational rhs;
    Relation relation = Relation::greater_equal;
};

struct LinearSystem {
    std::size_t variables = 0;
    std::vector<LinearConstraint> constraints;

    void add_ge(RatVector coeffs, Rational rhs);
    void add_eq(RatVector coeffs, Rational rhs);
};

// Exact Fourier-Motzkin elimination (equalities are substituted away first).
// Returns a point satisfying every constraint, or nullopt when the system is infeasible.
std::optional<RatVector> feasible_point(const LinearSystem& system);

inline bool is_feasible(const LinearSystem& system) { return feasible_point(system).has_value(); }

bool satisfies(const LinearSystem& system, const RatVector& x);

// Unique solution of the square system A x = b (A given by rows), or nullopt if A is singular.
std::optional<RatVector> solve_square(std::vector<RatVector> A, RatVector b);

}  // namespace prequant
