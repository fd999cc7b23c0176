#pragma once

#include "prequant/int_matrix.hpp"

#include <vector>

namespace prequant {

struct LatticeBasis {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> vectors;

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
    IntMatrix matrix() const { return IntMatrix::from_columns(vectors, ambient_dim); }
    bool operator==(const LatticeBasis&) const = default;
};

struct HermiteForm {
    IntMatrix H;
    IntMatrix U;
    std::size_t rank = 0;  // number of pivot columns; columns [rank, cols) of H vanish
};

// Column-style: H = M*U, U unimodular, pivots positive, entries left of a pivot in [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& M);

struct SmithForm {
    IntMatrix D;  // diagonal, d_1 | d_2 | ..., nonnegative
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix V;  // cols x cols, unimodular
    std::size_t rank = 0;
    IntVector invariant_factors() const;
};

// U*M*V = D.
SmithForm smith_normal_form(const IntMatrix& M);

// Saturated basis of {x in Z^cols : M x = 0}, put in column-Hermite form.
LatticeBasis integer_kernel(const IntMatrix& M);

// Canonical basis of the lattice spanned by the given vectors (column HNF, zero columns dropped).
LatticeBasis canonical_basis(const std::vector<IntVector>& vectors, std::size_t ambient_dim);

// Throws std::invalid_argument on the zero vector.
bool is_primitive(const IntVector& v);

IntVector primitive_part(const IntVector& v);
// Smallest positive integer multiple of a rational vector, divided by the gcd of its entries.
IntVector primitive_integer_multiple(const RatVector& v);

bool extends_to_lattice_basis(const std::vector<IntVector>& S, std::size_t d);

// Inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& U);

}  // namespace prequant
