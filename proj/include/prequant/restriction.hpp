#pragma once

#include "prequant/laurent.hpp"
#include "prequant/toric_data.hpp"

#include <map>
#include <optional>

namespace prequant {

// V in Q^n spanned by the columns of `basis`; u_i restricts to l_i(w) = (row i of basis) . w.
class LinearSubspace {
public:
    LinearSubspace() = default;
    LinearSubspace(std::size_t ambient, std::vector<IntVector> columns);

    static LinearSubspace of_K(const ToricData& T);
    static LinearSubspace of_K0(const ToricData& T);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return columns_.size(); }
    const std::vector<IntVector>& columns() const { return columns_; }
    IntVector form(std::size_t i) const;
    // V = {0} or some coordinate vanishes identically on V: the torus part is empty
    bool zero_ring() const;
    // integer basis of the linear forms vanishing on V
    std::vector<IntVector> annihilator() const;

private:
    std::size_t ambient_ = 0;
    std::vector<IntVector> columns_;
};

// numerator / prod f^e with f primitive integer linear forms in w (first nonzero entry positive)
struct RestrictedElement {
    bool zero_ring = false;
    LaurentPoly numerator;
    std::map<IntVector, int> denominator;

    bool is_zero() const { return zero_ring || numerator.is_zero(); }
    bool operator==(const RestrictedElement&) const = default;
    std::string to_string() const;
};

RestrictedElement restrict(const LaurentPoly& q, const LinearSubspace& V);
RestrictedElement multiply(const RestrictedElement& a, const RestrictedElement& b);
// a = c * b for a nonzero rational c
bool proportional(const RestrictedElement& a, const RestrictedElement& b);

// polynomial in w of the linear form f
LaurentPoly linear_form(const IntVector& f);
// exact quotient p / f, or nullopt if f does not divide p
std::optional<LaurentPoly> divide_by_linear(const LaurentPoly& p, const IntVector& f);

}  // namespace prequant
