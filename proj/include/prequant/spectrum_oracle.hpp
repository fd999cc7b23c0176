#pragma once

#include "prequant/toric_data.hpp"

#include <optional>

namespace prequant {

using Support = std::vector<std::size_t>;  // 0-based facet indices, ascending

// Minimal S such that p = iota^T x for some x >= 0 supported on S.
std::vector<Support> feasible_supports(const ToricData& T);

// z -> -exp(2 pi i mu) z on C^n; with twisted = false the -Id factor is dropped.
struct DiagonalMap {
    RatVector mu;
    bool twisted = true;
};

// Spectrum values contributed by one support: base + step * Z.
struct Progression {
    Support support;
    RatVector lambda;  // a solution in k (x) Q
    Rational base;     // -p(lambda)
    Rational step;     // 0 when the value is isolated
    Rational residue() const;  // base mod step
};

// nullopt when iota(lambda)_j + mu_j in Z + 1/2 (resp. Z) over j in S has no solution
std::optional<Progression> support_progression(const ToricData& T, const DiagonalMap& D, const Support& S);
std::vector<Progression> spectrum_progressions(const ToricData& T, const DiagonalMap& D);

struct SpectrumValue {
    Rational s;
    std::vector<Support> supports;
    bool operator==(const SpectrumValue&) const = default;
};

struct SpectrumReport {
    Rational lo, hi;                    // closed window
    std::vector<SpectrumValue> values;  // ascending s
    std::vector<Progression> progressions;
    bool period_check = false;          // values on [lo+1, hi+1] are these values plus 1
};

SpectrumReport spectrum(const ToricData& T, const DiagonalMap& D, const Rational& lo, const Rational& hi);

struct PeriodCount {
    Rational nu;
    std::vector<Rational> values;  // in [nu, nu+1)
    bool boundary = false;         // nu is itself a spectrum value (counted)
    std::size_t count() const { return values.size(); }
};

PeriodCount count_in_period(const ToricData& T, const DiagonalMap& D, const Rational& nu);

}  // namespace prequant
