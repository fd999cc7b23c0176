#pragma once

#include "prequant/restriction.hpp"

#include <limits>
#include <memory>
#include <optional>

namespace prequant {

enum class TargetRing { R, R0, ZeroRing };
enum class Backend { groebner, brute };
enum class Verdict { member, non_member, inconclusive };

std::string to_string(TargetRing t);
std::string to_string(Verdict v);

constexpr int kWindowCap = 16;
constexpr int kDefaultDegreeBound = 8;

// Submodule of C[u,u^-1] over C[u] generated by u^iota(m), m in k_Z, p(m) >= threshold,
// |m - center|_inf <= window, viewed in the ring of the target subspace.
struct MonomialModule {
    std::optional<Rational> threshold;  // nullopt: no level condition
    std::shared_ptr<const ToricData> toric;
    int window = 4;
    IntVector center;
    Integer degree_shift = 0;
    TargetRing target = TargetRing::R;
    LinearSubspace subspace;

    std::vector<IntVector> lattice_points() const;  // lex order
    std::vector<Mono> generators() const;
    MonomialModule with_window(int W) const;
};

std::vector<Mono> module_generators(const ToricData& T, const std::optional<Rational>& r, int W);

MonomialModule novikov_shift(const MonomialModule& M, const IntVector& m);

MonomialModule kernel_K(const ToricData& T, const Rational& nu, int W);
MonomialModule kernel_K0(const ToricData& T, const Rational& nu, int W);

// Verdict at the module's own window.
bool groebner_membership(const LaurentPoly& q, const MonomialModule& M);
bool brute_membership(const LaurentPoly& q, const MonomialModule& M, int degree_bound = kDefaultDegreeBound);
bool membership_at_window(const LaurentPoly& q, const MonomialModule& M, Backend backend,
                          int degree_bound = kDefaultDegreeBound);

// Window-stability protocol: W, W+2, ... until two consecutive verdicts agree, capped at kWindowCap.
Verdict membership(const LaurentPoly& q, const MonomialModule& M, Backend backend,
                   int degree_bound = kDefaultDegreeBound);

// Groebner data for one module kept across queries: q in J + I_V C[u,u^-1] iff u^E q in J' + sat(I_V).
class GroebnerOracle {
public:
    explicit GroebnerOracle(MonomialModule M);
    bool contains(const LaurentPoly& q);
    // prebuild for queries with exponents >= -floor and total degree <= max_degree
    void reserve(const Mono& floor, int max_degree);
    const MonomialModule& module() const { return module_; }

private:
    void rebuild(const Mono& floor, int max_degree);

    MonomialModule module_;
    std::vector<Polynomial> saturated_;  // sat(I_V) in u-variables
    std::vector<Mono> generators_;
    Mono shift_;
    int max_degree_ = std::numeric_limits<int>::min();
    std::optional<GroebnerBasis> basis_;
};

// sat(I_V) = (I_V + <t u_1...u_n - 1>) intersected with C[u], by elimination of t.
std::vector<Polynomial> saturated_linear_ideal(const LinearSubspace& V);

// componentwise-minimal exponents among gens with total degree <= max_degree
std::vector<Mono> minimal_generators(const std::vector<Mono>& gens, int max_degree);

}  // namespace prequant
