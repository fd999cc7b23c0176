#pragma once

#include "prequant/int_matrix.hpp"

#include <Eigen/Dense>

#include <complex>
#include <set>
#include <vector>

namespace prequant {

struct DecompositionParams {
    int N1 = 0;
    int N2 = 1;
    int N() const { return N1 + N2; }
    void check() const;
};

// One complex eigenline of the generating form: tan(pi(2k+1)/4N) - tan(pi lambda_j / 2N).
struct EigenDescriptor {
    std::size_t j = 0;  // 0-based coordinate
    int k = 0;          // in [-N, N-1]
    Rational lambda_j;
    int multiplicity = 2;
    double value = 0;
    // exact sign of value: compares 2k+1 with 2 lambda_j
    int sign() const;
};

struct GenFormSpectrum {
    DecompositionParams params;
    RatVector lambda;       // kappa coordinates (empty when built from coordinates)
    RatVector coordinates;  // iota(lambda)
    std::vector<EigenDescriptor> eigenvalues;
    Integer negative_index;  // closed form sum_j 2(N + floor(lambda_j + 1/2))
};

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// 2N x 2N twisted cyclic shift.
ComplexMatrix shift_matrix(int N);
// C = i(Id - A)(Id + A)^{-1}.
ComplexMatrix quad_form_matrix(int N);
// X_j^k in (C^n)^{2N}, block l equal to exp(i l (2k+1) pi / 2N) e_j. j is 0-based.
ComplexVector eigen_vector(int N, std::size_t n, std::size_t j, int k);
// || i(A - Id)X + tan((2k+1)pi/4N)(A + Id)X ||
double eigen_relation_residual(int N, std::size_t n, std::size_t j, int k);

// C (x) Id_n - Id_2N (x) diag(tan(pi lambda_j / 2N)), index l*n + j.
ComplexMatrix assembled_form(int N, const RatVector& coordinates);
// Real symmetric 4nN x 4nN matrix of x -> Re <x, H x>.
Eigen::MatrixXd assembled_real_form(int N, const RatVector& coordinates);

GenFormSpectrum spectrum(const DecompositionParams& params, const RatVector& lambda, const IntMatrix& iota);
GenFormSpectrum spectrum_of_coordinates(const DecompositionParams& params, const RatVector& coordinates);

// Exact count of negative real eigenvalues (each complex line counts twice).
Integer exact_negative_count(int N, const RatVector& coordinates);

std::set<std::size_t> front_membership(const DecompositionParams& params, const RatVector& lambda,
                                       const IntMatrix& iota);
std::set<std::size_t> front_membership_of_coordinates(const DecompositionParams& params,
                                                      const RatVector& coordinates);

// sum over C^n blocks x_b of sum_k tan(pi lambda_k / 2 N2) |x_b^k|^2
double t_lambda_value(const RatVector& coordinates, int N2, const ComplexVector& x);

}  // namespace prequant
