#include "prequant/genfun_spectra.hpp"

#include "prequant/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prequant {

namespace {

using std::numbers::pi;
const std::complex<double> I(0.0, 1.0);

void check_range(int N, const RatVector& coordinates) {
    for (std::size_t j = 0; j < coordinates.size(); ++j)
        if (abs(coordinates[j]) >= N)
            throw HypothesisError("lambda in (-N,N)", "coordinate " + std::to_string(j + 1) + " = " +
                                                           to_string(coordinates[j]) + " is out of range");
}

// M (x) Id_n with index l*n + j
ComplexMatrix kron_identity(const ComplexMatrix& M, std::size_t n) {
    const auto m = M.rows();
    const auto nn = static_cast<Eigen::Index>(n);
    ComplexMatrix K = ComplexMatrix::Zero(m * nn, m * nn);
    for (Eigen::Index l = 0; l < m; ++l)
        for (Eigen::Index c = 0; c < m; ++c)
            for (Eigen::Index j = 0; j < nn; ++j)
                K(l * nn + j, c * nn + j) = M(l, c);
    return K;
}

double tan_theta(int N, int k) { return std::tan(pi * (2 * k + 1) / (4.0 * N)); }

double tan_lambda(int N, const Rational& lambda) { return std::tan(pi * to_double(lambda) / (2.0 * N)); }

}  // namespace

void DecompositionParams::check() const {
    if (N1 < 0 || N2 < 1)
        throw std::invalid_argument("need N1 >= 0 and N2 >= 1");
}

int EigenDescriptor::sign() const {
    Rational diff = Rational(2 * k + 1) - 2 * lambda_j;
    return sgn(diff);
}

ComplexMatrix shift_matrix(int N) {
    if (N < 1)
        throw std::invalid_argument("N must be positive");
    const int m = 2 * N;
    ComplexMatrix A = ComplexMatrix::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i)
        A(i, i + 1) = 1.0;
    A(m - 1, 0) = -1.0;
    return A;
}

ComplexMatrix quad_form_matrix(int N) {
    ComplexMatrix A = shift_matrix(N);
    ComplexMatrix Id = ComplexMatrix::Identity(2 * N, 2 * N);
    return I * (Id - A) * (Id + A).inverse();
}

ComplexVector eigen_vector(int N, std::size_t n, std::size_t j, int k) {
    if (k < -N || k > N - 1)
        throw std::out_of_range("k must lie in [-N, N-1]");
    if (j >= n)
        throw std::out_of_range("coordinate index out of range");
    ComplexVector X = ComplexVector::Zero(2 * N * n);
    for (int l = 0; l < 2 * N; ++l)
        X(l * n + j) = std::exp(I * (l * (2.0 * k + 1) * pi / (2.0 * N)));
    return X;
}

double eigen_relation_residual(int N, std::size_t n, std::size_t j, int k) {
    ComplexMatrix A = kron_identity(shift_matrix(N), n);
    ComplexVector X = eigen_vector(N, n, j, k);
    ComplexMatrix Id = ComplexMatrix::Identity(A.rows(), A.cols());
    return (I * (A - Id) * X + tan_theta(N, k) * (A + Id) * X).norm();
}

ComplexMatrix assembled_form(int N, const RatVector& coordinates) {
    check_range(N, coordinates);
    const std::size_t n = coordinates.size();
    ComplexMatrix H = kron_identity(quad_form_matrix(N), n);
    for (int l = 0; l < 2 * N; ++l)
        for (std::size_t j = 0; j < n; ++j)
            H(l * n + j, l * n + j) -= tan_lambda(N, coordinates[j]);
    return H;
}

Eigen::MatrixXd assembled_real_form(int N, const RatVector& coordinates) {
    ComplexMatrix H = assembled_form(N, coordinates);
    // Hermitian part only; C is Hermitian up to rounding
    H = 0.5 * (H + H.adjoint()).eval();
    const auto m = H.rows();
    Eigen::MatrixXd R(2 * m, 2 * m);
    R.topLeftCorner(m, m) = H.real();
    R.topRightCorner(m, m) = -H.imag();
    R.bottomLeftCorner(m, m) = H.imag();
    R.bottomRightCorner(m, m) = H.real();
    return R;
}

GenFormSpectrum spectrum_of_coordinates(const DecompositionParams& params, const RatVector& coordinates) {
    params.check();
    const int N = params.N();
    check_range(N, coordinates);
    GenFormSpectrum out;
    out.params = params;
    out.coordinates = coordinates;
    out.negative_index = 0;
    for (std::size_t j = 0; j < coordinates.size(); ++j) {
        for (int k = -N; k <= N - 1; ++k) {
            EigenDescriptor e;
            e.j = j;
            e.k = k;
            e.lambda_j = coordinates[j];
            e.value = tan_theta(N, k) - tan_lambda(N, coordinates[j]);
            out.eigenvalues.push_back(e);
        }
        out.negative_index += 2 * (N + floor(coordinates[j] + Rational(1, 2)));
    }
    return out;
}

GenFormSpectrum spectrum(const DecompositionParams& params, const RatVector& lambda, const IntMatrix& iota) {
    GenFormSpectrum out = spectrum_of_coordinates(params, iota * lambda);
    out.lambda = lambda;
    return out;
}

Integer exact_negative_count(int N, const RatVector& coordinates) {
    Integer count = 0;
    for (const auto& l : coordinates)
        for (int k = -N; k <= N - 1; ++k)
            if (Rational(2 * k + 1) < 2 * l)
                count += 2;
    return count;
}

std::set<std::size_t> front_membership_of_coordinates(const DecompositionParams& params,
                                                      const RatVector& coordinates) {
    params.check();
    check_range(params.N(), coordinates);
    std::set<std::size_t> out;
    for (std::size_t j = 0; j < coordinates.size(); ++j)
        if (is_integral(coordinates[j] - Rational(1, 2)))
            out.insert(j);
    return out;
}

std::set<std::size_t> front_membership(const DecompositionParams& params, const RatVector& lambda,
                                       const IntMatrix& iota) {
    return front_membership_of_coordinates(params, iota * lambda);
}

double t_lambda_value(const RatVector& coordinates, int N2, const ComplexVector& x) {
    const std::size_t n = coordinates.size();
    if (n == 0 || x.size() % static_cast<Eigen::Index>(n) != 0)
        throw std::invalid_argument("vector is not a union of C^n blocks");
    std::vector<double> t(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (abs(coordinates[k]) >= N2)
            throw HypothesisError("lambda in (-N2,N2)", "tangent pole at coordinate " + std::to_string(k + 1));
        t[k] = tan_lambda(N2, coordinates[k]);
    }
    double s = 0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        s += t[static_cast<std::size_t>(i) % n] * std::norm(x(i));
    return s;
}

}  // namespace prequant
