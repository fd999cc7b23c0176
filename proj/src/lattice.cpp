#include "prequant/lattice.hpp"

#include <stdexcept>

namespace prequant {

namespace {

// Replace columns (c, j) by (x*c + y*j, -(b/g)*c + (a/g)*j) where a = m(row,c), b = m(row,j).
void combine_columns(IntMatrix& m, IntMatrix& u, std::size_t row, std::size_t c, std::size_t j) {
    Integer a = m(row, c), b = m(row, j);
    Integer g, x, y;
    if (a != 0 && b % a == 0) {
        // plain elimination when the pivot already divides
        g = abs(a);
        x = sgn(a);
        y = 0;
    } else {
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    Integer bg = b / g, ag = a / g;
    auto apply = [&](IntMatrix& t) {
        for (std::size_t r = 0; r < t.rows(); ++r) {
            Integer tc = t(r, c), tj = t(r, j);
            t(r, c) = x * tc + y * tj;
            t(r, j) = -bg * tc + ag * tj;
        }
    };
    apply(m);
    apply(u);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& M) {
    HermiteForm out{M, IntMatrix::identity(M.cols()), 0};
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    std::size_t c = 0;
    for (std::size_t i = 0; i < H.rows() && c < H.cols(); ++i) {
        for (std::size_t j = c + 1; j < H.cols(); ++j)
            if (H(i, j) != 0)
                combine_columns(H, U, i, c, j);
        if (H(i, c) == 0)
            continue;
        if (H(i, c) < 0) {
            H.negate_column(c);
            U.negate_column(c);
        }
        for (std::size_t l = 0; l < c; ++l) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, l).get_mpz_t(), H(i, c).get_mpz_t());
            H.add_column_multiple(l, c, -q);
            U.add_column_multiple(l, c, -q);
        }
        ++c;
    }
    out.rank = c;
    return out;
}

IntVector SmithForm::invariant_factors() const {
    IntVector f;
    for (std::size_t t = 0; t < rank; ++t)
        f.push_back(D(t, t));
    return f;
}

SmithForm smith_normal_form(const IntMatrix& M) {
    SmithForm out{M, IntMatrix::identity(M.rows()), IntMatrix::identity(M.cols()), 0};
    IntMatrix& A = out.D;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;
    const std::size_t rows = A.rows(), cols = A.cols();
    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (A(i, j) != 0 && (pi == rows || abs(A(i, j)) < abs(A(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        A.swap_rows(t, pi);
        U.swap_rows(t, pi);
        A.swap_columns(t, pj);
        V.swap_columns(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (A(i, t) == 0)
                    continue;
                Integer q = A(i, t) / A(t, t);
                A.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (A(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (A(t, j) == 0)
                    continue;
                Integer q = A(t, j) / A(t, t);
                A.add_column_multiple(j, t, -q);
                V.add_column_multiple(j, t, -q);
                if (A(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // a remainder is smaller than the pivot; swap it in and repeat
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) {
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) {
                        bi = t;
                        bj = j;
                    }
                A.swap_rows(t, bi);
                U.swap_rows(t, bi);
                A.swap_columns(t, bj);
                V.swap_columns(t, bj);
                continue;
            }
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            A.add_row_multiple(t, bad, 1);
            U.add_row_multiple(t, bad, 1);
        }
        if (A(t, t) < 0) {
            A.negate_row(t);
            U.negate_row(t);
        }
    }
    out.rank = t;
    return out;
}

LatticeBasis canonical_basis(const std::vector<IntVector>& vectors, std::size_t ambient_dim) {
    LatticeBasis out{ambient_dim, {}};
    if (vectors.empty())
        return out;
    HermiteForm hf = hermite_normal_form(IntMatrix::from_columns(vectors, ambient_dim));
    for (std::size_t c = 0; c < hf.rank; ++c)
        out.vectors.push_back(hf.H.column(c));
    return out;
}

LatticeBasis integer_kernel(const IntMatrix& M) {
    HermiteForm hf = hermite_normal_form(M);
    std::vector<IntVector> kernel;
    for (std::size_t c = hf.rank; c < M.cols(); ++c)
        kernel.push_back(hf.U.column(c));
    return canonical_basis(kernel, M.cols());
}

bool is_primitive(const IntVector& v) {
    Integer g = gcd(v);
    if (g == 0)
        throw std::invalid_argument("primitivity of the zero vector is undefined");
    return g == 1;
}

IntVector primitive_part(const IntVector& v) {
    Integer g = gcd(v);
    if (g == 0)
        return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

IntVector primitive_integer_multiple(const RatVector& v) {
    Integer den = 1;
    for (const auto& x : v)
        den = lcm(den, x.get_den());
    IntVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        scaled[i] = v[i].get_num() * (den / v[i].get_den());
    return primitive_part(scaled);
}

bool extends_to_lattice_basis(const std::vector<IntVector>& S, std::size_t d) {
    if (S.size() > d)
        return false;
    if (S.empty())
        return true;
    SmithForm sf = smith_normal_form(IntMatrix::from_columns(S, d));
    if (sf.rank != S.size())
        return false;
    for (const auto& f : sf.invariant_factors())
        if (f != 1)
            return false;
    return true;
}

IntMatrix unimodular_inverse(const IntMatrix& U) {
    const std::size_t n = U.rows();
    if (U.cols() != n)
        throw std::invalid_argument("inverse of a non-square matrix");
    // Gauss-Jordan over Q on [U | I]
    std::vector<RatVector> a(n, RatVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = U(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("singular matrix");
        std::swap(a[p], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[r][j] -= f * a[c][j];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integral(a[i][n + j]))
                throw std::invalid_argument("matrix is not unimodular");
            out(i, j) = a[i][n + j].get_num();
        }
    return out;
}

}  // namespace prequant
