#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "efimov/matrix.hpp"

extern "C" {
void dsyev_(const char* jobz, const char* uplo, const int* n, double* a, const int* lda,
            double* w, double* work, const int* lwork, int* info);
void dgemm_(const char* transa, const char* transb, const int* m, const int* n, const int* k,
            const double* alpha, const double* a, const int* lda, const double* b, const int* ldb,
            const double* beta, double* c, const int* ldc);
}

namespace efimov {

struct EigenResult {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k (row-major storage) pairs with values[k]; empty if not requested
};

// Dense symmetric eigensolver.  The contract (ascending eigenvalues, residual
// ||Av - lambda v|| <= 1e-10 ||A||) is what the tests pin down; the factorization
// itself is delegated to LAPACK's dsyev.
inline EigenResult symmetric_eigen(const Matrix& m, bool want_vectors = false) {
    const int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("symmetric_eigen: matrix must be square");
    const double scale = std::max(m.max_abs(), 1e-300);
    if (m.symmetry_defect() > 1e-12 * scale * n)
        throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");

    // dsyev is column-major, but a symmetric matrix equals its transpose.
    std::vector<double> a(m.data(), m.data() + static_cast<std::size_t>(n) * n);
    EigenResult out;
    out.values.resize(n);
    int info = 0, lwork = -1;
    double wkopt = 0.0;
    const char jobz = want_vectors ? 'V' : 'N';
    dsyev_(&jobz, "U", &n, a.data(), &n, out.values.data(), &wkopt, &lwork, &info);
    lwork = static_cast<int>(wkopt);
    std::vector<double> work(static_cast<std::size_t>(std::max(lwork, 1)));
    dsyev_(&jobz, "U", &n, a.data(), &n, out.values.data(), work.data(), &lwork, &info);
    if (info != 0) throw std::runtime_error("symmetric_eigen: dsyev failed, info=" + std::to_string(info));
    if (want_vectors) {
        out.vectors = Matrix(n, n);
        // column-major eigenvector matrix -> (i,k) entry of row-major view
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) out.vectors(i, k) = a[static_cast<std::size_t>(k) * n + i];
    }
    return out;
}

inline std::vector<double> eigenvalues_descending(const Matrix& m) {
    auto r = symmetric_eigen(m, false);
    std::reverse(r.values.begin(), r.values.end());
    return r.values;
}

/// Singular values (descending) via the Gram matrix of the thinner side.
inline std::vector<double> singular_values(const Matrix& m) {
    const int r = m.rows(), c = m.cols();
    const bool thin_cols = c <= r;
    const int k = thin_cols ? c : r;
    Matrix gram(k, k);
    {
        // gram = A^T A (or A A^T), computed with dgemm on the row-major data:
        // row-major A is column-major A^T, so ask for the matching product.
        const double one = 1.0, zero = 0.0;
        const int mm = k, nn = k, kk = thin_cols ? r : c;
        // column-major view B = A^T (c x r).  thin_cols: want A^T A = B B^T.
        if (thin_cols)
            dgemm_("N", "T", &mm, &nn, &kk, &one, m.data(), &mm, m.data(), &nn, &zero, gram.data(), &mm);
        else
            dgemm_("T", "N", &mm, &nn, &kk, &one, m.data(), &kk, m.data(), &kk, &zero, gram.data(), &mm);
    }
    // fold roundoff asymmetry before the symmetric solve
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const double v = 0.5 * (gram(i, j) + gram(j, i));
            gram(i, j) = gram(j, i) = v;
        }
    auto ev = symmetric_eigen(gram, false).values;
    std::vector<double> sv(k);
    for (int i = 0; i < k; ++i) sv[i] = std::sqrt(std::max(ev[k - 1 - i], 0.0));
    return sv;
}

inline double operator_norm(const Matrix& m) {
    auto sv = singular_values(m);
    return sv.empty() ? 0.0 : sv.front();
}

}  // namespace efimov
