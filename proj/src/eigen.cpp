#include "qent/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qent/errors.hpp"

namespace qent {

namespace {

constexpr double kOffDiagonalTarget = 1e-12; // Frobenius norm of off-diagonal part
constexpr int kMaxSweeps = 100;

double off_diagonal_frobenius(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

ComplexMatrix symmetrized_input(const ComplexMatrix &h) {
    if (!h.is_square()) throw validation_error("hermitian_eigensystem: matrix is not square");
    if (!h.all_finite()) throw validation_error("hermitian_eigensystem: matrix has non-finite entries");
    const ComplexMatrix hd = h.dagger();
    if (max_abs_diff(h, hd) > kHermiticityTolerance) {
        throw validation_error("hermitian_eigensystem: matrix is not Hermitian within tolerance");
    }
    ComplexMatrix a = h;
    a += hd;
    a *= Complex(0.5, 0.0);
    return a;
}

// One cyclic Jacobi pass over all pivots p < q. For each pivot the complex
// phase of a(p,q) is absorbed into the rotation so that the remaining 2x2
// problem is the classic real symmetric one.
void jacobi_sweep(ComplexMatrix &a, ComplexMatrix *v) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const Complex apq = a(p, q);
            const double r = std::abs(apq);
            if (r == 0.0) continue;
            const Complex phase = apq / r;

            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double theta = (aqq - app) / (2.0 * r);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;

            const Complex gp = c * phase; // rotation column p: (c*phase, -s)
            const Complex gq = s * phase; // rotation column q: (s*phase,  c)

            // a <- a * G
            for (std::size_t k = 0; k < n; ++k) {
                const Complex akp = a(k, p);
                const Complex akq = a(k, q);
                a(k, p) = akp * gp - s * akq;
                a(k, q) = akp * gq + c * akq;
            }
            // a <- G^dag * a
            const Complex gpc = std::conj(phase) * c;
            const Complex gqc = std::conj(phase) * s;
            for (std::size_t k = 0; k < n; ++k) {
                const Complex apk = a(p, k);
                const Complex aqk = a(q, k);
                a(p, k) = gpc * apk - s * aqk;
                a(q, k) = gqc * apk + c * aqk;
            }
            // Kill rotation residue exactly.
            a(p, q) = Complex(0.0, 0.0);
            a(q, p) = Complex(0.0, 0.0);
            a(p, p) = Complex(a(p, p).real(), 0.0);
            a(q, q) = Complex(a(q, q).real(), 0.0);

            if (v != nullptr) {
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = (*v)(k, p);
                    const Complex vkq = (*v)(k, q);
                    (*v)(k, p) = vkp * gp - s * vkq;
                    (*v)(k, q) = vkp * gq + c * vkq;
                }
            }
        }
    }
}

void diagonalize(ComplexMatrix &a, ComplexMatrix *v) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius(a) < kOffDiagonalTarget) {
            // One polishing sweep: quadratic convergence takes the remaining
            // off-diagonal mass to rounding level, which keeps eigenvalues
            // near zero accurate in absolute terms (callers take square
            // roots of them).
            jacobi_sweep(a, v);
            return;
        }
        jacobi_sweep(a, v);
    }
    if (off_diagonal_frobenius(a) >= kOffDiagonalTarget) {
        throw numerical_error("hermitian_eigensystem: Jacobi iteration did not converge in " +
                              std::to_string(kMaxSweeps) + " sweeps");
    }
}

} // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix &h) {
    ComplexMatrix a = symmetrized_input(h);
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    diagonalize(a, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &h) {
    ComplexMatrix a = symmetrized_input(h);
    diagonalize(a, nullptr);
    std::vector<double> vals(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) vals[i] = a(i, i).real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &a) {
    EigenSystem es = hermitian_eigensystem(a);
    const std::size_t n = a.rows();
    for (double &lambda : es.eigenvalues) {
        if (lambda < -kHermiticityTolerance) {
            throw numerical_error("matrix_sqrt_psd: eigenvalue " + std::to_string(lambda) +
                                  " below PSD tolerance");
        }
        lambda = lambda < 0.0 ? 0.0 : lambda;
    }
    // V * diag(sqrt(lambda)) * V^dag
    ComplexMatrix scaled = es.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(es.eigenvalues[k]);
        for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= root;
    }
    ComplexMatrix out = scaled * es.eigenvectors.dagger();
    out += out.dagger();
    out *= Complex(0.5, 0.0);
    return out;
}

} // namespace qent
