#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qent {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Everything in this library is tiny
// (dimension <= 16), so there is no sparse path and copies are cheap.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ComplexMatrix dagger() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    // Largest |entry| (max-norm); used for all tolerance checks.
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scalar);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

// Kronecker product with block ordering (a[i,j] * b).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

// Max-norm of the entrywise difference.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

double max_abs_off_diagonal(const ComplexMatrix &m);

// Pauli matrices and the 2x2 identity in the computational basis.
const ComplexMatrix &pauli_x();
const ComplexMatrix &pauli_y();
const ComplexMatrix &pauli_z();
const ComplexMatrix &identity2();

} // namespace qent
