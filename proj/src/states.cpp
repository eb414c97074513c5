#include "qent/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qent/eigen.hpp"
#include "qent/errors.hpp"

namespace qent {

namespace {

constexpr double kNormTolerance = 1e-10;

std::vector<std::size_t> strides_for(const std::vector<std::size_t> &dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
    return strides;
}

} // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw validation_error("PureState: empty amplitude vector");
    double norm2 = 0.0;
    for (const Complex &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw validation_error("PureState: non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw validation_error("PureState: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

ComplexMatrix PureState::column() const {
    ComplexMatrix c(dim(), 1);
    for (std::size_t i = 0; i < dim(); ++i) c(i, 0) = amplitudes_[i];
    return c;
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) throw validation_error("inner_product: dimension mismatch");
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

PureState bell_state(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case BellKind::phi_plus:
        return PureState({{r, 0}, {0, 0}, {0, 0}, {r, 0}});
    case BellKind::phi_minus:
        return PureState({{r, 0}, {0, 0}, {0, 0}, {-r, 0}});
    case BellKind::psi_plus:
        return PureState({{0, 0}, {r, 0}, {r, 0}, {0, 0}});
    case BellKind::psi_minus:
        return PureState({{0, 0}, {r, 0}, {-r, 0}, {0, 0}});
    }
    throw validation_error("bell_state: unknown kind");
}

DensityOperator::DensityOperator(std::vector<std::size_t> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (dims_.empty()) throw validation_error("DensityOperator: empty dims");
    std::size_t product = 1;
    for (std::size_t d : dims_) {
        if (d == 0) throw validation_error("DensityOperator: zero subsystem dimension");
        product *= d;
    }
    if (!matrix_.is_square() || matrix_.rows() != product) {
        throw validation_error("DensityOperator: matrix size does not match dims product " +
                               std::to_string(product));
    }
    if (!matrix_.all_finite()) throw validation_error("DensityOperator: non-finite entries");
    if (max_abs_diff(matrix_, matrix_.dagger()) > kHermiticityTolerance) {
        throw validation_error("DensityOperator: matrix is not Hermitian within tolerance");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
        throw validation_error("DensityOperator: trace is not 1 within tolerance");
    }
    const std::vector<double> spectrum = hermitian_eigenvalues(matrix_);
    if (spectrum.front() < kEigenvalueFloor) {
        throw numerical_error("DensityOperator: eigenvalue " + std::to_string(spectrum.front()) +
                              " below PSD floor");
    }
}

DensityOperator DensityOperator::with_dims(std::vector<std::size_t> dims) const {
    std::size_t product = 1;
    for (std::size_t d : dims) product *= d;
    if (product != dim()) throw validation_error("with_dims: dims product does not match matrix size");
    return DensityOperator(std::move(dims), matrix_);
}

double DensityOperator::purity() const {
    const Complex p = (matrix_ * matrix_).trace();
    return p.real();
}

DensityOperator density_from_pure(const PureState &psi) {
    if (psi.dim() == 4) return density_from_pure(psi, {2, 2});
    return density_from_pure(psi, {psi.dim()});
}

DensityOperator density_from_pure(const PureState &psi, std::vector<std::size_t> dims) {
    const std::size_t n = psi.dim();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityOperator(std::move(dims), std::move(m));
}

DensityOperator mix(const std::vector<std::pair<double, DensityOperator>> &parts) {
    if (parts.empty()) throw validation_error("mix: empty state list");
    const std::vector<std::size_t> &dims = parts.front().second.dims();
    double sum = 0.0;
    for (const auto &[p, rho] : parts) {
        if (p < 0.0) throw validation_error("mix: negative probability");
        if (rho.dims() != dims) throw validation_error("mix: subsystem dims mismatch");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kTraceTolerance) {
        throw validation_error("mix: probabilities sum to " + std::to_string(sum) + ", not 1");
    }
    ComplexMatrix m(parts.front().second.dim(), parts.front().second.dim());
    for (const auto &[p, rho] : parts) {
        ComplexMatrix term = rho.matrix();
        term *= Complex(p, 0.0);
        m += term;
    }
    return DensityOperator(dims, std::move(m));
}

DensityOperator partial_trace(const DensityOperator &rho, std::size_t keep) {
    const std::vector<std::size_t> &dims = rho.dims();
    if (dims.size() < 2) throw validation_error("partial_trace: state has fewer than 2 subsystems");
    if (keep >= dims.size()) {
        throw validation_error("partial_trace: invalid subsystem index " + std::to_string(keep));
    }
    const std::vector<std::size_t> strides = strides_for(dims);
    const std::size_t total = rho.dim();
    const std::size_t dk = dims[keep];

    ComplexMatrix out(dk, dk);
    for (std::size_t r = 0; r < total; ++r) {
        const std::size_t rk = (r / strides[keep]) % dk;
        const std::size_t rest = r - rk * strides[keep];
        for (std::size_t ck = 0; ck < dk; ++ck) {
            out(rk, ck) += rho.matrix()(r, rest + ck * strides[keep]);
        }
    }
    return DensityOperator({dk}, std::move(out));
}

ComplexMatrix partial_transpose(const DensityOperator &rho, std::size_t subsystem) {
    const std::vector<std::size_t> &dims = rho.dims();
    if (subsystem >= dims.size()) {
        throw validation_error("partial_transpose: invalid subsystem index " + std::to_string(subsystem));
    }
    const std::vector<std::size_t> strides = strides_for(dims);
    const std::size_t total = rho.dim();
    const std::size_t ds = dims[subsystem];
    const std::size_t stride = strides[subsystem];

    ComplexMatrix out(total, total);
    for (std::size_t r = 0; r < total; ++r) {
        const std::size_t rs = (r / stride) % ds;
        for (std::size_t c = 0; c < total; ++c) {
            const std::size_t cs = (c / stride) % ds;
            const std::size_t rr = (r - rs * stride) + cs * stride;
            const std::size_t cc = (c - cs * stride) + rs * stride;
            out(rr, cc) = rho.matrix()(r, c);
        }
    }
    return out;
}

} // namespace qent
