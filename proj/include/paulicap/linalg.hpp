#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "paulicap/errors.hpp"

namespace paulicap {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Bipartite pure state on S (x) R. Amplitudes are stored S-major: the entry
// for basis ket |s>|r> sits at index s*dimR + r, so the reference system is
// the fastest-varying index. This convention is fixed project-wide.
class PureState {
public:
    PureState(int dim_s, int dim_r, CVec amps)
        : dim_s_(dim_s), dim_r_(dim_r), amps_(std::move(amps)) {
        if (dim_s_ < 1 || dim_r_ < 1)
            throw DimError("PureState: dimensions must be positive");
        if (amps_.size() != static_cast<Eigen::Index>(dim_s_) * dim_r_)
            throw DimError("PureState: amplitude vector has wrong length");
        double norm = amps_.norm();
        if (std::abs(norm - 1.0) > 1e-10)
            throw InvalidState("PureState: vector is not normalized");
    }

    int dimS() const { return dim_s_; }
    int dimR() const { return dim_r_; }
    int dim() const { return dim_s_ * dim_r_; }
    const CVec& amps() const { return amps_; }
    Complex amp(int s, int r) const { return amps_(static_cast<Eigen::Index>(s) * dim_r_ + r); }

private:
    int dim_s_;
    int dim_r_;
    CVec amps_;
};

// Hermitian, trace-one density operator. Hermiticity and trace are checked on
// construction (1e-10 entrywise); positivity is checked where eigenvalues are
// actually computed, see von_neumann_entropy.
class DensityOp {
public:
    explicit DensityOp(CMat m) : mat_(std::move(m)) {
        if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
            throw DimError("DensityOp: matrix must be square");
        for (Eigen::Index i = 0; i < mat_.rows(); ++i)
            for (Eigen::Index j = i; j < mat_.cols(); ++j)
                if (std::abs(mat_(i, j) - std::conj(mat_(j, i))) > 1e-10)
                    throw NotHermitian("DensityOp: matrix is not Hermitian");
        if (std::abs(mat_.trace() - Complex(1.0, 0.0)) > 1e-10)
            throw InvalidState("DensityOp: trace differs from 1");
    }

    int dim() const { return static_cast<int>(mat_.rows()); }
    const CMat& mat() const { return mat_; }

private:
    CMat mat_;
};

inline CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline DensityOp outer(const PureState& psi) {
    double norm = psi.amps().norm();
    if (std::abs(norm - 1.0) > 1e-8)
        throw InvalidState("outer: state is not normalized");
    CMat m = psi.amps() * psi.amps().adjoint();
    return DensityOp(std::move(m));
}

inline DensityOp partial_trace_R(const DensityOp& rho, int dim_s, int dim_r) {
    if (dim_s < 1 || dim_r < 1 || rho.dim() != dim_s * dim_r)
        throw DimError("partial_trace_R: dimensions do not factor the operator");
    const CMat& m = rho.mat();
    CMat out = CMat::Zero(dim_s, dim_s);
    for (int i = 0; i < dim_s; ++i)
        for (int j = 0; j < dim_s; ++j) {
            Complex acc(0.0, 0.0);
            for (int r = 0; r < dim_r; ++r)
                acc += m(static_cast<Eigen::Index>(i) * dim_r + r,
                         static_cast<Eigen::Index>(j) * dim_r + r);
            out(i, j) = acc;
        }
    return DensityOp(std::move(out));
}

inline std::vector<double> hermitian_eigenvalues(const CMat& m) {
    if (m.rows() != m.cols())
        throw NotHermitian("hermitian_eigenvalues: matrix is not square");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-8)
                throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMat> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

// Von Neumann entropy in bits. Eigenvalues in [-1e-8, 0) are rounding noise
// and clamp to zero; anything more negative means a broken operator upstream.
inline double von_neumann_entropy(const DensityOp& rho) {
    std::vector<double> ev = hermitian_eigenvalues(rho.mat());
    double h = 0.0;
    for (double lam : ev) {
        if (lam < -1e-8)
            throw NotPSD("von_neumann_entropy: negative eigenvalue");
        if (lam > 0.0)
            h -= lam * std::log2(lam);
    }
    return h;
}

inline double shannon_entropy(const std::vector<double>& p) {
    double sum = 0.0;
    double h = 0.0;
    for (double x : p) {
        if (x < -1e-12)
            throw InvalidDistribution("shannon_entropy: negative probability");
        if (x > 0.0) {
            sum += x;
            h -= x * std::log2(x);
        }
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidDistribution("shannon_entropy: probabilities do not sum to 1");
    return h;
}

} // namespace paulicap
