#ifndef GRAPHKRYLOV_DENSE_MATRIX_HPP
#define GRAPHKRYLOV_DENSE_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace graphkrylov {

// Tolerances used by the small dense kernels, relative to the input scale.
inline constexpr double kTolQr   = 1e-12;
inline constexpr double kTolEig  = 1e-12;
inline constexpr double kTolRank = 1e-10;
inline constexpr double kTolSym  = 1e-12;

/// Dense column-major matrix of doubles. Hosts the small projected objects
/// (H_m, collocation matrices, eigenvector bases), not graph-sized data.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[j * rows_ + i]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }
    double* col(std::size_t j) { return a_.data() + j * rows_; }
    const double* col(std::size_t j) const { return a_.data() + j * rows_; }

    double frobenius_norm() const;
    DenseMatrix transposed() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);

/// a^T * b without forming the transpose.
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);

struct QrResult {
    DenseMatrix q;   // n x N, orthonormal columns
    DenseMatrix r;   // N x N, upper triangular, diag(r) >= 0
    bool deficient;  // some |r_jj| fell below kTolRank * |X|_F
};

/// Reduced QR of a tall block via Householder reflections.
/// The sign convention diag(R) >= 0 makes the factorization unique.
QrResult reduced_qr(const DenseMatrix& x);

struct SymEigDecomposition {
    std::vector<double> eigenvalues;  // ascending
    DenseMatrix eigenvectors;         // orthonormal columns
};

/// Full symmetric eigendecomposition: Householder tridiagonalization
/// followed by the implicit-shift QL iteration. Throws NotSymmetric when
/// |S - S^T| > kTolSym * |S|.
SymEigDecomposition sym_eig(const DenseMatrix& s);

class KernelFunction;

/// phi(S) = V diag(phi(lambda_i)) V^T through the functional calculus.
/// Throws DomainError if an eigenvalue of S leaves [0, lambda_max] by more
/// than the domain slack (a broken spectral bound upstream).
DenseMatrix matrix_function(const DenseMatrix& s, const KernelFunction& phi,
                            double lambda_max);

/// Solve A X = B with partially pivoted LU; A may be indefinite or
/// nonsymmetric. Throws Singular when a pivot drops below kTolRank * |A|.
DenseMatrix solve_linear(const DenseMatrix& a, const DenseMatrix& b);

/// All eigenvalues of a small general square matrix (balancing, Hessenberg
/// reduction, shifted QR). Guarded to N <= 128; complex values come in
/// conjugate pairs. Result sorted by (re, im) for determinism.
std::vector<std::complex<double>> general_eigenvalues(const DenseMatrix& a);

} // namespace graphkrylov

#endif
