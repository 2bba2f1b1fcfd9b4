#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

// Minimal dense complex linear algebra: just enough for small density
// matrices and the brute-force validator. Row-major storage throughout.

namespace cavent {

using cxd = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> entries);

  static ComplexMatrix identity(std::size_t n);
  // Small literal matrices in tests: ComplexMatrix::from_rows({{1, 0}, {0, 1}}).
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cxd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const std::vector<cxd>& entries() const { return data_; }

  cxd trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;

  double max_abs() const;
  // max |A(i,j) - conj(A(j,i))|; 0 for exactly Hermitian matrices
  double hermiticity_defect() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cxd scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
  friend ComplexMatrix operator*(cxd scalar, ComplexMatrix m);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim) {}
  explicit ComplexVector(std::vector<cxd> entries) : data_(std::move(entries)) {}

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return data_.size(); }
  cxd& operator[](std::size_t i) { return data_[i]; }
  const cxd& operator[](std::size_t i) const { return data_[i]; }

  double norm() const;
  bool is_normalized(double tolerance) const;

 private:
  std::vector<cxd> data_;
};

// Kronecker product; block (i,j) of the result is a(i,j) * b. Throws if the
// result would exceed tol::max_tensor_dim in either dimension.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace over the last (fastest-varying) tensor factor of a square matrix of
// dimension dim_keep * dim_trace: out(i,j) = sum_k rho(i*dt + k, j*dt + k).
ComplexMatrix partial_trace_last(const ComplexMatrix& rho, std::size_t dim_keep,
                                 std::size_t dim_trace);

// y = m x
ComplexVector apply(const ComplexMatrix& m, const ComplexVector& x);

// |x><y|
ComplexMatrix outer_product(const ComplexVector& x, const ComplexVector& y);

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // columns; h = V diag(values) V^dagger
};

// Cyclic Jacobi diagonalisation of a Hermitian matrix (hermiticity defect
// must be below tol::hermiticity). Sweeps run until the off-diagonal
// Frobenius norm is below tol::jacobi_off_diagonal.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

// Eigenvalues only, in descending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Hermitian PSD square root S with S*S == rho, via the eigensystem.
// Eigenvalues in [tol::eigenvalue_clamp, 0) are clamped to zero; anything
// more negative throws (the input was not a density matrix).
ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

}  // namespace cavent
