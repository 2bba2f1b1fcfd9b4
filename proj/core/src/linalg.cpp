#include "cavent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "cavent/tolerances.hpp"

namespace cavent {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cxd> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  if (data_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cxd>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    }
    std::size_t j = 0;
    for (cxd v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

cxd ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix not square");
  cxd t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
  return m;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cxd& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!is_square()) throw std::invalid_argument("hermiticity_defect: not square");
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

bool ComplexMatrix::all_finite() const {
  for (const cxd& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix +=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix -=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cxd scalar) {
  for (cxd& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(cxd scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix *: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cxd aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("basis: index out of range");
  ComplexVector v(dim);
  v[index] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double s = 0.0;
  for (const cxd& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexVector::is_normalized(double tolerance) const {
  return std::abs(norm() - 1.0) <= tolerance;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t r = a.rows() * b.rows();
  const std::size_t c = a.cols() * b.cols();
  if (r > static_cast<std::size_t>(tol::max_tensor_dim) ||
      c > static_cast<std::size_t>(tol::max_tensor_dim)) {
    throw std::invalid_argument(
        "tensor_product: result dimension " + std::to_string(r) + "x" +
        std::to_string(c) + " exceeds the configured maximum (runaway truncation?)");
  }
  ComplexMatrix out(r, c);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cxd aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace_last(const ComplexMatrix& rho, std::size_t dim_keep,
                                 std::size_t dim_trace) {
  const std::size_t d = dim_keep * dim_trace;
  if (!rho.is_square() || rho.rows() != d) {
    throw std::invalid_argument("partial_trace_last: dimension mismatch");
  }
  ComplexMatrix out(dim_keep, dim_keep);
  for (std::size_t i = 0; i < dim_keep; ++i)
    for (std::size_t j = 0; j < dim_keep; ++j) {
      cxd s = 0.0;
      for (std::size_t k = 0; k < dim_trace; ++k)
        s += rho(i * dim_trace + k, j * dim_trace + k);
      out(i, j) = s;
    }
  return out;
}

ComplexVector apply(const ComplexMatrix& m, const ComplexVector& x) {
  if (m.cols() != x.dim()) throw std::invalid_argument("apply: shape mismatch");
  ComplexVector y(m.rows());
  // column-oriented accumulation; a state vector here typically has only a
  // handful of nonzero amplitudes
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const cxd xj = x[j];
    if (xj == 0.0) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) y[i] += m(i, j) * xj;
  }
  return y;
}

ComplexMatrix outer_product(const ComplexVector& x, const ComplexVector& y) {
  ComplexMatrix out(x.dim(), y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const cxd xi = x[i];
    if (xi == 0.0) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) out(i, j) = xi * std::conj(y[j]);
  }
  return out;
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  }
  if (h.hermiticity_defect() > tol::hermiticity) {
    throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
  }
  const std::size_t n = h.rows();

  // Work on the exactly-Hermitian average of h and its adjoint.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cxd v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix vecs = ComplexMatrix::identity(n);

  constexpr int max_sweeps = 60;
  double off = off_diagonal_frobenius(a);
  for (int sweep = 0; sweep < max_sweeps && off >= tol::jacobi_off_diagonal;
       ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cxd hpq = a(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        const cxd phase = hpq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Rotation angle zeroing a(p,q): cot(2*theta) = (app - aqq)/(2|hpq|)
        const double tau = (app - aqq) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Unitary G: G(p,p)=c, G(p,q)=-s*phase, G(q,p)=s*conj(phase), G(q,q)=c
        for (std::size_t k = 0; k < n; ++k) {
          const cxd akp = a(k, p);
          const cxd akq = a(k, q);
          a(k, p) = akp * c + akq * (s * std::conj(phase));
          a(k, q) = -akp * (s * phase) + akq * c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cxd apk = a(p, k);
          const cxd aqk = a(q, k);
          a(p, k) = c * apk + (s * phase) * aqk;
          a(q, k) = -(s * std::conj(phase)) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const cxd vkp = vecs(k, p);
          const cxd vkq = vecs(k, q);
          vecs(k, p) = vkp * c + vkq * (s * std::conj(phase));
          vecs(k, q) = -vkp * (s * phase) + vkq * c;
        }
      }
    }
    off = off_diagonal_frobenius(a);
  }
  if (off >= 1e-10 * std::max(1.0, a.max_abs())) {
    throw std::runtime_error("hermitian_eigensystem: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  Eigensystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    es.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = vecs(i, order[j]);
  }
  return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigensystem(h).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
  Eigensystem es = hermitian_eigensystem(rho);
  std::vector<double> roots(es.values.size());
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    double v = es.values[i];
    if (v < tol::eigenvalue_clamp) {
      throw std::invalid_argument(
          "psd_sqrt: eigenvalue " + std::to_string(v) +
          " below the clamp window; input is not positive semidefinite");
    }
    roots[i] = v > 0.0 ? std::sqrt(v) : 0.0;
  }
  const std::size_t n = rho.rows();
  ComplexMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cxd acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += es.vectors(i, k) * roots[k] * std::conj(es.vectors(j, k));
      s(i, j) = acc;
    }
  return s;
}

}  // namespace cavent
