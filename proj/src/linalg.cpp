#include "covertbeam/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace covertbeam {

double norm2(const ComplexVector& v) {
  double s = 0.0;
  for (const cxd& x : v) s += std::norm(x);
  return s;
}

double norm(const ComplexVector& v) { return std::sqrt(norm2(v)); }

cxd dot(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  cxd s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

ComplexVector scaled(const ComplexVector& v, cxd s) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexVector CMat::column(std::size_t j) const {
  ComplexVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

CMat CMat::adjoint() const {
  CMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

CMat CMat::multiply(const CMat& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: shape mismatch");
  CMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cxd v = at(i, k);
      if (v == cxd{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

ComplexVector CMat::apply(const ComplexVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("apply: shape mismatch");
  ComplexVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cxd s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ComplexVector CMat::apply_adjoint(const ComplexVector& v) const {
  if (rows_ != v.size()) throw std::invalid_argument("apply_adjoint: shape mismatch");
  ComplexVector out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    cxd s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::conj(at(i, j)) * v[i];
    out[j] = s;
  }
  return out;
}

double CMat::max_abs_diff(const CMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

CMat outer(const ComplexVector& a, const ComplexVector& b) {
  CMat m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m.at(i, j) = a[i] * std::conj(b[j]);
  return m;
}

HermitianMatrix::HermitianMatrix(const CMat& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("HermitianMatrix: not square");
  const std::size_t n = m.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m.at(i, j)));
  m_ = CMat(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cxd sym = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
      if (std::abs(m.at(i, j) - sym) > tol * std::max(scale, 1.0))
        throw std::invalid_argument("HermitianMatrix: input not Hermitian");
      m_.at(i, j) = sym;
    }
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  HermitianMatrix h;
  h.m_ = CMat(n, n);
  return h;
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += m_.at(i, i).real();
  return t;
}

double HermitianMatrix::quad_form(const ComplexVector& v) const {
  return dot(v, m_.apply(v)).real();
}

bool HermitianMatrix::is_psd(double tol) const {
  // Cholesky of M + shift*I; success means all eigenvalues >= -shift.
  const std::size_t n = dim();
  const double shift = tol * std::max(trace(), 1e-300);
  CMat l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m_.at(j, j).real() + shift;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l.at(j, k));
    if (d <= 0.0) return false;
    const double ljj = std::sqrt(d);
    l.at(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cxd s = m_.at(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l.at(i, k) * std::conj(l.at(j, k));
      l.at(i, j) = s / ljj;
    }
  }
  return true;
}

CMat null_space_basis(const ComplexVector& h) {
  const std::size_t n = h.size();
  if (n < 2) throw std::invalid_argument("null_space_basis: need dimension >= 2");
  const double hn = norm(h);
  if (!(hn > 0.0)) throw std::invalid_argument("null_space_basis: zero vector");

  std::vector<ComplexVector> basis;
  basis.push_back(scaled(h, 1.0 / hn));

  auto orthogonalize = [&basis](ComplexVector v) {
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexVector& u : basis) {
        const cxd c = dot(u, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
    return v;
  };

  CMat out(n, n - 1);
  std::size_t col = 0;
  for (std::size_t k = 0; k < n && col < n - 1; ++k) {
    ComplexVector e(n);
    e[k] = 1.0;
    ComplexVector v = orthogonalize(std::move(e));
    const double vn = norm(v);
    if (vn < 1e-8) continue;  // e_k nearly parallel to the span so far
    for (std::size_t i = 0; i < n; ++i) v[i] /= vn;
    basis.push_back(v);
    for (std::size_t i = 0; i < n; ++i) out.at(i, col) = v[i];
    ++col;
  }
  if (col != n - 1) throw std::runtime_error("null_space_basis: failed to complete basis");
  return out;
}

}  // namespace covertbeam
