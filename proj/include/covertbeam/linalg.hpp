#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Small dense complex linear algebra. Problem sizes are tiny (vectors up to
// ~16 entries), so everything is plain loops over std::vector storage.

namespace covertbeam {

using cxd = std::complex<double>;
using ComplexVector = std::vector<cxd>;

double norm2(const ComplexVector& v);            // squared Euclidean norm
double norm(const ComplexVector& v);
cxd dot(const ComplexVector& a, const ComplexVector& b);  // conj(a)^T b

ComplexVector scaled(const ComplexVector& v, cxd s);

// Dense complex matrix, row-major.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cxd& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cxd& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  static CMat identity(std::size_t n);

  ComplexVector column(std::size_t j) const;

  CMat adjoint() const;
  CMat multiply(const CMat& rhs) const;
  ComplexVector apply(const ComplexVector& v) const;         // this * v
  ComplexVector apply_adjoint(const ComplexVector& v) const; // this^H * v

  double max_abs_diff(const CMat& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

CMat outer(const ComplexVector& a, const ComplexVector& b);  // a b^H

// Hermitian matrix carrier. Construction symmetrizes and checks that the
// input was Hermitian to begin with (tolerance relative to the largest entry).
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const CMat& m, double tol = 1e-12);

  static HermitianMatrix zero(std::size_t n);

  std::size_t dim() const { return m_.rows(); }
  const CMat& mat() const { return m_; }
  const cxd& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  double trace() const;
  double quad_form(const ComplexVector& v) const;  // v^H M v (real part)

  // PSD up to a shift of tol * trace on the diagonal (Cholesky-based).
  bool is_psd(double tol = 1e-10) const;

 private:
  CMat m_;
};

// Orthonormal basis of the orthogonal complement of h (N x (N-1) columns).
// Modified Gram-Schmidt with reorthogonalization over {h/|h|, e_0, e_1, ...}.
// Throws std::invalid_argument for N < 2 or h == 0.
CMat null_space_basis(const ComplexVector& h);

}  // namespace covertbeam
