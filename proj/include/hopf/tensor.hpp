/// \file tensor.hpp
/// \brief Dense complex tensors with row-major flat storage, plus the
///        linear-algebra primitives the rest of the library is built on
///        (contractions, Hermitian spectra, singular values, residuals).
#pragma once

#include <algorithm>
#include <complex>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hopf {

using Complex = std::complex<double>;

/// Any constructed tensor above this entry count is rejected.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 26;

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonHermitianError : std::runtime_error {
  NonHermitianError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual;
};
struct NonFiniteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Absolute/relative tolerance pair. At least one must be positive.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-8;

  Tolerance() = default;
  Tolerance(double abs_, double rel_) : abs(abs_), rel(rel_) {
    if (abs < 0 || rel < 0 || (abs == 0 && rel == 0))
      throw std::invalid_argument("Tolerance: need abs > 0 or rel > 0");
  }

  /// Default tolerance scaled by the largest structure-constant modulus
  /// of the specs involved.
  static Tolerance scaled(double max_modulus) {
    return Tolerance(1e-9 * (1.0 + max_modulus), 1e-8);
  }
};

/// Dense complex tensor, row-major flat storage.
class CTensor {
 public:
  CTensor() = default;

  explicit CTensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)) {
    std::size_t n = checked_size(shape_);
    data_.assign(n, Complex{0.0, 0.0});
  }

  CTensor(std::vector<std::size_t> shape, std::vector<Complex> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_size(shape_) != data_.size())
      throw ShapeError("CTensor: data length does not match shape");
    ensure_finite();
  }

  static CTensor scalar(Complex v) {
    return CTensor({}, {v});
  }
  static CTensor vector(std::vector<Complex> v) {
    std::size_t n = v.size();
    return CTensor({n}, std::move(v));
  }
  static CTensor identity(std::size_t n) {
    CTensor m({n, n});
    for (std::size_t i = 0; i < n; ++i) m.at({i, i}) = 1.0;
    return m;
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  std::size_t flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != shape_.size())
      throw ShapeError("CTensor: index rank mismatch");
    std::size_t f = 0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
      if (idx[d] >= shape_[d]) throw ShapeError("CTensor: index out of range");
      f = f * shape_[d] + idx[d];
    }
    return f;
  }

  Complex& at(const std::vector<std::size_t>& idx) {
    return data_[flat_index(idx)];
  }
  const Complex& at(const std::vector<std::size_t>& idx) const {
    return data_[flat_index(idx)];
  }

  Complex& operator[](std::size_t flat) { return data_[flat]; }
  const Complex& operator[](std::size_t flat) const { return data_[flat]; }

  bool same_shape(const CTensor& o) const { return shape_ == o.shape_; }

  void ensure_finite() const {
    for (const Complex& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw NonFiniteError("CTensor: non-finite entry");
  }

  double max_modulus() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  CTensor conjugate() const {
    CTensor r = *this;
    for (Complex& z : r.data_) z = std::conj(z);
    return r;
  }

  /// Matrix transpose (rank-2 only).
  CTensor transpose() const {
    if (rank() != 2) throw ShapeError("transpose: rank-2 tensor required");
    CTensor r({shape_[1], shape_[0]});
    for (std::size_t i = 0; i < shape_[0]; ++i)
      for (std::size_t j = 0; j < shape_[1]; ++j)
        r.at({j, i}) = at({i, j});
    return r;
  }

  CTensor& operator+=(const CTensor& o) {
    if (!same_shape(o)) throw ShapeError("operator+=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  CTensor& operator-=(const CTensor& o) {
    if (!same_shape(o)) throw ShapeError("operator-=: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  CTensor& operator*=(Complex c) {
    for (Complex& z : data_) z *= c;
    return *this;
  }
  friend CTensor operator+(CTensor a, const CTensor& b) { return a += b; }
  friend CTensor operator-(CTensor a, const CTensor& b) { return a -= b; }
  friend CTensor operator*(Complex c, CTensor a) { return a *= c; }

 private:
  static std::size_t checked_size(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) {
      if (d == 0) throw ShapeError("CTensor: zero extent");
      if (d > kMaxTensorEntries || n > kMaxTensorEntries / d)
        throw CapacityError("CTensor: size cap exceeded");
      n *= d;
    }
    return n;
  }

  std::vector<std::size_t> shape_;
  std::vector<Complex> data_;
};

/// Outer product: shape is the concatenation of the input shapes.
inline CTensor tensor_product(const CTensor& x, const CTensor& y) {
  std::vector<std::size_t> shape = x.shape();
  shape.insert(shape.end(), y.shape().begin(), y.shape().end());
  if (x.size() > kMaxTensorEntries / y.size())
    throw CapacityError("tensor_product: size cap exceeded");
  CTensor r(shape);
  std::size_t ny = y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == Complex{}) continue;
    for (std::size_t j = 0; j < ny; ++j) r[i * ny + j] = x[i] * y[j];
  }
  return r;
}

/// Einstein contraction of x with y over the given (x-axis, y-axis) pairs.
/// Remaining axes come out in x-then-y order.
inline CTensor contract(const CTensor& x, const CTensor& y,
                        const std::vector<std::pair<std::size_t, std::size_t>>&
                            axis_pairs) {
  std::vector<bool> x_used(x.rank(), false), y_used(y.rank(), false);
  for (auto [ax, ay] : axis_pairs) {
    if (ax >= x.rank() || ay >= y.rank())
      throw ShapeError("contract: axis out of range");
    if (x_used[ax] || y_used[ay])
      throw ShapeError("contract: repeated axis");
    if (x.shape()[ax] != y.shape()[ay])
      throw ShapeError("contract: paired extents differ");
    x_used[ax] = true;
    y_used[ay] = true;
  }

  std::vector<std::size_t> x_free, y_free, out_shape, sum_extents;
  for (std::size_t d = 0; d < x.rank(); ++d)
    if (!x_used[d]) {
      x_free.push_back(d);
      out_shape.push_back(x.shape()[d]);
    }
  for (std::size_t d = 0; d < y.rank(); ++d)
    if (!y_used[d]) {
      y_free.push_back(d);
      out_shape.push_back(y.shape()[d]);
    }
  for (auto [ax, ay] : axis_pairs) sum_extents.push_back(x.shape()[ax]);

  CTensor out(out_shape);

  std::vector<std::size_t> xi(x.rank(), 0), yi(y.rank(), 0);
  std::vector<std::size_t> oi(out_shape.size(), 0), si(axis_pairs.size(), 0);

  auto advance = [](std::vector<std::size_t>& idx,
                    const std::vector<std::size_t>& extents) -> bool {
    for (std::size_t d = idx.size(); d-- > 0;) {
      if (++idx[d] < extents[d]) return true;
      idx[d] = 0;
    }
    return false;
  };

  do {
    // place free indices
    for (std::size_t k = 0; k < x_free.size(); ++k) xi[x_free[k]] = oi[k];
    for (std::size_t k = 0; k < y_free.size(); ++k)
      yi[y_free[k]] = oi[x_free.size() + k];
    Complex acc{};
    std::fill(si.begin(), si.end(), 0);
    do {
      for (std::size_t k = 0; k < axis_pairs.size(); ++k) {
        xi[axis_pairs[k].first] = si[k];
        yi[axis_pairs[k].second] = si[k];
      }
      acc += x.at(xi) * y.at(yi);
    } while (!si.empty() && advance(si, sum_extents));
    out.at(oi) = acc;
  } while (!oi.empty() && advance(oi, out_shape));

  return out;
}

inline double max_abs_diff(const CTensor& x, const CTensor& y) {
  if (!x.same_shape(y)) throw ShapeError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

namespace detail {

inline Eigen::MatrixXcd to_eigen(const CTensor& m) {
  if (m.rank() != 2) throw ShapeError("to_eigen: matrix required");
  Eigen::MatrixXcd e(m.shape()[0], m.shape()[1]);
  for (std::size_t i = 0; i < m.shape()[0]; ++i)
    for (std::size_t j = 0; j < m.shape()[1]; ++j) e(i, j) = m.at({i, j});
  return e;
}

inline CTensor from_eigen(const Eigen::MatrixXcd& e) {
  CTensor m({static_cast<std::size_t>(e.rows()),
             static_cast<std::size_t>(e.cols())});
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j)
      m.at({static_cast<std::size_t>(i), static_cast<std::size_t>(j)}) =
          e(i, j);
  return m;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// transform holds the eigenvectors as columns (unitary up to tolerance).
inline std::pair<std::vector<double>, CTensor> hermitian_eig(
    const CTensor& m, double herm_tol = 1e-9) {
  if (m.rank() != 2 || m.shape()[0] != m.shape()[1])
    throw ShapeError("hermitian_eig: square matrix required");
  Eigen::MatrixXcd e = detail::to_eigen(m);
  double asym = (e - e.adjoint()).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
  if (asym > herm_tol * scale)
    throw NonHermitianError("hermitian_eig: input not Hermitian", asym);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      (e + e.adjoint()) / 2.0);
  std::vector<double> vals(solver.eigenvalues().data(),
                           solver.eigenvalues().data() + e.rows());
  return {std::move(vals), detail::from_eigen(solver.eigenvectors())};
}

inline std::vector<double> singular_values(const CTensor& m) {
  Eigen::MatrixXcd e = detail::to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

/// Largest singular value.
inline double operator_norm(const CTensor& m) {
  auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

/// Orthonormal basis of the null space at a relative singular-value
/// threshold; each column of the result spans one null direction.
inline CTensor null_space(const CTensor& m, double rel_threshold) {
  Eigen::MatrixXcd e = detail::to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double cut = s.size() ? s(0) * rel_threshold : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cut) ++rank;
  Eigen::Index dim = e.cols() - rank;
  if (dim == 0) return CTensor();  // empty: no null space
  Eigen::MatrixXcd v = svd.matrixV().rightCols(dim);
  return detail::from_eigen(v);
}

/// Matrix applied to a coordinate vector: (M v)_r = sum_c M[r,c] v_c.
inline CTensor apply_matrix(const CTensor& m, const CTensor& v) {
  if (m.rank() != 2 || v.rank() != 1 || m.shape()[1] != v.shape()[0])
    throw ShapeError("apply_matrix: shape mismatch");
  CTensor r({m.shape()[0]});
  for (std::size_t i = 0; i < m.shape()[0]; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < m.shape()[1]; ++j)
      acc += m.at({i, j}) * v[j];
    r[i] = acc;
  }
  return r;
}

inline CTensor matmul(const CTensor& a, const CTensor& b) {
  return contract(a, b, {{1, 0}});
}

}  // namespace hopf
