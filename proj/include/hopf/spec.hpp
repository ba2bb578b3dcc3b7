/// \file spec.hpp
/// \brief Finite Hopf *-algebras as dense structure-constant tensors:
///        canonical constructors (group algebra, function algebra, dual),
///        element-level structure maps, and the invariant-integral solver.
///
/// Conventions, fixed once for the whole library and the file format:
///   mult[i,j,k]    e_i e_j = sum_k mult[i,j,k] e_k
///   comult[i,j,k]  coproduct(e_i) = sum_{j,k} comult[i,j,k] e_j (x) e_k
///   antipode       coordinate matrix, column i = coordinates of S(e_i)
///   star           antilinear: coords(x*) = star . conj(coords(x))
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopf/group.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

struct NoIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NormalizationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingIntegralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HopfSpec {
  std::size_t dim = 0;
  CTensor mult;      // n x n x n
  CTensor unit;      // n
  CTensor comult;    // n x n x n
  CTensor counit;    // n
  CTensor antipode;  // n x n
  CTensor star;      // n x n (antilinear part; see header comment)
  std::optional<CTensor> integral;  // n
  std::string label;

  /// Largest modulus over all structure constants.
  double max_structure_modulus() const {
    double m = std::max({mult.max_modulus(), unit.max_modulus(),
                         comult.max_modulus(), counit.max_modulus(),
                         antipode.max_modulus(), star.max_modulus()});
    if (integral) m = std::max(m, integral->max_modulus());
    return m;
  }

  Tolerance default_tolerance() const {
    return Tolerance::scaled(max_structure_modulus());
  }

  /// Coordinate vector of basis element e_i.
  CTensor basis(std::size_t i) const {
    CTensor v({dim});
    v[i] = 1.0;
    return v;
  }

  void check_shapes() const {
    auto want = [&](const CTensor& t, std::vector<std::size_t> s,
                    const char* name) {
      if (t.shape() != s)
        throw ShapeError(std::string("HopfSpec: bad shape for ") + name);
    };
    want(mult, {dim, dim, dim}, "mult");
    want(unit, {dim}, "unit");
    want(comult, {dim, dim, dim}, "comult");
    want(counit, {dim}, "counit");
    want(antipode, {dim, dim}, "antipode");
    want(star, {dim, dim}, "star");
    if (integral) want(*integral, {dim}, "integral");
  }
};

/// Product of two coordinate vectors through the structure constants.
inline CTensor multiply(const HopfSpec& h, const CTensor& x,
                        const CTensor& y) {
  if (x.shape() != std::vector<std::size_t>{h.dim} || !x.same_shape(y))
    throw ShapeError("multiply: coordinate length mismatch");
  CTensor r({h.dim});
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (x[i] == Complex{}) continue;
    for (std::size_t j = 0; j < h.dim; ++j) {
      Complex c = x[i] * y[j];
      if (c == Complex{}) continue;
      for (std::size_t k = 0; k < h.dim; ++k)
        r[k] += c * h.mult.at({i, j, k});
    }
  }
  return r;
}

/// x* = star-matrix applied to the entrywise conjugate of x.
inline CTensor star(const HopfSpec& h, const CTensor& x) {
  if (x.shape() != std::vector<std::size_t>{h.dim})
    throw ShapeError("star: coordinate length mismatch");
  return apply_matrix(h.star, x.conjugate());
}

inline CTensor antipode(const HopfSpec& h, const CTensor& x) {
  return apply_matrix(h.antipode, x);
}

inline Complex counit_of(const HopfSpec& h, const CTensor& x) {
  Complex acc{};
  for (std::size_t i = 0; i < h.dim; ++i) acc += h.counit[i] * x[i];
  return acc;
}

/// Iterated coproduct with the stated number of legs, always expanding
/// the leftmost leg. legs = 1 returns x unchanged.
inline CTensor iterated_coproduct(const HopfSpec& h, const CTensor& x,
                                  std::size_t legs) {
  if (legs < 1 || legs > 4)
    throw std::invalid_argument("iterated_coproduct: legs must be in 1..4");
  if (x.shape() != std::vector<std::size_t>{h.dim})
    throw ShapeError("iterated_coproduct: coordinate length mismatch");
  CTensor t = x;
  for (std::size_t step = 1; step < legs; ++step) {
    std::vector<std::size_t> shape(step + 1, h.dim);
    CTensor next(shape);
    std::size_t rest = t.size() / h.dim;  // extent of trailing legs
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t r = 0; r < rest; ++r) {
        Complex c = t[i * rest + r];
        if (c == Complex{}) continue;
        for (std::size_t j = 0; j < h.dim; ++j)
          for (std::size_t k = 0; k < h.dim; ++k) {
            Complex w = h.comult.at({i, j, k});
            if (w == Complex{}) continue;
            next[(j * h.dim + k) * rest + r] += c * w;
          }
      }
    t = std::move(next);
  }
  return t;
}

/// Group algebra C[G]: grouplike basis, S(g) = g* = g^{-1},
/// integral = indicator of the identity.
inline HopfSpec group_algebra(const GroupTable& g) {
  std::size_t n = g.order();
  HopfSpec h;
  h.dim = n;
  h.label = g.label().empty() ? "group-algebra" : "C[" + g.label() + "]";
  h.mult = CTensor({n, n, n});
  h.comult = CTensor({n, n, n});
  h.unit = CTensor({n});
  h.counit = CTensor({n});
  h.antipode = CTensor({n, n});
  h.star = CTensor({n, n});
  CTensor phi({n});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.mult.at({i, j, g.product(i, j)}) = 1.0;
    h.comult.at({i, i, i}) = 1.0;
    h.counit[i] = 1.0;
    h.antipode.at({g.inverse(i), i}) = 1.0;
    h.star.at({g.inverse(i), i}) = 1.0;
  }
  h.unit[g.identity()] = 1.0;
  phi[g.identity()] = 1.0;
  h.integral = phi;
  return h;
}

/// Function algebra F(G): pointwise products of indicator functions,
/// coproduct dual to the group law, integral = uniform weight 1/|G|.
inline HopfSpec function_algebra(const GroupTable& g) {
  std::size_t n = g.order();
  HopfSpec h;
  h.dim = n;
  h.label = g.label().empty() ? "function-algebra" : "F(" + g.label() + ")";
  h.mult = CTensor({n, n, n});
  h.comult = CTensor({n, n, n});
  h.unit = CTensor({n});
  h.counit = CTensor({n});
  h.antipode = CTensor({n, n});
  h.star = CTensor({n, n});
  CTensor phi({n});
  for (std::size_t i = 0; i < n; ++i) {
    h.mult.at({i, i, i}) = 1.0;
    h.unit[i] = 1.0;
    h.antipode.at({g.inverse(i), i}) = 1.0;
    h.star.at({i, i}) = 1.0;
    phi[i] = 1.0 / static_cast<double>(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (g.product(a, b) == i) h.comult.at({i, a, b}) = 1.0;
  }
  h.counit[g.identity()] = 1.0;
  h.integral = phi;
  return h;
}

/// Invariant integral: null-space solve of the stacked left/right
/// invariance and S-invariance constraints, normalized to phi(1) = 1.
inline CTensor find_invariant_integral(const HopfSpec& h,
                                       double rel_threshold = 1e-8) {
  std::size_t n = h.dim;
  // rows: left invariance (i,j), right invariance (i,j), phi(S e_i) = phi(e_i)
  std::size_t rows = 2 * n * n + n;
  CTensor con({rows, n});
  std::size_t r = 0;
  // (phi (x) id) Delta(e_i) = phi(e_i) 1 : for each (i,k):
  //   sum_j comult[i,j,k] phi_j - unit[k] phi_i = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k, ++r) {
      for (std::size_t j = 0; j < n; ++j)
        con.at({r, j}) += h.comult.at({i, j, k});
      con.at({r, i}) -= h.unit[k];
    }
  // (id (x) phi) Delta(e_i) = phi(e_i) 1 : for each (i,j):
  //   sum_k comult[i,j,k] phi_k - unit[j] phi_i = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j, ++r) {
      for (std::size_t k = 0; k < n; ++k)
        con.at({r, k}) += h.comult.at({i, j, k});
      con.at({r, i}) -= h.unit[j];
    }
  // phi(S e_i) = phi(e_i)
  for (std::size_t i = 0; i < n; ++i, ++r) {
    for (std::size_t j = 0; j < n; ++j)
      con.at({r, j}) += h.antipode.at({j, i});
    con.at({r, i}) -= 1.0;
  }

  CTensor ns = null_space(con, rel_threshold);
  if (ns.size() == 0)
    throw NoIntegralError("find_invariant_integral: no invariant functional");
  if (ns.shape()[1] > 1)
    throw AmbiguousIntegralError(
        "find_invariant_integral: invariant functional not unique "
        "(null-space dimension " + std::to_string(ns.shape()[1]) + ")");
  CTensor phi({n});
  for (std::size_t i = 0; i < n; ++i) phi[i] = ns.at({i, 0});
  Complex at_unit{};
  for (std::size_t i = 0; i < n; ++i) at_unit += phi[i] * h.unit[i];
  if (std::abs(at_unit) < rel_threshold)
    throw NormalizationFailure(
        "find_invariant_integral: every solution vanishes on the unit");
  for (std::size_t i = 0; i < n; ++i) phi[i] /= at_unit;
  return phi;
}

/// Dual Hopf *-algebra on the dual basis (index i dual to primal index i).
inline HopfSpec dualize(const HopfSpec& h) {
  std::size_t n = h.dim;
  HopfSpec d;
  d.dim = n;
  d.label = h.label.empty() ? "dual" : "dual(" + h.label + ")";
  d.mult = CTensor({n, n, n});
  d.comult = CTensor({n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (f_i f_j)(e_k) = (f_i (x) f_j)(Delta e_k)
        d.mult.at({i, j, k}) = h.comult.at({k, i, j});
        // Delta'(f_i)(e_j (x) e_k) = f_i(e_j e_k)
        d.comult.at({i, j, k}) = h.mult.at({j, k, i});
      }
  d.unit = h.counit;
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  // f*(a) = conj(f(S(a)*)) gives star' = S^T . conj(star)^T on coordinates
  d.star = matmul(h.antipode.transpose(), h.star.conjugate().transpose());
  d.integral = find_invariant_integral(d);
  return d;
}

}  // namespace hopf
