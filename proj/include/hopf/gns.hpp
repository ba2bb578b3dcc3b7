/// \file gns.hpp
/// \brief GNS representation of a spec with invariant integral: Gram
///        whitening, left-regular representation matrices, vector and
///        operator norms, C*-identity and isometry checks.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "hopf/axioms.hpp"
#include "hopf/double.hpp"
#include "hopf/spec.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

struct GramNotPositiveError : std::runtime_error {
  GramNotPositiveError(const std::string& msg, double min_eigenvalue)
      : std::runtime_error(msg), min_eigenvalue(min_eigenvalue) {}
  double min_eigenvalue;
};

struct GNSData {
  HopfSpec spec;
  CTensor gram;           // gram[i,j] = theta(e_j* e_i)
  CTensor transform;      // coordinates -> orthonormal basis of K
  CTensor transform_inv;
  std::vector<CTensor> rep;  // rep[i] = pi(e_i) in the orthonormal basis
  double gram_min_eig = 0.0;
  double gram_max_eig = 0.0;

  /// pi(x) = sum_i x_i rep[i].
  CTensor represent(const CTensor& x) const {
    std::size_t n = spec.dim;
    CTensor m({n, n});
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == Complex{}) continue;
      for (std::size_t f = 0; f < n * n; ++f) m[f] += x[i] * rep[i][f];
    }
    return m;
  }

  Complex theta_of(const CTensor& x) const {
    Complex acc{};
    for (std::size_t i = 0; i < spec.dim; ++i)
      acc += (*spec.integral)[i] * x[i];
    return acc;
  }
};

/// Whitening GNS construction from the Hermitian eigendecomposition of
/// the Gram matrix; near-degenerate Gram matrices fail loudly through
/// the eigenvalue report.
inline GNSData gns_build(const HopfSpec& h, const Tolerance& tol) {
  if (!h.integral)
    throw MissingIntegralError("gns_build: spec has no integral");
  std::size_t n = h.dim;
  GNSData g;
  g.spec = h;
  g.gram = integral_gram(h);

  double herm = max_abs_diff(g.gram, g.gram.transpose().conjugate());
  auto [vals, u] = hermitian_eig(g.gram, std::max(2 * herm, 1e-9));
  g.gram_min_eig = vals.front();
  g.gram_max_eig = vals.back();
  if (g.gram_min_eig <= tol.abs)
    throw GramNotPositiveError(
        "gns_build: Gram matrix is not positive definite (min eigenvalue " +
            std::to_string(g.gram_min_eig) + ")",
        g.gram_min_eig);

  // W = Lambda^{1/2} U*,  W^{-1} = U Lambda^{-1/2};  then z = Wx has
  // z_y^dagger z_x = theta(y^* x).
  CTensor w({n, n}), winv({n, n});
  for (std::size_t r = 0; r < n; ++r) {
    double s = std::sqrt(vals[r]);
    for (std::size_t c = 0; c < n; ++c) {
      w.at({r, c}) = s * std::conj(u.at({c, r}));
      winv.at({r, c}) = u.at({r, c}) / std::sqrt(vals[c]);
    }
  }
  g.transform = w;
  g.transform_inv = winv;

  g.rep.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    CTensor li({n, n});  // left multiplication by e_i
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) li.at({k, j}) = h.mult.at({i, j, k});
    g.rep.push_back(matmul(w, matmul(li, winv)));
  }

  // faithfulness: the coordinate -> operator map has trivial kernel
  CTensor stack({n * n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t f = 0; f < n * n; ++f) stack[f * n + i] = g.rep[i][f];
  auto sv = singular_values(stack);
  if (sv.empty() || sv.back() <= sv.front() * tol.rel)
    throw GramNotPositiveError("gns_build: representation is not faithful",
                               g.gram_min_eig);
  return g;
}

/// theta(x x*)^{1/2}: the displayed C*-norm (the GNS vector norm of x*).
inline double vector_norm(const GNSData& g, const CTensor& x) {
  Complex v = g.theta_of(multiply(g.spec, x, star(g.spec, x)));
  return std::sqrt(std::max(0.0, v.real()));
}

struct HilbertNorms {
  double star_left;   // theta(x* x)^{1/2}
  double star_right;  // theta(x x*)^{1/2}
  double discrepancy() const { return std::abs(star_left - star_right); }
};

inline HilbertNorms hilbert_norms(const GNSData& g, const CTensor& x) {
  CTensor xs = star(g.spec, x);
  Complex l = g.theta_of(multiply(g.spec, xs, x));
  Complex r = g.theta_of(multiply(g.spec, x, xs));
  return {std::sqrt(std::max(0.0, l.real())),
          std::sqrt(std::max(0.0, r.real()))};
}

/// Operator norm of pi(x) on the GNS space.
inline double element_operator_norm(const GNSData& g, const CTensor& x) {
  return operator_norm(g.represent(x));
}

/// C*-identity ||pi(x)* pi(x)|| = ||pi(x)||^2 on seeded random samples,
/// plus multiplicativity and star compatibility of pi on basis pairs.
inline AxiomReport verify_cstar_identity(const GNSData& g,
                                         std::size_t samples,
                                         std::uint64_t seed,
                                         const Tolerance& tol) {
  std::size_t n = g.spec.dim;
  AxiomReport rep;

  {
    double r = 0.0;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      CTensor x = detail::random_complex_vector(n, rng);
      CTensor px = g.represent(x);
      double norm = operator_norm(px);
      double lhs = operator_norm(matmul(px.transpose().conjugate(), px));
      if (norm > 0)
        r = std::max(r, std::abs(lhs - norm * norm) / (norm * norm));
    }
    rep.add("cstar-identity-sampled", r, tol.rel);
  }

  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CTensor lhs = matmul(g.rep[i], g.rep[j]);
        CTensor rhs({n, n});
        for (std::size_t k = 0; k < n; ++k) {
          Complex c = g.spec.mult.at({i, j, k});
          if (c == Complex{}) continue;
          for (std::size_t f = 0; f < n * n; ++f) rhs[f] += c * g.rep[k][f];
        }
        r = std::max(r, max_abs_diff(lhs, rhs));
      }
    rep.add("representation-multiplicative", r, tol.abs);
  }

  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CTensor lhs = g.represent(star(g.spec, g.spec.basis(i)));
      r = std::max(r, max_abs_diff(lhs, g.rep[i].transpose().conjugate()));
    }
    r = std::max(r, max_abs_diff(g.represent(g.spec.unit),
                                 CTensor::identity(n)));
    rep.add("representation-star-unital", r, tol.abs);
  }

  return rep;
}

/// Isometry of the canonical embeddings and norm multiplicativity on
/// elementary tensors, in the GNS vector norm.
inline AxiomReport verify_isometry(const DoubleSpec& d, const GNSData& ga,
                                   const GNSData& gb, const GNSData& gd,
                                   const Tolerance& tol,
                                   std::size_t samples = 100,
                                   std::uint64_t seed = 1) {
  AxiomReport rep;
  std::mt19937_64 rng(seed);

  auto rel = [](double x, double y) {
    return std::abs(x - y) / std::max(1.0, std::max(x, y));
  };

  {
    double r = 0.0;
    for (std::size_t i = 0; i < d.n_A; ++i) {
      CTensor a = d.source.A.basis(i);
      r = std::max(r, rel(vector_norm(gd, d.embed_a(a)), vector_norm(ga, a)));
    }
    for (std::size_t s = 0; s < samples; ++s) {
      CTensor a = detail::random_complex_vector(d.n_A, rng);
      r = std::max(r, rel(vector_norm(gd, d.embed_a(a)), vector_norm(ga, a)));
    }
    rep.add("embed-A-isometry", r, tol.rel);
  }

  {
    double r = 0.0;
    for (std::size_t j = 0; j < d.n_B; ++j) {
      CTensor b = d.source.B.basis(j);
      r = std::max(r, rel(vector_norm(gd, d.embed_b(b)), vector_norm(gb, b)));
    }
    for (std::size_t s = 0; s < samples; ++s) {
      CTensor b = detail::random_complex_vector(d.n_B, rng);
      r = std::max(r, rel(vector_norm(gd, d.embed_b(b)), vector_norm(gb, b)));
    }
    rep.add("embed-B-isometry", r, tol.rel);
  }

  {
    double r = 0.0;
    for (std::size_t i = 0; i < d.n_A; ++i)
      for (std::size_t j = 0; j < d.n_B; ++j) {
        CTensor a = d.source.A.basis(i), b = d.source.B.basis(j);
        r = std::max(r, rel(vector_norm(gd, d.elementary(a, b)),
                            vector_norm(ga, a) * vector_norm(gb, b)));
      }
    for (std::size_t s = 0; s < samples; ++s) {
      CTensor a = detail::random_complex_vector(d.n_A, rng);
      CTensor b = detail::random_complex_vector(d.n_B, rng);
      r = std::max(r, rel(vector_norm(gd, d.elementary(a, b)),
                          vector_norm(ga, a) * vector_norm(gb, b)));
    }
    rep.add("elementary-norm-multiplicative", r, tol.rel);
  }

  return rep;
}

}  // namespace hopf
