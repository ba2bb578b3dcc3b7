/// \file axioms.hpp
/// \brief Numerical verification of the Hopf *-algebra axioms and the
///        extra properties a finite Hopf C*-algebra carries (involutive
///        antipode, invariant integral, positive Gram form).
///
/// Every check is an exhaustive max-residual loop over basis tuples;
/// failures land in the report, never in exceptions.
#pragma once

#include <cmath>

#include "hopf/report.hpp"
#include "hopf/spec.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

namespace detail {

/// Column i of an n x n coordinate matrix, as a vector.
inline CTensor column(const CTensor& m, std::size_t i) {
  CTensor v({m.shape()[0]});
  for (std::size_t r = 0; r < m.shape()[0]; ++r) v[r] = m.at({r, i});
  return v;
}

}  // namespace detail

/// Gram matrix of the integral: gram[i,j] = phi(e_j* e_i).
inline CTensor integral_gram(const HopfSpec& h) {
  if (!h.integral)
    throw MissingIntegralError("integral_gram: spec has no integral");
  std::size_t n = h.dim;
  const CTensor& phi = *h.integral;
  CTensor g({n, n});
  for (std::size_t j = 0; j < n; ++j) {
    CTensor ej_star = detail::column(h.star, j);
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{};
      for (std::size_t m = 0; m < n; ++m) {
        if (ej_star[m] == Complex{}) continue;
        for (std::size_t k = 0; k < n; ++k)
          acc += ej_star[m] * h.mult.at({m, i, k}) * phi[k];
      }
      g.at({i, j}) = acc;
    }
  }
  return g;
}

/// All axioms of a Hopf *-algebra, one max-residual entry per axiom.
inline AxiomReport verify_hopf_star(const HopfSpec& h, const Tolerance& tol) {
  h.check_shapes();
  std::size_t n = h.dim;
  AxiomReport rep;

  // unit is a two-sided multiplicative identity
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CTensor ei = h.basis(i);
      r = std::max(r, max_abs_diff(multiply(h, h.unit, ei), ei));
      r = std::max(r, max_abs_diff(multiply(h, ei, h.unit), ei));
    }
    rep.add("unit", r, tol.abs);
  }

  // associativity of mult
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            Complex lhs{}, rhs{};
            for (std::size_t m = 0; m < n; ++m) {
              lhs += h.mult.at({i, j, m}) * h.mult.at({m, k, l});
              rhs += h.mult.at({j, k, m}) * h.mult.at({i, m, l});
            }
            r = std::max(r, std::abs(lhs - rhs));
          }
        }
    rep.add("associativity", r, tol.abs);
  }

  // coassociativity
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CTensor left = iterated_coproduct(h, h.basis(i), 3);  // leftmost-first
      // rightmost expansion: (id (x) Delta) Delta
      CTensor right({n, n, n});
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t m = 0; m < n; ++m) {
          Complex c = h.comult.at({i, p, m});
          if (c == Complex{}) continue;
          for (std::size_t q = 0; q < n; ++q)
            for (std::size_t s = 0; s < n; ++s)
              right.at({p, q, s}) += c * h.comult.at({m, q, s});
        }
      r = std::max(r, max_abs_diff(left, right));
    }
    rep.add("coassociativity", r, tol.abs);
  }

  // counit law
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Complex lhs{}, rhs{};
        for (std::size_t j = 0; j < n; ++j) {
          lhs += h.comult.at({i, j, k}) * h.counit[j];
          rhs += h.comult.at({i, k, j}) * h.counit[j];
        }
        Complex want = (i == k) ? Complex{1.0} : Complex{};
        r = std::max({r, std::abs(lhs - want), std::abs(rhs - want)});
      }
    rep.add("counit", r, tol.abs);
  }

  // antipode law m(S (x) id)Delta = m(id (x) S)Delta = counit(.) 1
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CTensor lhs({n}), rhs({n});
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Complex c = h.comult.at({i, j, k});
          if (c == Complex{}) continue;
          for (std::size_t m = 0; m < n; ++m) {
            Complex sj = h.antipode.at({m, j});
            Complex sk = h.antipode.at({m, k});
            if (sj != Complex{})
              for (std::size_t l = 0; l < n; ++l)
                lhs[l] += c * sj * h.mult.at({m, k, l});
            if (sk != Complex{})
              for (std::size_t l = 0; l < n; ++l)
                rhs[l] += c * sk * h.mult.at({j, m, l});
          }
        }
      CTensor want = h.counit[i] * h.unit;
      r = std::max({r, max_abs_diff(lhs, want), max_abs_diff(rhs, want)});
    }
    rep.add("antipode", r, tol.abs);
  }

  // star is an antilinear algebra involution: x** = x, (xy)* = y* x*
  {
    double r = max_abs_diff(matmul(h.star, h.star.conjugate()),
                            CTensor::identity(n));
    for (std::size_t i = 0; i < n; ++i) {
      CTensor si = detail::column(h.star, i);
      for (std::size_t j = 0; j < n; ++j) {
        CTensor lhs({n});
        for (std::size_t k = 0; k < n; ++k) {
          Complex c = std::conj(h.mult.at({i, j, k}));
          if (c == Complex{}) continue;
          for (std::size_t l = 0; l < n; ++l)
            lhs[l] += c * h.star.at({l, k});
        }
        CTensor rhs = multiply(h, detail::column(h.star, j), si);
        r = std::max(r, max_abs_diff(lhs, rhs));
      }
    }
    rep.add("star-involution", r, tol.abs);
  }

  // comultiplication is a *-homomorphism:
  // Delta(x*) = Delta(x)* legwise, Delta(xy) = Delta(x)Delta(y), Delta(1)=1(x)1
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CTensor lhs({n, n});  // Delta(e_i*)
      for (std::size_t p = 0; p < n; ++p) {
        Complex c = h.star.at({p, i});
        if (c == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            lhs.at({j, k}) += c * h.comult.at({p, j, k});
      }
      CTensor rhs({n, n});  // (Delta e_i)* legwise
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Complex c = std::conj(h.comult.at({i, j, k}));
          if (c == Complex{}) continue;
          for (std::size_t u = 0; u < n; ++u) {
            Complex sj = h.star.at({u, j});
            if (sj == Complex{}) continue;
            for (std::size_t v = 0; v < n; ++v)
              rhs.at({u, v}) += c * sj * h.star.at({v, k});
          }
        }
      r = std::max(r, max_abs_diff(lhs, rhs));
    }
    // multiplicativity on basis pairs
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CTensor lhs({n, n});
        for (std::size_t k = 0; k < n; ++k) {
          Complex c = h.mult.at({i, j, k});
          if (c == Complex{}) continue;
          for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
              lhs.at({u, v}) += c * h.comult.at({k, u, v});
        }
        CTensor rhs({n, n});
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            Complex ci = h.comult.at({i, p, q});
            if (ci == Complex{}) continue;
            for (std::size_t s = 0; s < n; ++s)
              for (std::size_t t = 0; t < n; ++t) {
                Complex cj = ci * h.comult.at({j, s, t});
                if (cj == Complex{}) continue;
                for (std::size_t u = 0; u < n; ++u) {
                  Complex mu = h.mult.at({p, s, u});
                  if (mu == Complex{}) continue;
                  for (std::size_t v = 0; v < n; ++v)
                    rhs.at({u, v}) += cj * mu * h.mult.at({q, t, v});
                }
              }
          }
        r = std::max(r, max_abs_diff(lhs, rhs));
      }
    // unitality
    CTensor d1 = iterated_coproduct(h, h.unit, 2);
    r = std::max(r, max_abs_diff(d1, tensor_product(h.unit, h.unit)));
    rep.add("comult-star-homomorphism", r, tol.abs);
  }

  // counit is a *-homomorphism
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex eps_star{};
      for (std::size_t p = 0; p < n; ++p)
        eps_star += h.star.at({p, i}) * h.counit[p];
      r = std::max(r, std::abs(eps_star - std::conj(h.counit[i])));
      for (std::size_t j = 0; j < n; ++j) {
        Complex lhs{};
        for (std::size_t k = 0; k < n; ++k)
          lhs += h.mult.at({i, j, k}) * h.counit[k];
        r = std::max(r, std::abs(lhs - h.counit[i] * h.counit[j]));
      }
    }
    r = std::max(r, std::abs(counit_of(h, h.unit) - Complex{1.0}));
    rep.add("counit-star-homomorphism", r, tol.abs);
  }

  // S(S(a)*)* = a: star . conj(S) . conj(star) . S = id on coordinates
  {
    CTensor m = matmul(
        h.star,
        matmul(h.antipode.conjugate(),
               matmul(h.star.conjugate(), h.antipode)));
    rep.add("antipode-star-square", max_abs_diff(m, CTensor::identity(n)),
            tol.abs);
  }

  // S anti-multiplicative: S(xy) = S(y)S(x)
  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CTensor si = detail::column(h.antipode, i);
      for (std::size_t j = 0; j < n; ++j) {
        CTensor lhs({n});
        for (std::size_t k = 0; k < n; ++k) {
          Complex c = h.mult.at({i, j, k});
          if (c == Complex{}) continue;
          for (std::size_t l = 0; l < n; ++l)
            lhs[l] += c * h.antipode.at({l, k});
        }
        CTensor rhs = multiply(h, detail::column(h.antipode, j), si);
        r = std::max(r, max_abs_diff(lhs, rhs));
      }
    }
    rep.add("antipode-antimultiplicative", r, tol.abs);
  }

  return rep;
}

/// Finite Hopf C*-algebra properties: S^2 = id, invariant integral with
/// phi(1) = 1 and phi = phi o S, and a positive definite Gram form.
inline AxiomReport verify_cstar(const HopfSpec& h, const Tolerance& tol) {
  if (!h.integral)
    throw MissingIntegralError("verify_cstar: spec has no integral");
  std::size_t n = h.dim;
  const CTensor& phi = *h.integral;
  AxiomReport rep;

  rep.add("antipode-squared-identity",
          max_abs_diff(matmul(h.antipode, h.antipode), CTensor::identity(n)),
          tol.abs);

  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        Complex left{}, right{};
        for (std::size_t j = 0; j < n; ++j) {
          left += h.comult.at({i, j, k}) * phi[j];
          right += h.comult.at({i, k, j}) * phi[j];
        }
        Complex want = phi[i] * h.unit[k];
        r = std::max({r, std::abs(left - want), std::abs(right - want)});
      }
    }
    rep.add("integral-invariance", r, tol.abs);
  }

  {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex phi_s{};
      for (std::size_t j = 0; j < n; ++j)
        phi_s += h.antipode.at({j, i}) * phi[j];
      r = std::max(r, std::abs(phi_s - phi[i]));
    }
    rep.add("integral-antipode-invariance", r, tol.abs);
  }

  {
    CTensor gram = integral_gram(h);
    double herm = max_abs_diff(gram, gram.transpose().conjugate());
    rep.add("gram-hermitian", herm, tol.abs);
    if (herm <= 100 * tol.abs + 1e-9) {
      auto [vals, vecs] = hermitian_eig(gram, std::max(herm * 2, 1e-9));
      double min_eig = vals.front();
      rep.add_flag("gram-positivity", min_eig > tol.abs,
                   std::max(0.0, tol.abs - min_eig));
    } else {
      rep.add_flag("gram-positivity", false, herm);
    }
  }

  {
    Complex at_unit{};
    for (std::size_t i = 0; i < n; ++i) at_unit += phi[i] * h.unit[i];
    rep.add("integral-normalization", std::abs(at_unit - Complex{1.0}),
            tol.abs);
  }

  return rep;
}

}  // namespace hopf
