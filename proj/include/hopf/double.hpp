/// \file double.hpp
/// \brief Quantum double of a non-degenerate pairing: twisted
///        multiplication, star structure, Hopf maps, the integral
///        theta = phi_A (x) phi_B, verification, and an independent
///        classical group-double oracle.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "hopf/axioms.hpp"
#include "hopf/pairing.hpp"
#include "hopf/spec.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

struct DegeneratePairingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexAlignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The double D(A, B) materialized as a plain HopfSpec on the basis
/// (a_i, b_j) with index i * n_B + j, so every verifier applies unchanged.
struct DoubleSpec {
  HopfSpec H;
  std::size_t n_A = 0;
  std::size_t n_B = 0;
  CTensor embed_A;  // n_A x (n_A n_B), row i = coords of (a_i, 1_B)
  CTensor embed_B;  // n_B x (n_A n_B), row j = coords of (1_A, b_j)
  CTensor theta;    // n_A n_B, equal to H.integral
  PairingSpec source;

  std::size_t index(std::size_t i, std::size_t j) const {
    return i * n_B + j;
  }

  /// Coordinates of the elementary tensor (a, b).
  CTensor elementary(const CTensor& a, const CTensor& b) const {
    CTensor r({n_A * n_B});
    for (std::size_t i = 0; i < n_A; ++i)
      for (std::size_t j = 0; j < n_B; ++j) r[index(i, j)] = a[i] * b[j];
    return r;
  }

  /// i_A(x) = (x, 1_B) in double coordinates.
  CTensor embed_a(const CTensor& x) const {
    CTensor r({n_A * n_B});
    for (std::size_t i = 0; i < n_A; ++i) {
      if (x[i] == Complex{}) continue;
      for (std::size_t d = 0; d < n_A * n_B; ++d)
        r[d] += x[i] * embed_A.at({i, d});
    }
    return r;
  }

  CTensor embed_b(const CTensor& y) const {
    CTensor r({n_A * n_B});
    for (std::size_t j = 0; j < n_B; ++j) {
      if (y[j] == Complex{}) continue;
      for (std::size_t d = 0; d < n_A * n_B; ++d)
        r[d] += y[j] * embed_B.at({j, d});
    }
    return r;
  }
};

/// Build D(A, B) from a verified non-degenerate pairing with integrals
/// on both sides. S_B^{-1} in the multiplication display is realized as
/// S_B itself (S^2 = id holds for every admissible input).
inline DoubleSpec build_double(const PairingSpec& pr, const Tolerance& tol) {
  pr.check_shapes();
  if (!pr.A.integral || !pr.B.integral)
    throw MissingIntegralError("build_double: both specs need integrals");
  if (!nondegeneracy(pr, tol).nondegenerate)
    throw DegeneratePairingError("build_double: pairing is degenerate");

  std::size_t na = pr.A.dim, nb = pr.B.dim, nd = na * nb;
  if (na > kMaxTensorEntries / nb || nd > kMaxTensorEntries / nd / nd)
    throw CapacityError("build_double: double exceeds the size cap");

  const HopfSpec& A = pr.A;
  const HopfSpec& B = pr.B;
  const CTensor& P = pr.P;

  // Triple Sweedler legs of every basis element.
  std::vector<CTensor> a3, b3;
  a3.reserve(na);
  b3.reserve(nb);
  for (std::size_t i = 0; i < na; ++i)
    a3.push_back(iterated_coproduct(A, A.basis(i), 3));
  for (std::size_t j = 0; j < nb; ++j)
    b3.push_back(iterated_coproduct(B, B.basis(j), 3));

  // <e_p, S_B e_q> and the starred variants used by *_D.
  CTensor PS({na, nb});  // <e_p, S_B e_q>
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < nb; ++q) {
      Complex acc{};
      for (std::size_t m = 0; m < nb; ++m)
        acc += B.antipode.at({m, q}) * P.at({p, m});
      PS.at({p, q}) = acc;
    }
  CTensor Pstar({na, nb});  // <e_p*, e_q*>
  CTensor PSstar({na, nb});  // <e_p*, (S_B e_q)*>
  CTensor sbstar = matmul(B.star, B.antipode.conjugate());
  for (std::size_t p = 0; p < na; ++p)
    for (std::size_t q = 0; q < nb; ++q) {
      Complex acc1{}, acc2{};
      for (std::size_t m = 0; m < na; ++m) {
        Complex ja = A.star.at({m, p});
        if (ja == Complex{}) continue;
        for (std::size_t w = 0; w < nb; ++w) {
          acc1 += ja * B.star.at({w, q}) * P.at({m, w});
          acc2 += ja * sbstar.at({w, q}) * P.at({m, w});
        }
      }
      Pstar.at({p, q}) = acc1;
      PSstar.at({p, q}) = acc2;
    }

  HopfSpec D;
  D.dim = nd;
  D.label = "D(" + A.label + "," + B.label + ")";
  D.mult = CTensor({nd, nd, nd});
  D.comult = CTensor({nd, nd, nd});
  D.unit = CTensor({nd});
  D.counit = CTensor({nd});
  D.antipode = CTensor({nd, nd});
  D.star = CTensor({nd, nd});

  // Multiplication:
  // (a,b)(a',b') = sum (a a'_(2), b_(2) b') <a'_(1), S_B b_(3)> <a'_(3), b_(1)>
  for (std::size_t ip = 0; ip < na; ++ip)
    for (std::size_t j = 0; j < nb; ++j) {
      // K[p2,q2] = sum legs of Delta^2(a_i') and Delta^2(b_j)
      CTensor K({na, nb});
      for (std::size_t p1 = 0; p1 < na; ++p1)
        for (std::size_t p2 = 0; p2 < na; ++p2)
          for (std::size_t p3 = 0; p3 < na; ++p3) {
            Complex ca = a3[ip].at({p1, p2, p3});
            if (ca == Complex{}) continue;
            for (std::size_t q1 = 0; q1 < nb; ++q1)
              for (std::size_t q2 = 0; q2 < nb; ++q2)
                for (std::size_t q3 = 0; q3 < nb; ++q3) {
                  Complex cb = b3[j].at({q1, q2, q3});
                  if (cb == Complex{}) continue;
                  K.at({p2, q2}) +=
                      ca * cb * PS.at({p1, q3}) * P.at({p3, q1});
                }
          }
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t jp = 0; jp < nb; ++jp)
          for (std::size_t p2 = 0; p2 < na; ++p2)
            for (std::size_t q2 = 0; q2 < nb; ++q2) {
              Complex k = K.at({p2, q2});
              if (k == Complex{}) continue;
              for (std::size_t u = 0; u < na; ++u) {
                Complex ma = A.mult.at({i, p2, u});
                if (ma == Complex{}) continue;
                for (std::size_t v = 0; v < nb; ++v) {
                  Complex mb = B.mult.at({q2, jp, v});
                  if (mb == Complex{}) continue;
                  D.mult.at({i * nb + j, ip * nb + jp, u * nb + v}) +=
                      k * ma * mb;
                }
              }
            }
    }

  // Star:
  // (a,b)* = sum (a*_(2), b*_(2)) <a*_(3), b_(1)*> <a*_(1), (S_B b_(3))*>
  // with the starred Sweedler legs taken legwise from Delta^2.
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t p1 = 0; p1 < na; ++p1)
        for (std::size_t p2 = 0; p2 < na; ++p2)
          for (std::size_t p3 = 0; p3 < na; ++p3) {
            Complex ca = std::conj(a3[i].at({p1, p2, p3}));
            if (ca == Complex{}) continue;
            for (std::size_t q1 = 0; q1 < nb; ++q1)
              for (std::size_t q2 = 0; q2 < nb; ++q2)
                for (std::size_t q3 = 0; q3 < nb; ++q3) {
                  Complex cb = std::conj(b3[j].at({q1, q2, q3}));
                  if (cb == Complex{}) continue;
                  Complex w =
                      ca * cb * Pstar.at({p3, q1}) * PSstar.at({p1, q3});
                  if (w == Complex{}) continue;
                  for (std::size_t u = 0; u < na; ++u) {
                    Complex ja = A.star.at({u, p2});
                    if (ja == Complex{}) continue;
                    for (std::size_t v = 0; v < nb; ++v)
                      D.star.at({u * nb + v, i * nb + j}) +=
                          w * ja * B.star.at({v, q2});
                  }
                }
          }
    }

  // Antipode: S_D(a,b) = (1_A, S_B b)(S_A a, 1_B), expressed through
  // the double multiplication assembled above.
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      CTensor x({nd}), y({nd});  // embeddings of (1_A, S_B e_j), (S_A e_i, 1_B)
      for (std::size_t p = 0; p < na; ++p)
        for (std::size_t q = 0; q < nb; ++q) {
          x[p * nb + q] = A.unit[p] * B.antipode.at({q, j});
          y[p * nb + q] = A.antipode.at({p, i}) * B.unit[q];
        }
      for (std::size_t r = 0; r < nd; ++r) {
        if (x[r] == Complex{}) continue;
        for (std::size_t s = 0; s < nd; ++s) {
          Complex w = x[r] * y[s];
          if (w == Complex{}) continue;
          for (std::size_t k = 0; k < nd; ++k) {
            Complex m = D.mult.at({r, s, k});
            if (m == Complex{}) continue;
            D.antipode.at({k, i * nb + j}) += w * m;
          }
        }
      }
    }

  // Comultiplication, counit, unit, integral: leg-interleaved products.
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      D.counit[i * nb + j] = A.counit[i] * B.counit[j];
      for (std::size_t p1 = 0; p1 < na; ++p1)
        for (std::size_t p2 = 0; p2 < na; ++p2) {
          Complex ca = A.comult.at({i, p1, p2});
          if (ca == Complex{}) continue;
          for (std::size_t q1 = 0; q1 < nb; ++q1)
            for (std::size_t q2 = 0; q2 < nb; ++q2) {
              Complex cb = B.comult.at({j, q1, q2});
              if (cb == Complex{}) continue;
              D.comult.at({i * nb + j, p1 * nb + q1, p2 * nb + q2}) = ca * cb;
            }
        }
      D.unit[i * nb + j] = A.unit[i] * B.unit[j];
    }

  DoubleSpec dd;
  dd.n_A = na;
  dd.n_B = nb;
  dd.theta = CTensor({nd});
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      dd.theta[i * nb + j] = (*A.integral)[i] * (*B.integral)[j];
  D.integral = dd.theta;
  dd.H = std::move(D);

  dd.embed_A = CTensor({na, nd});
  dd.embed_B = CTensor({nb, nd});
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t l = 0; l < nb; ++l)
      dd.embed_A.at({i, i * nb + l}) = B.unit[l];
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t k = 0; k < na; ++k)
      dd.embed_B.at({j, k * nb + j}) = A.unit[k];

  dd.source = pr;
  return dd;
}

/// Hopf */C* verification of the double plus the double-specific laws:
/// star involutivity and anti-multiplicativity, non-degenerate
/// multiplication, embeddings as unital *-homomorphisms, and the
/// antipode restricted to the two subalgebras.
inline AxiomReport verify_double(const DoubleSpec& d, const Tolerance& tol) {
  AxiomReport rep;
  rep.append(verify_hopf_star(d.H, tol), "hopf:");
  rep.append(verify_cstar(d.H, tol), "cstar:");

  std::size_t nd = d.H.dim;

  // (1) **-involutivity on all basis elements
  rep.add("double-star-involution",
          max_abs_diff(matmul(d.H.star, d.H.star.conjugate()),
                       CTensor::identity(nd)),
          tol.abs);

  // (2) anti-multiplicativity of *_D on all basis pairs
  {
    double r = 0.0;
    for (std::size_t i = 0; i < nd; ++i) {
      CTensor si = detail::column(d.H.star, i);
      for (std::size_t j = 0; j < nd; ++j) {
        CTensor lhs({nd});
        for (std::size_t k = 0; k < nd; ++k) {
          Complex c = std::conj(d.H.mult.at({i, j, k}));
          if (c == Complex{}) continue;
          for (std::size_t l = 0; l < nd; ++l)
            lhs[l] += c * d.H.star.at({l, k});
        }
        CTensor rhs = multiply(d.H, detail::column(d.H.star, j), si);
        r = std::max(r, max_abs_diff(lhs, rhs));
      }
    }
    rep.add("double-star-antimultiplicativity", r, tol.abs);
  }

  // (3) multiplication non-degeneracy: the stacked left (resp. right)
  // multiplication operators have trivial common kernel.
  {
    CTensor left({nd * nd, nd}), right({nd * nd, nd});
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nd; ++j)
        for (std::size_t k = 0; k < nd; ++k) {
          Complex c = d.H.mult.at({i, j, k});
          if (c == Complex{}) continue;
          left.at({i * nd + k, j}) = c;
          right.at({j * nd + k, i}) = c;
        }
    auto min_rel_sv = [](const CTensor& m) {
      auto sv = singular_values(m);
      if (sv.empty() || sv.front() == 0.0) return 0.0;
      return sv.back() / sv.front();
    };
    double worst = std::min(min_rel_sv(left), min_rel_sv(right));
    rep.add_flag("multiplication-nondegenerate", worst > tol.rel,
                 worst > tol.rel ? 0.0 : tol.rel - worst);
  }

  // (4) embeddings are unital *-homomorphisms onto their images
  {
    double r = 0.0;
    const HopfSpec& A = d.source.A;
    const HopfSpec& B = d.source.B;
    r = std::max(r, max_abs_diff(d.embed_a(A.unit), d.H.unit));
    r = std::max(r, max_abs_diff(d.embed_b(B.unit), d.H.unit));
    for (std::size_t i = 0; i < d.n_A; ++i) {
      CTensor ei = A.basis(i);
      r = std::max(r, max_abs_diff(star(d.H, d.embed_a(ei)),
                                   d.embed_a(star(A, ei))));
      for (std::size_t j = 0; j < d.n_A; ++j) {
        CTensor ej = A.basis(j);
        r = std::max(r, max_abs_diff(
                            multiply(d.H, d.embed_a(ei), d.embed_a(ej)),
                            d.embed_a(multiply(A, ei, ej))));
      }
    }
    for (std::size_t i = 0; i < d.n_B; ++i) {
      CTensor ei = B.basis(i);
      r = std::max(r, max_abs_diff(star(d.H, d.embed_b(ei)),
                                   d.embed_b(star(B, ei))));
      for (std::size_t j = 0; j < d.n_B; ++j) {
        CTensor ej = B.basis(j);
        r = std::max(r, max_abs_diff(
                            multiply(d.H, d.embed_b(ei), d.embed_b(ej)),
                            d.embed_b(multiply(B, ei, ej))));
      }
    }
    rep.add("embeddings-star-homomorphism", r, tol.abs);
  }

  // (5) S_D restricted to the subalgebras
  {
    double r = 0.0;
    for (std::size_t i = 0; i < d.n_A; ++i) {
      CTensor ei = d.source.A.basis(i);
      r = std::max(r, max_abs_diff(antipode(d.H, d.embed_a(ei)),
                                   d.embed_a(antipode(d.source.A, ei))));
    }
    for (std::size_t j = 0; j < d.n_B; ++j) {
      CTensor ej = d.source.B.basis(j);
      r = std::max(r, max_abs_diff(antipode(d.H, d.embed_b(ej)),
                                   d.embed_b(antipode(d.source.B, ej))));
    }
    rep.add("antipode-on-embeddings", r, tol.abs);
  }

  return rep;
}

namespace detail {

inline CTensor random_complex_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CTensor v({n});
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex{g(rng), g(rng)};
  return v;
}

}  // namespace detail

/// Properties of theta = phi_A (x) phi_B: the factorization identity
/// theta(x x*) = phi_A(aa*) phi_B(bb*) on elementary tensors, invariance,
/// Gram positivity, the entrywise product form, and the trace property.
inline AxiomReport verify_theta(const DoubleSpec& d, const Tolerance& tol,
                                std::size_t samples = 100,
                                std::uint64_t seed = 1) {
  AxiomReport rep;
  const HopfSpec& A = d.source.A;
  const HopfSpec& B = d.source.B;
  std::size_t nd = d.H.dim;

  auto theta_of = [&](const CTensor& x) {
    Complex acc{};
    for (std::size_t k = 0; k < nd; ++k) acc += d.theta[k] * x[k];
    return acc;
  };
  auto phi_of = [&](const HopfSpec& h, const CTensor& x) {
    Complex acc{};
    for (std::size_t k = 0; k < h.dim; ++k) acc += (*h.integral)[k] * x[k];
    return acc;
  };
  auto factorization_residual = [&](const CTensor& a, const CTensor& b) {
    CTensor x = d.elementary(a, b);
    Complex lhs = theta_of(multiply(d.H, x, star(d.H, x)));
    Complex rhs = phi_of(A, multiply(A, a, star(A, a))) *
                  phi_of(B, multiply(B, b, star(B, b)));
    return std::abs(lhs - rhs);
  };

  // (1) factorization on all basis pairs and seeded random tensors
  {
    double r = 0.0;
    for (std::size_t i = 0; i < d.n_A; ++i)
      for (std::size_t j = 0; j < d.n_B; ++j)
        r = std::max(r, factorization_residual(A.basis(i), B.basis(j)));
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      CTensor a = detail::random_complex_vector(d.n_A, rng);
      CTensor b = detail::random_complex_vector(d.n_B, rng);
      // relative control: random vectors have O(dim) norms, the identity
      // is degree 4 in the inputs
      double scale = 1.0;
      for (Complex z : a.data()) scale = std::max(scale, std::abs(z));
      for (Complex z : b.data()) scale = std::max(scale, std::abs(z));
      r = std::max(r, factorization_residual(a, b) /
                          (scale * scale * scale * scale *
                           static_cast<double>(d.n_A * d.n_B)));
    }
    rep.add("theta-factorization", r, std::max(tol.abs, tol.rel));
  }

  // (2) invariance of theta as an integral on D
  {
    double r = 0.0;
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t k = 0; k < nd; ++k) {
        Complex left{}, right{};
        for (std::size_t j = 0; j < nd; ++j) {
          left += d.H.comult.at({i, j, k}) * d.theta[j];
          right += d.H.comult.at({i, k, j}) * d.theta[j];
        }
        Complex want = d.theta[i] * d.H.unit[k];
        r = std::max({r, std::abs(left - want), std::abs(right - want)});
      }
    rep.add("theta-invariance", r, tol.abs);
  }

  // (3) Gram positivity and faithfulness
  {
    CTensor gram = integral_gram(d.H);
    double herm = max_abs_diff(gram, gram.transpose().conjugate());
    rep.add("theta-gram-hermitian", herm, tol.abs);
    auto [vals, vecs] = hermitian_eig(gram, std::max(2 * herm, 1e-9));
    rep.add_flag("theta-gram-positive", vals.front() > tol.abs,
                 std::max(0.0, tol.abs - vals.front()));
  }

  // (4) theta = phi_A (x) phi_B entrywise
  {
    double r = 0.0;
    for (std::size_t i = 0; i < d.n_A; ++i)
      for (std::size_t j = 0; j < d.n_B; ++j)
        r = std::max(r, std::abs(d.theta[d.index(i, j)] -
                                 (*A.integral)[i] * (*B.integral)[j]));
    rep.add("theta-product-form", r, tol.abs);
  }

  // (5) trace property, reported rather than assumed
  {
    double r = 0.0;
    for (std::size_t i = 0; i < nd; ++i)
      for (std::size_t j = 0; j < nd; ++j) {
        Complex xy{}, yx{};
        for (std::size_t k = 0; k < nd; ++k) {
          xy += d.H.mult.at({i, j, k}) * d.theta[k];
          yx += d.H.mult.at({j, i, k}) * d.theta[k];
        }
        r = std::max(r, std::abs(xy - yx));
      }
    rep.add("theta-tracial", r, tol.abs);
  }

  return rep;
}

/// Classical group-double structure constants on the basis (delta_g, h)
/// with index g * |G| + h, computed straight from the group table:
/// (delta_g, h)(delta_g', h') = [g = h g' h^{-1}] (delta_g, hh').
inline CTensor group_double_oracle(const GroupTable& g) {
  std::size_t n = g.order();
  std::size_t nd = n * n;
  CTensor t({nd, nd, nd});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t xp = 0; xp < n; ++xp)
        for (std::size_t hp = 0; hp < n; ++hp) {
          std::size_t conj = g.product(g.product(h, xp), g.inverse(h));
          if (conj != x) continue;
          t.at({x * n + h, xp * n + hp, x * n + g.product(h, hp)}) = 1.0;
        }
  return t;
}

/// End-to-end correctness gate: the double built from the evaluation
/// pairing with A = F(G), B = C[G] must reproduce the classical group
/// double exactly.
inline double compare_with_oracle(const DoubleSpec& d, const GroupTable& g,
                                  const Tolerance& /*tol*/) {
  std::size_t n = g.order();
  if (d.n_A != n || d.n_B != n || d.H.dim != n * n)
    throw IndexAlignmentError(
        "compare_with_oracle: double dimensions do not match the group");
  return max_abs_diff(d.H.mult, group_double_oracle(g));
}

}  // namespace hopf
