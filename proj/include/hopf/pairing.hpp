/// \file pairing.hpp
/// \brief Bilinear pairings of two Hopf *-algebras: axiom and
///        non-degeneracy checks, the four mutual actions, module and
///        adjointness laws, and the Galois-map duality.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hopf/axioms.hpp"
#include "hopf/report.hpp"
#include "hopf/spec.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

struct SingularGaloisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PairingSpec {
  HopfSpec A;
  HopfSpec B;
  CTensor P;  // n_A x n_B, P[i,j] = <a_i, b_j>

  void check_shapes() const {
    A.check_shapes();
    B.check_shapes();
    if (P.shape() != std::vector<std::size_t>{A.dim, B.dim})
      throw ShapeError("PairingSpec: P shape mismatch");
  }

  /// Bilinear evaluation on coordinate vectors.
  Complex eval(const CTensor& x, const CTensor& y) const {
    Complex acc{};
    for (std::size_t i = 0; i < A.dim; ++i) {
      if (x[i] == Complex{}) continue;
      for (std::size_t j = 0; j < B.dim; ++j)
        acc += x[i] * y[j] * P.at({i, j});
    }
    return acc;
  }

  Tolerance default_tolerance() const {
    return Tolerance::scaled(std::max({A.max_structure_modulus(),
                                       B.max_structure_modulus(),
                                       P.max_modulus()}));
  }
};

/// Evaluation pairing of C[G] with F(G): P = identity on the group basis.
inline PairingSpec canonical_pairing(const GroupTable& g) {
  PairingSpec pr;
  pr.A = group_algebra(g);
  pr.B = function_algebra(g);
  pr.P = CTensor::identity(g.order());
  return pr;
}

/// Evaluation pairing of H with its dual; P = identity by the dual-basis
/// indexing convention.
inline PairingSpec dual_pairing(const HopfSpec& h) {
  PairingSpec pr;
  pr.A = h;
  pr.B = dualize(h);
  pr.P = CTensor::identity(h.dim);
  return pr;
}

/// Swap the two sides: (B, A, P^T). Valid by the symmetry of the axioms.
inline PairingSpec flip(const PairingSpec& pr) {
  return PairingSpec{pr.B, pr.A, pr.P.transpose()};
}

/// The six axioms of a Hopf *-algebra pairing, plus the mirrored star
/// axiom <a, b*> = conj(<S(a)*, b>).
inline AxiomReport verify_pairing(const PairingSpec& pr,
                                  const Tolerance& tol) {
  pr.check_shapes();
  std::size_t na = pr.A.dim, nb = pr.B.dim;
  const HopfSpec& A = pr.A;
  const HopfSpec& B = pr.B;
  const CTensor& P = pr.P;
  AxiomReport rep;

  // (1) <Delta(a), b (x) b'> = <a, bb'>
  {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t jp = 0; jp < nb; ++jp) {
          Complex lhs{}, rhs{};
          for (std::size_t p = 0; p < na; ++p)
            for (std::size_t q = 0; q < na; ++q)
              lhs += A.comult.at({i, p, q}) * P.at({p, j}) * P.at({q, jp});
          for (std::size_t k = 0; k < nb; ++k)
            rhs += B.mult.at({j, jp, k}) * P.at({i, k});
          r = std::max(r, std::abs(lhs - rhs));
        }
    rep.add("coproduct-product-left", r, tol.abs);
  }

  // (2) <a (x) a', Delta(b)> = <aa', b>
  {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t ip = 0; ip < na; ++ip)
        for (std::size_t j = 0; j < nb; ++j) {
          Complex lhs{}, rhs{};
          for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t q = 0; q < nb; ++q)
              lhs += B.comult.at({j, p, q}) * P.at({i, p}) * P.at({ip, q});
          for (std::size_t k = 0; k < na; ++k)
            rhs += A.mult.at({i, ip, k}) * P.at({k, j});
          r = std::max(r, std::abs(lhs - rhs));
        }
    rep.add("coproduct-product-right", r, tol.abs);
  }

  // (3) <a*, b> = conj(<a, S_B(b)*>)
  {
    double r = 0.0;
    CTensor sbstar = matmul(B.star, B.antipode.conjugate());  // (S_B e_j)*
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        Complex lhs{}, inner{};
        for (std::size_t p = 0; p < na; ++p)
          lhs += A.star.at({p, i}) * P.at({p, j});
        for (std::size_t q = 0; q < nb; ++q)
          inner += sbstar.at({q, j}) * P.at({i, q});
        r = std::max(r, std::abs(lhs - std::conj(inner)));
      }
    rep.add("star-compatibility", r, tol.abs);
  }

  // (4) <a, 1_B> = counit_A(a)   (5) <1_A, b> = counit_B(b)
  {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i) {
      Complex lhs{};
      for (std::size_t j = 0; j < nb; ++j) lhs += B.unit[j] * P.at({i, j});
      r = std::max(r, std::abs(lhs - A.counit[i]));
    }
    rep.add("unit-counit-A", r, tol.abs);
    r = 0.0;
    for (std::size_t j = 0; j < nb; ++j) {
      Complex lhs{};
      for (std::size_t i = 0; i < na; ++i) lhs += A.unit[i] * P.at({i, j});
      r = std::max(r, std::abs(lhs - B.counit[j]));
    }
    rep.add("unit-counit-B", r, tol.abs);
  }

  // (6) <S_A(a), b> = <a, S_B(b)>
  {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        Complex lhs{}, rhs{};
        for (std::size_t p = 0; p < na; ++p)
          lhs += A.antipode.at({p, i}) * P.at({p, j});
        for (std::size_t q = 0; q < nb; ++q)
          rhs += B.antipode.at({q, j}) * P.at({i, q});
        r = std::max(r, std::abs(lhs - rhs));
      }
    rep.add("antipode-compatibility", r, tol.abs);
  }

  // (7) mirror: <a, b*> = conj(<S_A(a)*, b>)
  {
    double r = 0.0;
    CTensor sastar = matmul(A.star, A.antipode.conjugate());  // (S_A e_i)*
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        Complex lhs{}, inner{};
        for (std::size_t q = 0; q < nb; ++q)
          lhs += B.star.at({q, j}) * P.at({i, q});
        for (std::size_t p = 0; p < na; ++p)
          inner += sastar.at({p, i}) * P.at({p, j});
        r = std::max(r, std::abs(lhs - std::conj(inner)));
      }
    rep.add("star-compatibility-mirror", r, tol.abs);
  }

  return rep;
}

struct NondegeneracyResult {
  std::size_t rank = 0;
  double min_singular = 0.0;
  bool nondegenerate = false;
};

/// SVD-based rank of P; non-degenerate iff full rank with n_A = n_B.
inline NondegeneracyResult nondegeneracy(const PairingSpec& pr,
                                         const Tolerance& tol) {
  NondegeneracyResult res;
  auto sv = singular_values(pr.P);
  double cut = sv.empty() ? 0.0 : sv.front() * tol.rel;
  for (double s : sv)
    if (s > cut) ++res.rank;
  res.min_singular = sv.empty() ? 0.0 : sv.back();
  res.nondegenerate =
      pr.A.dim == pr.B.dim && res.rank == pr.A.dim && res.rank == pr.B.dim;
  return res;
}

enum class ActionKind {
  AOnBLeft,   // a |> b = sum b_(1) <a, b_(2)>
  AOnBRight,  // b <| a = sum <a, b_(1)> b_(2)
  BOnALeft,   // b |> a = sum a_(1) <a_(2), b>
  BOnARight,  // a <| b = sum <a_(1), b> a_(2)
};

/// One of the four mutual actions, on coordinate vectors.
inline CTensor act(const PairingSpec& pr, ActionKind which,
                   const CTensor& actor, const CTensor& target) {
  std::size_t na = pr.A.dim, nb = pr.B.dim;
  auto expect = [&](const CTensor& v, std::size_t n, const char* what) {
    if (v.shape() != std::vector<std::size_t>{n})
      throw ShapeError(std::string("act: bad length for ") + what);
  };
  switch (which) {
    case ActionKind::AOnBLeft: {
      expect(actor, na, "actor");
      expect(target, nb, "target");
      CTensor r({nb});
      for (std::size_t j = 0; j < nb; ++j) {
        if (target[j] == Complex{}) continue;
        for (std::size_t p = 0; p < nb; ++p)
          for (std::size_t q = 0; q < nb; ++q) {
            Complex c = pr.B.comult.at({j, p, q});
            if (c == Complex{}) continue;
            Complex val{};
            for (std::size_t i = 0; i < na; ++i)
              val += actor[i] * pr.P.at({i, q});
            r[p] += target[j] * c * val;
          }
      }
      return r;
    }
    case ActionKind::AOnBRight: {
      expect(actor, na, "actor");
      expect(target, nb, "target");
      CTensor r({nb});
      for (std::size_t j = 0; j < nb; ++j) {
        if (target[j] == Complex{}) continue;
        for (std::size_t p = 0; p < nb; ++p)
          for (std::size_t q = 0; q < nb; ++q) {
            Complex c = pr.B.comult.at({j, p, q});
            if (c == Complex{}) continue;
            Complex val{};
            for (std::size_t i = 0; i < na; ++i)
              val += actor[i] * pr.P.at({i, p});
            r[q] += target[j] * c * val;
          }
      }
      return r;
    }
    case ActionKind::BOnALeft: {
      expect(actor, nb, "actor");
      expect(target, na, "target");
      CTensor r({na});
      for (std::size_t i = 0; i < na; ++i) {
        if (target[i] == Complex{}) continue;
        for (std::size_t p = 0; p < na; ++p)
          for (std::size_t q = 0; q < na; ++q) {
            Complex c = pr.A.comult.at({i, p, q});
            if (c == Complex{}) continue;
            Complex val{};
            for (std::size_t j = 0; j < nb; ++j)
              val += actor[j] * pr.P.at({q, j});
            r[p] += target[i] * c * val;
          }
      }
      return r;
    }
    case ActionKind::BOnARight: {
      expect(actor, nb, "actor");
      expect(target, na, "target");
      CTensor r({na});
      for (std::size_t i = 0; i < na; ++i) {
        if (target[i] == Complex{}) continue;
        for (std::size_t p = 0; p < na; ++p)
          for (std::size_t q = 0; q < na; ++q) {
            Complex c = pr.A.comult.at({i, p, q});
            if (c == Complex{}) continue;
            Complex val{};
            for (std::size_t j = 0; j < nb; ++j)
              val += actor[j] * pr.P.at({p, j});
            r[q] += target[i] * c * val;
          }
      }
      return r;
    }
  }
  throw std::invalid_argument("act: unknown action kind");
}

/// Module laws, the four adjointness identities, and bimodule
/// compatibility, all enumerated over basis tuples.
inline AxiomReport verify_actions(const PairingSpec& pr,
                                  const Tolerance& tol) {
  std::size_t na = pr.A.dim, nb = pr.B.dim;
  AxiomReport rep;

  // (1) module laws (plus unitality of every action)
  {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t ip = 0; ip < na; ++ip)
        for (std::size_t j = 0; j < nb; ++j) {
          CTensor a = pr.A.basis(i), ap = pr.A.basis(ip);
          CTensor b = pr.B.basis(j);
          CTensor aa = multiply(pr.A, a, ap);
          // (aa') |> b = a |> (a' |> b)
          r = std::max(r, max_abs_diff(
                              act(pr, ActionKind::AOnBLeft, aa, b),
                              act(pr, ActionKind::AOnBLeft, a,
                                  act(pr, ActionKind::AOnBLeft, ap, b))));
          // b <| (aa') = (b <| a) <| a'
          r = std::max(r, max_abs_diff(
                              act(pr, ActionKind::AOnBRight, aa, b),
                              act(pr, ActionKind::AOnBRight, ap,
                                  act(pr, ActionKind::AOnBRight, a, b))));
        }
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t jp = 0; jp < nb; ++jp)
        for (std::size_t i = 0; i < na; ++i) {
          CTensor b = pr.B.basis(j), bp = pr.B.basis(jp);
          CTensor a = pr.A.basis(i);
          CTensor bb = multiply(pr.B, b, bp);
          r = std::max(r, max_abs_diff(
                              act(pr, ActionKind::BOnALeft, bb, a),
                              act(pr, ActionKind::BOnALeft, b,
                                  act(pr, ActionKind::BOnALeft, bp, a))));
          r = std::max(r, max_abs_diff(
                              act(pr, ActionKind::BOnARight, bb, a),
                              act(pr, ActionKind::BOnARight, bp,
                                  act(pr, ActionKind::BOnARight, b, a))));
        }
    for (std::size_t j = 0; j < nb; ++j) {
      CTensor b = pr.B.basis(j);
      r = std::max(r, max_abs_diff(
                          act(pr, ActionKind::AOnBLeft, pr.A.unit, b), b));
      r = std::max(r, max_abs_diff(
                          act(pr, ActionKind::AOnBRight, pr.A.unit, b), b));
    }
    for (std::size_t i = 0; i < na; ++i) {
      CTensor a = pr.A.basis(i);
      r = std::max(r, max_abs_diff(
                          act(pr, ActionKind::BOnALeft, pr.B.unit, a), a));
      r = std::max(r, max_abs_diff(
                          act(pr, ActionKind::BOnARight, pr.B.unit, a), a));
    }
    rep.add("module-laws", r, tol.abs);
  }

  // (2) adjointness identities
  {
    double r = 0.0;
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t jp = 0; jp < nb; ++jp) {
          CTensor a = pr.A.basis(i);
          CTensor b = pr.B.basis(j), bp = pr.B.basis(jp);
          // <b |> a, b'> = <a, b'b>
          r = std::max(r, std::abs(
              pr.eval(act(pr, ActionKind::BOnALeft, b, a), bp) -
              pr.eval(a, multiply(pr.B, bp, b))));
          // <a <| b, b'> = <a, bb'>
          r = std::max(r, std::abs(
              pr.eval(act(pr, ActionKind::BOnARight, b, a), bp) -
              pr.eval(a, multiply(pr.B, b, bp))));
        }
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t ip = 0; ip < na; ++ip)
        for (std::size_t j = 0; j < nb; ++j) {
          CTensor a = pr.A.basis(i), ap = pr.A.basis(ip);
          CTensor b = pr.B.basis(j);
          // <a, a' |> b> = <aa', b>
          r = std::max(r, std::abs(
              pr.eval(a, act(pr, ActionKind::AOnBLeft, ap, b)) -
              pr.eval(multiply(pr.A, a, ap), b)));
          // <a, b <| a'> = <a'a, b>
          r = std::max(r, std::abs(
              pr.eval(a, act(pr, ActionKind::AOnBRight, ap, b)) -
              pr.eval(multiply(pr.A, ap, a), b)));
        }
    rep.add("adjointness", r, tol.abs);
  }

  // (3) bimodule compatibility
  {
    double r = 0.0;
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t jp = 0; jp < nb; ++jp)
        for (std::size_t i = 0; i < na; ++i) {
          CTensor b1 = pr.B.basis(j), b2 = pr.B.basis(jp);
          CTensor a = pr.A.basis(i);
          r = std::max(r, max_abs_diff(
              act(pr, ActionKind::BOnARight, b2,
                  act(pr, ActionKind::BOnALeft, b1, a)),
              act(pr, ActionKind::BOnALeft, b1,
                  act(pr, ActionKind::BOnARight, b2, a))));
        }
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t ip = 0; ip < na; ++ip)
        for (std::size_t j = 0; j < nb; ++j) {
          CTensor a1 = pr.A.basis(i), a2 = pr.A.basis(ip);
          CTensor b = pr.B.basis(j);
          r = std::max(r, max_abs_diff(
              act(pr, ActionKind::AOnBRight, a2,
                  act(pr, ActionKind::AOnBLeft, a1, b)),
              act(pr, ActionKind::AOnBLeft, a1,
                  act(pr, ActionKind::AOnBRight, a2, b))));
        }
    rep.add("bimodule", r, tol.abs);
  }

  return rep;
}

namespace detail {

/// T2 on A (x) A: x (x) y -> (x (x) 1) Delta(y), as an n^2 x n^2 matrix
/// acting on vec(i,j) = i*n + j coordinates.
inline CTensor galois_t2(const HopfSpec& h) {
  std::size_t n = h.dim;
  CTensor t({n * n, n * n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Complex c = h.comult.at({j, p, q});
          if (c == Complex{}) continue;
          for (std::size_t u = 0; u < n; ++u)
            t.at({u * n + q, i * n + j}) += c * h.mult.at({i, p, u});
        }
  return t;
}

/// T1 on B (x) B: x (x) y -> Delta(x) (1 (x) y).
inline CTensor galois_t1(const HopfSpec& h) {
  std::size_t n = h.dim;
  CTensor t({n * n, n * n});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          Complex c = h.comult.at({k, p, q});
          if (c == Complex{}) continue;
          for (std::size_t v = 0; v < n; ++v)
            t.at({p * n + v, k * n + l}) += c * h.mult.at({q, l, v});
        }
  return t;
}

/// <x, y> on A(x)A against B(x)B: product of pairings legwise.
inline double galois_duality_residual(const CTensor& t2, const CTensor& t1,
                                      const CTensor& p, std::size_t na,
                                      std::size_t nb) {
  // lhs[(i,j),(k,l)] = sum_{u,q} t2[(u,q),(i,j)] P[u,k] P[q,l]
  // rhs[(i,j),(k,l)] = sum_{p,v} t1[(p,v),(k,l)] P[i,p] P[j,v]
  double r = 0.0;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          Complex lhs{}, rhs{};
          for (std::size_t u = 0; u < na; ++u)
            for (std::size_t q = 0; q < na; ++q) {
              Complex c = t2.at({u * na + q, i * na + j});
              if (c == Complex{}) continue;
              lhs += c * p.at({u, k}) * p.at({q, l});
            }
          for (std::size_t s = 0; s < nb; ++s)
            for (std::size_t v = 0; v < nb; ++v) {
              Complex c = t1.at({s * nb + v, k * nb + l});
              if (c == Complex{}) continue;
              rhs += c * p.at({i, s}) * p.at({j, v});
            }
          r = std::max(r, std::abs(lhs - rhs));
        }
  return r;
}

}  // namespace detail

/// Duality of the Galois maps, with the convention
/// T2(x (x) y) = (x (x) 1) Delta(y) on A and T1(x (x) y) = Delta(x) (1 (x) y)
/// on B, checked for the maps and for their inverses.
inline AxiomReport verify_galois(const PairingSpec& pr, const Tolerance& tol) {
  std::size_t na = pr.A.dim, nb = pr.B.dim;
  CTensor t2 = detail::galois_t2(pr.A);
  CTensor t1 = detail::galois_t1(pr.B);

  AxiomReport rep;
  rep.add("galois-duality",
          detail::galois_duality_residual(t2, t1, pr.P, na, nb), tol.abs);

  auto invert = [&](const CTensor& t, const char* name) {
    Eigen::MatrixXcd e = detail::to_eigen(t);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        e, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(s.size() - 1) <= s(0) * tol.rel)
      throw SingularGaloisError(std::string("verify_galois: ") + name +
                                " is singular");
    return detail::from_eigen(e.inverse());
  };
  CTensor t2inv = invert(t2, "T2");
  CTensor t1inv = invert(t1, "T1");
  rep.add("galois-duality-inverse",
          detail::galois_duality_residual(t2inv, t1inv, pr.P, na, nb),
          tol.abs);
  return rep;
}

}  // namespace hopf
