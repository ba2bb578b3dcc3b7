#include <doctest.h>

#include "hopf/double.hpp"

using namespace hopf;

namespace {

DoubleSpec z2_double() {
  return build_double(canonical_pairing(GroupTable::cyclic(2)),
                      Tolerance(1e-9, 1e-8));
}

}  // namespace

TEST_CASE("double of Z/2 has dimension 4 and the product unit") {
  DoubleSpec d = z2_double();
  REQUIRE(d.H.dim == 4);
  // (1_A, 1_B) is the unit
  Tolerance tol(1e-9, 1e-8);
  for (std::size_t i = 0; i < 4; ++i) {
    CTensor ei = d.H.basis(i);
    CHECK(max_abs_diff(multiply(d.H, d.H.unit, ei), ei) < 1e-12);
    CHECK(max_abs_diff(multiply(d.H, ei, d.H.unit), ei) < 1e-12);
  }
}

TEST_CASE("one-sided products reduce componentwise") {
  // (a, 1_B)(a', b) = (aa', b) and (a, b)(1_A, b') = (a, bb')
  Tolerance tol(1e-9, 1e-8);
  for (const GroupTable& g :
       {GroupTable::cyclic(2), GroupTable::cyclic(3),
        GroupTable::symmetric(3)}) {
    DoubleSpec d = build_double(canonical_pairing(g), tol);
    const HopfSpec& A = d.source.A;
    const HopfSpec& B = d.source.B;
    double r = 0.0;
    for (std::size_t i = 0; i < d.n_A; ++i)
      for (std::size_t ip = 0; ip < d.n_A; ++ip)
        for (std::size_t j = 0; j < d.n_B; ++j) {
          CTensor lhs = multiply(d.H, d.embed_a(A.basis(i)),
                                 d.elementary(A.basis(ip), B.basis(j)));
          CTensor rhs = d.elementary(
              multiply(A, A.basis(i), A.basis(ip)), B.basis(j));
          r = std::max(r, max_abs_diff(lhs, rhs));
        }
    for (std::size_t i = 0; i < d.n_A; ++i)
      for (std::size_t j = 0; j < d.n_B; ++j)
        for (std::size_t jp = 0; jp < d.n_B; ++jp) {
          CTensor lhs = multiply(d.H, d.elementary(A.basis(i), B.basis(j)),
                                 d.embed_b(B.basis(jp)));
          CTensor rhs = d.elementary(
              A.basis(i), multiply(B, B.basis(j), B.basis(jp)));
          r = std::max(r, max_abs_diff(lhs, rhs));
        }
    INFO(g.label());
    CHECK(r < 1e-12);
  }
}

TEST_CASE("abelian double multiplication is componentwise") {
  DoubleSpec d = z2_double();
  const HopfSpec& A = d.source.A;
  const HopfSpec& B = d.source.B;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t ip = 0; ip < 2; ++ip)
        for (std::size_t jp = 0; jp < 2; ++jp) {
          CTensor lhs = multiply(d.H, d.elementary(A.basis(i), B.basis(j)),
                                 d.elementary(A.basis(ip), B.basis(jp)));
          CTensor rhs = d.elementary(multiply(A, A.basis(i), A.basis(ip)),
                                     multiply(B, B.basis(j), B.basis(jp)));
          CHECK(max_abs_diff(lhs, rhs) < 1e-12);
        }
}

TEST_CASE("theta is the product of the two integrals") {
  DoubleSpec d = z2_double();
  // theta((delta-free a_i, b_j)) = phi_A(a_i) phi_B(b_j);
  // for Z/2 with A = C[Z/2], B = F(Z/2): theta((e, delta_e)) = 1 * 1/2
  CHECK(std::abs(d.theta[d.index(0, 0)] - Complex{0.5}) < 1e-15);
  CHECK(std::abs(d.theta[d.index(1, 0)]) < 1e-15);  // phi_A(u) = 0
}

TEST_CASE("degenerate pairing is rejected") {
  PairingSpec pr = canonical_pairing(GroupTable::cyclic(2));
  pr.P = CTensor({2, 2});
  pr.P.at({0, 0}) = 1.0;
  CHECK_THROWS_AS(build_double(pr, Tolerance(1e-9, 1e-8)),
                  DegeneratePairingError);
}

TEST_CASE("missing integral is rejected") {
  PairingSpec pr = canonical_pairing(GroupTable::cyclic(2));
  pr.A.integral.reset();
  CHECK_THROWS_AS(build_double(pr, Tolerance(1e-9, 1e-8)),
                  MissingIntegralError);
}

TEST_CASE("verify_double passes on the Z/2 double") {
  Tolerance tol(1e-9, 1e-8);
  DoubleSpec d = z2_double();
  AxiomReport rep = verify_double(d, tol);
  INFO([&] {
    std::string s;
    for (const auto& c : rep.entries)
      if (!c.pass) s += c.name + " ";
    return s;
  }());
  CHECK(rep.overall());
  CHECK(rep.max_residual() <= 1e-12);
}

TEST_CASE("verify_theta passes on the Z/2 double") {
  Tolerance tol(1e-9, 1e-8);
  DoubleSpec d = z2_double();
  AxiomReport rep = verify_theta(d, tol, 100, 7);
  CHECK(rep.overall());
}

TEST_CASE("theta vanishes on a basis element but not on its square form") {
  DoubleSpec d = z2_double();
  const HopfSpec& A = d.source.A;
  const HopfSpec& B = d.source.B;
  CTensor x = d.elementary(A.basis(1), B.basis(0));  // (u, delta_e)
  Complex direct{};
  for (std::size_t k = 0; k < d.H.dim; ++k) direct += d.theta[k] * x[k];
  CHECK(std::abs(direct) < 1e-15);  // phi_A(u) = 0
  CTensor xxs = multiply(d.H, x, star(d.H, x));
  Complex form{};
  for (std::size_t k = 0; k < d.H.dim; ++k) form += d.theta[k] * xxs[k];
  CHECK(form.real() > 0.0);  // = phi_A(uu*) phi_B(delta_e delta_e*) = 1/2
  CHECK(std::abs(form - Complex{0.5}) < 1e-12);
}

TEST_CASE("group double oracle on Z/2") {
  GroupTable g = GroupTable::cyclic(2);
  CTensor oracle = group_double_oracle(g);
  std::size_t n = 2;
  // (delta_u, u)(delta_u, u) = (delta_u, e)
  std::size_t du_u = 1 * n + 1;
  std::size_t du_e = 1 * n + 0;
  CHECK(oracle.at({du_u, du_u, du_e}) == Complex{1.0});
}

TEST_CASE("group double oracle has exactly |G|^3 nonzero entries") {
  GroupTable g = GroupTable::symmetric(3);
  CTensor oracle = group_double_oracle(g);
  std::size_t nonzero = 0;
  for (std::size_t f = 0; f < oracle.size(); ++f)
    if (oracle[f] != Complex{}) ++nonzero;
  CHECK(nonzero == g.order() * g.order() * g.order());
}

TEST_CASE("partition of unity is the oracle unit") {
  GroupTable g = GroupTable::cyclic(3);
  std::size_t n = g.order();
  CTensor oracle = group_double_oracle(g);
  // unit = sum_g (delta_g, e)
  CTensor u({n * n});
  for (std::size_t x = 0; x < n; ++x) u[x * n + g.identity()] = 1.0;
  double r = 0.0;
  for (std::size_t j = 0; j < n * n; ++j) {
    CTensor prod({n * n});
    for (std::size_t i = 0; i < n * n; ++i) {
      if (u[i] == Complex{}) continue;
      for (std::size_t k = 0; k < n * n; ++k)
        prod[k] += u[i] * oracle.at({i, j, k});
    }
    CTensor want({n * n});
    want[j] = 1.0;
    r = std::max(r, max_abs_diff(prod, want));
  }
  CHECK(r == 0.0);
}

TEST_CASE("double matches the classical group double") {
  Tolerance tol(1e-9, 1e-8);
  for (const GroupTable& g :
       {GroupTable::cyclic(2), GroupTable::cyclic(4),
        GroupTable::symmetric(3)}) {
    // oracle orientation: A = F(G), B = C[G]
    DoubleSpec d = build_double(flip(canonical_pairing(g)), tol);
    INFO(g.label());
    CHECK(compare_with_oracle(d, g, tol) <= 1e-12);
  }
}

TEST_CASE("transposed P on S3 breaks star anti-multiplicativity") {
  Tolerance tol(1e-9, 1e-8);
  GroupTable g = GroupTable::symmetric(3);
  PairingSpec pr = canonical_pairing(g);
  // <g, delta_h> = [h = g^{-1}]: still non-degenerate but wrong pairing
  CTensor p({6, 6});
  for (std::size_t i = 0; i < 6; ++i) p.at({g.inverse(i), i}) = 1.0;
  pr.P = p;
  DoubleSpec d = build_double(pr, tol);
  AxiomReport rep = verify_double(d, tol);
  CHECK_FALSE(rep.find("double-star-antimultiplicativity")->pass);
}

TEST_CASE("index alignment errors are reported") {
  DoubleSpec d = z2_double();
  CHECK_THROWS_AS(compare_with_oracle(d, GroupTable::cyclic(3),
                                      Tolerance(1e-9, 1e-8)),
                  IndexAlignmentError);
}
