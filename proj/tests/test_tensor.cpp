#include <doctest.h>

#include <random>

#include "hopf/tensor.hpp"

using namespace hopf;
using namespace std::complex_literals;

namespace {

CTensor random_tensor(const std::vector<std::size_t>& shape,
                      std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CTensor t(shape);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = Complex{g(rng), g(rng)};
  return t;
}

CTensor random_hermitian(std::size_t n, std::mt19937_64& rng) {
  CTensor m = random_tensor({n, n}, rng);
  CTensor h({n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h.at({i, j}) = (m.at({i, j}) + std::conj(m.at({j, i}))) / 2.0;
  return h;
}

}  // namespace

TEST_CASE("tensor_product on basis vectors") {
  CTensor x = CTensor::vector({1.0, 0.0});
  CTensor y = CTensor::vector({0.0, 1.0});
  CTensor p = tensor_product(x, y);
  REQUIRE(p.shape() == std::vector<std::size_t>{2, 2});
  CHECK(p.at({0, 1}) == Complex{1.0});
  CHECK(p.at({0, 0}) == Complex{});
  CHECK(p.at({1, 0}) == Complex{});
  CHECK(p.at({1, 1}) == Complex{});
}

TEST_CASE("tensor_product with unit scalar is identity") {
  std::mt19937_64 rng(11);
  CTensor x = random_tensor({3, 2}, rng);
  CTensor p = tensor_product(x, CTensor::scalar(1.0));
  REQUIRE(p.shape() == x.shape());
  CHECK(max_abs_diff(p, x) == 0.0);
}

TEST_CASE("tensor_product complex entries") {
  // (1, i) (x) (1, -i) = [[1, -i], [i, 1]]
  CTensor x = CTensor::vector({1.0, 1.0i});
  CTensor y = CTensor::vector({1.0, -1.0i});
  CTensor p = tensor_product(x, y);
  CHECK(p.at({0, 0}) == Complex{1.0});
  CHECK(p.at({0, 1}) == -1.0i);
  CHECK(p.at({1, 0}) == 1.0i);
  CHECK(p.at({1, 1}) == Complex{1.0});
}

TEST_CASE("tensor_product respects the size cap") {
  CTensor big({1u << 13, 1u << 13});
  CHECK_THROWS_AS(tensor_product(big, big), CapacityError);
}

TEST_CASE("contract with identity matrix is the identity map") {
  std::mt19937_64 rng(5);
  CTensor v = random_tensor({7}, rng);
  CTensor c = contract(CTensor::identity(7), v, {{1, 0}});
  CHECK(max_abs_diff(c, v) < 1e-15);
}

TEST_CASE("contract last/first reproduces the matrix product") {
  CTensor m({2, 2}, {1.0, 2.0, 3.0, 4.0});
  CTensor n({2, 2}, {5.0, 6.0, 7.0, 8.0});
  CTensor p = contract(m, n, {{1, 0}});
  CHECK(p.at({0, 0}) == Complex{19.0});
  CHECK(p.at({0, 1}) == Complex{22.0});
  CHECK(p.at({1, 0}) == Complex{43.0});
  CHECK(p.at({1, 1}) == Complex{50.0});
}

TEST_CASE("full contraction of rank-1 tensors is the dot product") {
  CTensor x = CTensor::vector({1.0, 2.0});
  CTensor y = CTensor::vector({3.0, 4.0});
  CTensor d = contract(x, y, {{0, 0}});
  REQUIRE(d.rank() == 0);
  CHECK(d[0] == Complex{11.0});
}

TEST_CASE("contract rejects mismatched extents") {
  CTensor x({2, 3});
  CTensor y({4, 2});
  CHECK_THROWS_AS(contract(x, y, {{1, 1}}), ShapeError);
}

TEST_CASE("contract is bilinear in its first argument") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    CTensor x = random_tensor({3, 4}, rng);
    CTensor xp = random_tensor({3, 4}, rng);
    CTensor y = random_tensor({4, 2}, rng);
    Complex alpha{0.3, -1.2}, beta{2.0, 0.7};
    CTensor lhs = contract(alpha * x + beta * xp, y, {{1, 0}});
    CTensor rhs = alpha * contract(x, y, {{1, 0}}) +
                  beta * contract(xp, y, {{1, 0}});
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("hermitian_eig on the identity") {
  auto [vals, u] = hermitian_eig(CTensor::identity(3));
  REQUIRE(vals.size() == 3);
  for (double v : vals) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig sorts a diagonal matrix") {
  CTensor m({2, 2}, {2.0, 0.0, 0.0, -1.0});
  auto [vals, u] = hermitian_eig(m);
  CHECK(vals[0] == doctest::Approx(-1.0));
  CHECK(vals[1] == doctest::Approx(2.0));
}

TEST_CASE("hermitian_eig of the swap matrix") {
  CTensor m({2, 2}, {0.0, 1.0, 1.0, 0.0});
  auto [vals, u] = hermitian_eig(m);
  CHECK(vals[0] == doctest::Approx(-1.0));
  CHECK(vals[1] == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CTensor m({2, 2}, {0.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(hermitian_eig(m), NonHermitianError);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(23);
  for (std::size_t n : {4u, 16u, 64u}) {
    CTensor m = random_hermitian(n, rng);
    auto [vals, u] = hermitian_eig(m);
    // U diag(lambda) U*
    CTensor rec({n, n});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex acc{};
        for (std::size_t k = 0; k < n; ++k)
          acc += u.at({i, k}) * vals[k] * std::conj(u.at({j, k}));
        rec.at({i, j}) = acc;
      }
    CHECK(max_abs_diff(rec, m) < 1e-9);
    CTensor uu = matmul(u.transpose().conjugate(), u);
    CHECK(max_abs_diff(uu, CTensor::identity(n)) < 1e-10);
  }
}

TEST_CASE("operator_norm basics") {
  CHECK(operator_norm(CTensor({3, 3})) == 0.0);
  CHECK(operator_norm(CTensor::identity(5)) == doctest::Approx(1.0));
  CTensor m({2, 2}, {0.0, 2.0, 0.0, 0.0});
  CHECK(operator_norm(m) == doctest::Approx(2.0));
}

TEST_CASE("operator_norm satisfies the spectral identity") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    CTensor m = random_tensor({6, 6}, rng);
    double n1 = operator_norm(matmul(m.transpose().conjugate(), m));
    double n2 = operator_norm(m);
    CHECK(std::abs(n1 - n2 * n2) <= 1e-10 * n2 * n2);
  }
}

TEST_CASE("max_abs_diff examples") {
  std::mt19937_64 rng(41);
  CTensor x = random_tensor({4}, rng);
  CHECK(max_abs_diff(x, x) == 0.0);
  CHECK(max_abs_diff(CTensor::vector({1.0}), CTensor::vector({1.0 + 1e-3})) ==
        doctest::Approx(1e-3));
  CHECK(max_abs_diff(CTensor::vector({1.0i}), CTensor::vector({-1.0i})) ==
        doctest::Approx(2.0));
  CHECK_THROWS_AS(max_abs_diff(CTensor({2}), CTensor({3})), ShapeError);
}

TEST_CASE("tolerance requires a positive component") {
  CHECK_THROWS_AS(Tolerance(0.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(Tolerance(1e-9, 0.0));
}

TEST_CASE("non-finite data is rejected") {
  std::vector<Complex> bad{Complex{1.0, 0.0},
                           Complex{std::nan(""), 0.0}};
  CHECK_THROWS_AS(CTensor({2}, bad), NonFiniteError);
}
