/// \file group.hpp
/// \brief Finite group multiplication tables with full law validation,
///        plus constructors for the small groups used throughout.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

struct InvalidGroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite group as an order-n multiplication table of basis indices.
/// All group laws are verified at construction.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<std::size_t>> product,
             std::string label = "")
      : product_(std::move(product)), label_(std::move(label)) {
    validate();
  }

  std::size_t order() const { return product_.size(); }
  std::size_t product(std::size_t i, std::size_t j) const {
    return product_[i][j];
  }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  const std::string& label() const { return label_; }
  const std::vector<std::vector<std::size_t>>& table() const {
    return product_;
  }

  static GroupTable cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return GroupTable(std::move(t), "Z" + std::to_string(n));
  }

  static GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    std::size_t n = g.order(), m = h.order();
    std::vector<std::vector<std::size_t>> t(n * m,
                                            std::vector<std::size_t>(n * m));
    for (std::size_t a = 0; a < n * m; ++a)
      for (std::size_t b = 0; b < n * m; ++b)
        t[a][b] = g.product(a / m, b / m) * m + h.product(a % m, b % m);
    return GroupTable(std::move(t), g.label() + "x" + h.label());
  }

  /// Symmetric group on {0,..,n-1}, elements enumerated in lexicographic
  /// permutation order (identity first), composition (pq)(x) = p(q(x)).
  static GroupTable symmetric(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<std::size_t>& q) {
      for (std::size_t k = 0; k < perms.size(); ++k)
        if (perms[k] == q) return k;
      throw InvalidGroupError("symmetric: composition left the set");
    };
    std::size_t N = perms.size();
    std::vector<std::vector<std::size_t>> t(N, std::vector<std::size_t>(N));
    std::vector<std::size_t> comp(n);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        for (std::size_t x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
        t[i][j] = index_of(comp);
      }
    return GroupTable(std::move(t), "S" + std::to_string(n));
  }

 private:
  void validate() {
    std::size_t n = product_.size();
    if (n == 0) throw InvalidGroupError("group: empty table");
    for (const auto& row : product_) {
      if (row.size() != n) throw InvalidGroupError("group: ragged table");
      for (std::size_t v : row)
        if (v >= n) throw InvalidGroupError("group: entry out of range");
    }
    // identity
    identity_ = n;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        ok = product_[e][i] == i && product_[i][e] == i;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ == n) throw InvalidGroupError("group: no identity element");
    // inverses
    inverse_.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (product_[i][j] == identity_ && product_[j][i] == identity_) {
          inverse_[i] = j;
          break;
        }
      if (inverse_[i] == n)
        throw InvalidGroupError("group: element without inverse");
    }
    // associativity
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (product_[product_[i][j]][k] != product_[i][product_[j][k]])
            throw InvalidGroupError("group: associativity fails");
  }

  std::vector<std::vector<std::size_t>> product_;
  std::string label_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

}  // namespace hopf
