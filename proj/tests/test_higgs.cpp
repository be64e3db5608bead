#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "higgs.hpp"

using namespace higgs;

namespace {

std::mt19937_64 rng(20240);

Scalar rand_scalar() {
  std::uniform_int_distribution<long long> num(-4, 4);
  std::uniform_int_distribution<long long> den(1, 2);
  return Scalar(num(rng), den(rng));
}

TangentMatrix random_matrix(int q, int p) {
  TangentMatrix v = zero_matrix(q, p);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < p; ++c) v.entries[r][c] = rand_scalar();
  return v;
}

// sum of r outer products: rank at most r, usually exactly r
TangentMatrix random_low_rank(int q, int p, int r) {
  TangentMatrix v = zero_matrix(q, p);
  std::uniform_int_distribution<long long> small(-3, 3);
  for (int t = 0; t < r; ++t) {
    std::vector<long long> a(q), b(p);
    for (auto& x : a) x = small(rng);
    for (auto& x : b) x = small(rng);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < p; ++j) v.entries[i][j] += Scalar(a[i] * b[j]);
  }
  return v;
}

// random product of integer shears and sign flips: invertible over Q
std::vector<std::vector<Scalar>> random_unimodular(int n) {
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<long long> small(-2, 2);
  for (int step = 0; step < 3 * n; ++step) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      for (int c = 0; c < n; ++c) m[i][c] = -m[i][c];
    } else {
      Scalar f(small(rng));
      for (int c = 0; c < n; ++c) m[i][c] += f * m[j][c];
    }
  }
  return m;
}

TangentMatrix conjugated(const TangentMatrix& v, const std::vector<std::vector<Scalar>>& B,
                         const std::vector<std::vector<Scalar>>& A) {
  TangentMatrix out = zero_matrix(v.rows, v.cols);
  for (int i = 0; i < v.rows; ++i)
    for (int j = 0; j < v.cols; ++j) {
      Scalar s(0);
      for (int a = 0; a < v.rows; ++a)
        for (int b = 0; b < v.cols; ++b) s += B[i][a] * v.entries[a][b] * A[b][j];
      out.entries[i][j] = s;
    }
  return out;
}

Scalar det3(const TangentMatrix& v) {
  const auto& e = v.entries;
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
         e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

}  // namespace

TEST_CASE("wedge model construction") {
  auto m22 = build_model(2, 2);
  CHECK(m22.level_dims == std::vector<long long>{1, 4, 1});
  CHECK(m22.total_dim() == 6);
  CHECK(m22.graded_basis[0] == std::vector<std::vector<int>>{{0, 1}});
  CHECK(m22.graded_basis[1] ==
        std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(m22.graded_basis[2] == std::vector<std::vector<int>>{{2, 3}});

  CHECK(build_model(1, 3).level_dims == std::vector<long long>{1, 3});
  CHECK(build_model(2, 3).level_dims == std::vector<long long>{1, 6, 3});
  CHECK(build_model(2, 3).total_dim() == 10);
  CHECK(build_model(3, 3).level_dims == std::vector<long long>{1, 9, 9, 1});
  CHECK(build_model(3, 1).level_dims == std::vector<long long>{1, 3});

  CHECK_THROWS_AS(build_model(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_model(8, 8), std::invalid_argument);  // 12870 > 10^4
}

TEST_CASE("theta as a derivation") {
  auto m11 = build_model(1, 1);
  auto maps = theta_matrix(m11, matrix_of({{5}}));
  REQUIRE(maps.size() == 1);
  CHECK(maps[0] == Matrix{{Scalar(5)}});

  auto m22 = build_model(2, 2);
  auto zero = theta_matrix(m22, zero_matrix(2, 2));
  for (const auto& m : zero)
    for (const auto& row : m)
      for (const auto& x : row) CHECK(x == Scalar(0));

  // identity tangent: theta(e01) = e03 - e12, theta^2(e01) = 2 det e23
  auto id = matrix_of({{1, 0}, {0, 1}});
  CHECK(bottom_image(m22, id, 1) ==
        std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(-1), Scalar(0)});
  CHECK(bottom_image(m22, id, 2) == std::vector<Scalar>{Scalar(2)});
  CHECK(iterated_rank(m22, id, 1) == 1);
  CHECK(iterated_rank(m22, id, 2) == 1);
  CHECK(iterated_rank(m22, id, 3) == 0);

  // theta^2 on the bottom line computes twice the determinant
  for (int t = 0; t < 40; ++t) {
    auto v = random_matrix(2, 2);
    Scalar det = v.entries[0][0] * v.entries[1][1] - v.entries[0][1] * v.entries[1][0];
    CHECK(bottom_image(m22, v, 2) == std::vector<Scalar>{Scalar(2) * det});
  }
  auto m33 = build_model(3, 3);
  for (int t = 0; t < 15; ++t) {
    auto v = random_matrix(3, 3);
    CHECK(bottom_image(m33, v, 3) == std::vector<Scalar>{Scalar(6) * det3(v)});
  }

  // linearity in the tangent direction
  for (int t = 0; t < 10; ++t) {
    auto v = random_matrix(2, 3);
    auto w = random_matrix(2, 3);
    TangentMatrix sum = zero_matrix(2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) sum.entries[i][j] = v.entries[i][j] + w.entries[i][j];
    auto m32 = build_model(3, 2);
    auto mv = theta_matrix(m32, v), mw = theta_matrix(m32, w), ms = theta_matrix(m32, sum);
    for (size_t l = 0; l < ms.size(); ++l)
      for (size_t r = 0; r < ms[l].size(); ++r)
        for (size_t c = 0; c < ms[l][r].size(); ++c)
          CHECK(ms[l][r][c] == mv[l][r][c] + mw[l][r][c]);
  }

  CHECK_THROWS_AS(theta_matrix(m22, zero_matrix(3, 2)), std::invalid_argument);
}

TEST_CASE("exact rank") {
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank({{Scalar(0), Scalar(0)}}) == 0);
  CHECK(matrix_rank({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}) == 1);
  CHECK(matrix_rank({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(5)}}) == 2);
  CHECK(tangent_rank(matrix_of({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(tangent_rank(zero_matrix(3, 2)) == 0);
  // rank is invariant under tiny rational rescalings
  auto v = matrix_of({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}});
  CHECK(tangent_rank(v) == 2);
}

TEST_CASE("membership tracks matrix rank") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    auto model = build_model(p, q);
    int top = std::min(p, q);
    for (int t = 0; t < 150; ++t) {
      TangentMatrix v = (t % 2 == 0) ? random_matrix(q, p)
                                     : random_low_rank(q, p, (int)(t / 2 % (top + 1)));
      long long r = tangent_rank(v);
      for (int k = 1; k <= top + 1; ++k) {
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(k);
        CHECK(membership_in_Ik(model, v, k) == (r < k));
        CHECK(iterated_rank(model, v, k) == (r >= k ? 1 : 0));
      }
    }
    // nilpotency holds structurally one degree past the rank
    CHECK(iterated_rank(model, random_matrix(q, p), top + 1) == 0);
  }
}

TEST_CASE("equivariance under block basis changes") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    auto model = build_model(p, q);
    for (int t = 0; t < 25; ++t) {
      auto v = (t % 2 == 0) ? random_matrix(q, p) : random_low_rank(q, p, t % 3);
      auto A = random_unimodular(p);
      auto B = random_unimodular(q);
      auto w = conjugated(v, B, A);
      for (int k = 1; k <= std::min(p, q) + 1; ++k)
        CHECK(iterated_rank(model, v, k) == iterated_rank(model, w, k));
    }
  }
}
