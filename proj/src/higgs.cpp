#include "higgs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace higgs {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long WedgeModel::total_dim() const {
  long long t = 0;
  for (long long d : level_dims) t += d;
  return t;
}

WedgeModel build_model(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("build_model: need p, q >= 1");
  if (binomial(p + q, p) > 10000)
    throw std::invalid_argument("build_model: dimension guard 10^4 exceeded");
  WedgeModel model;
  model.p = p;
  model.q = q;
  int levels = std::min(p, q);
  model.graded_basis.assign(levels + 1, {});
  // enumerate p-subsets of {0,..,p+q-1} in lexicographic order; the level of
  // a subset is how many of its indices land in the q-block {p,..,p+q-1}
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if ((int)cur.size() == p) {
      int level = 0;
      for (int x : cur)
        if (x >= p) ++level;
      model.graded_basis[level].push_back(cur);
      return;
    }
    for (int i = start; i < p + q; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  for (const auto& layer : model.graded_basis) model.level_dims.push_back((long long)layer.size());
  for (int i = 0; i <= levels; ++i)
    if (model.level_dims[i] != binomial(p, p - i) * binomial(q, i))
      throw std::logic_error("build_model: level dimension bookkeeping failed");
  return model;
}

TangentMatrix zero_matrix(int q, int p) {
  TangentMatrix v;
  v.rows = q;
  v.cols = p;
  v.entries.assign(q, std::vector<Scalar>(p, Scalar(0)));
  return v;
}

TangentMatrix matrix_of(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty() || rows[0].empty()) throw std::invalid_argument("matrix_of: empty shape");
  TangentMatrix v = zero_matrix((int)rows.size(), (int)rows[0].size());
  for (int r = 0; r < v.rows; ++r) {
    if ((int)rows[r].size() != v.cols) throw std::invalid_argument("matrix_of: ragged rows");
    for (int c = 0; c < v.cols; ++c) v.entries[r][c] = Scalar(rows[r][c]);
  }
  return v;
}

std::vector<Matrix> theta_matrix(const WedgeModel& model, const TangentMatrix& v) {
  if (v.rows != model.q || v.cols != model.p)
    throw std::invalid_argument("theta_matrix: tangent matrix shape mismatch");
  int levels = (int)model.graded_basis.size() - 1;
  std::vector<Matrix> maps;
  for (int i = 0; i < levels; ++i) {
    const auto& src = model.graded_basis[i];
    const auto& dst = model.graded_basis[i + 1];
    Matrix m(dst.size(), std::vector<Scalar>(src.size(), Scalar(0)));
    for (size_t col = 0; col < src.size(); ++col) {
      const auto& S = src[col];
      for (size_t j = 0; j < S.size(); ++j) {
        int a = S[j];
        if (a >= model.p) continue;  // only p-block indices move
        for (int b = 0; b < model.q; ++b) {
          int t = model.p + b;
          if (std::binary_search(S.begin(), S.end(), t)) continue;  // wedge kills repeats
          if (v.entries[b][a] == Scalar(0)) continue;
          std::vector<int> T;
          T.reserve(S.size());
          int crossings = 0;
          for (int x : S) {
            if (x == a) continue;
            if (x > a && x < t) ++crossings;  // t > a always, t sits in the q-block
            T.push_back(x);
          }
          T.insert(std::upper_bound(T.begin(), T.end(), t), t);
          auto row = std::lower_bound(dst.begin(), dst.end(), T) - dst.begin();
          if (row == (long long)dst.size() || dst[row] != T)
            throw std::logic_error("theta_matrix: image subset missing from basis");
          Scalar coeff = v.entries[b][a];
          if (crossings % 2 == 1) coeff = -coeff;
          m[row][col] += coeff;
        }
      }
    }
    maps.push_back(std::move(m));
  }
  return maps;
}

long long matrix_rank(Matrix m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == Scalar(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == Scalar(0)) continue;
      Scalar f = m[r][c] / m[rank][c];
      for (size_t s = c; s < cols; ++s) m[r][s] -= f * m[rank][s];
    }
    ++rank;
  }
  return (long long)rank;
}

long long tangent_rank(const TangentMatrix& v) { return matrix_rank(v.entries); }

std::vector<Scalar> bottom_image(const WedgeModel& model, const TangentMatrix& v, int k) {
  if (k < 0 || k > std::min(model.p, model.q) + 1)
    throw std::invalid_argument("bottom_image: degree out of range");
  auto maps = theta_matrix(model, v);
  std::vector<Scalar> vec{Scalar(1)};  // the level-0 line e_{0..p-1}
  for (int step = 0; step < k; ++step) {
    if (step >= (int)maps.size()) {
      // past the top level the iterated field vanishes identically
      return std::vector<Scalar>(model.level_dims.back(), Scalar(0));
    }
    const Matrix& m = maps[step];
    std::vector<Scalar> next(m.size(), Scalar(0));
    for (size_t r = 0; r < m.size(); ++r)
      for (size_t c = 0; c < vec.size(); ++c) next[r] += m[r][c] * vec[c];
    vec = std::move(next);
  }
  return vec;
}

long long iterated_rank(const WedgeModel& model, const TangentMatrix& v, int k) {
  for (const Scalar& x : bottom_image(model, v, k))
    if (x != Scalar(0)) return 1;
  return 0;
}

bool membership_in_Ik(const WedgeModel& model, const TangentMatrix& v, int k) {
  return iterated_rank(model, v, k) == 0;
}

}  // namespace higgs
