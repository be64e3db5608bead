#include "schur.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace schur {

bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

long long weight_of(const Partition& p) {
  long long s = 0;
  for (long long x : p) s += x;
  return s;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition out(p[0], 0);
  for (long long part : p)
    for (long long j = 0; j < part; ++j) out[j] += 1;
  return out;
}

BigInt schur_dimension(const Partition& p, int m) {
  if (!is_partition(p)) throw std::invalid_argument("schur_dimension: not a partition");
  if ((int)p.size() > m) return 0;
  Partition conj = conjugate(p);
  BigInt num = 1, den = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (long long j = 0; j < p[i]; ++j) {
      num *= m + j - (long long)i;                            // content
      den *= p[i] - j + conj[j] - (long long)i - 1;           // hook length
    }
  if (num % den != 0) throw std::logic_error("schur_dimension: hook content not integral");
  return num / den;
}

namespace {

void partitions_rec(int remaining, long long max_part, int rows_left, Partition& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (long long part = std::min<long long>(max_part, remaining); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - (int)part, part, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

// all ways to add a horizontal k-strip to mu (no row cap)
std::vector<Partition> horizontal_strips(const Partition& mu, int k) {
  std::vector<Partition> out;
  size_t rows = mu.size() + 1;
  Partition nu;
  std::function<void(size_t, int)> rec = [&](size_t r, int left) {
    if (r == rows) {
      if (left == 0) {
        Partition trimmed = nu;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.push_back(trimmed);
      }
      return;
    }
    long long base = r < mu.size() ? mu[r] : 0;
    // strip condition: new row r must stop before the previous row of mu
    long long cap = r == 0 ? base + left : std::min<long long>(mu[r - 1], base + left);
    // partition condition against the row above
    if (r > 0) cap = std::min(cap, nu[r - 1]);
    for (long long v = base; v <= cap; ++v) {
      nu.push_back(v);
      rec(r + 1, left - (int)(v - base));
      nu.pop_back();
    }
  };
  rec(0, k);
  std::sort(out.begin(), out.end(), std::greater<Partition>());
  return out;
}

std::vector<Partition> filter_rows(std::vector<Partition> v, int max_rows) {
  std::vector<Partition> out;
  for (auto& p : v)
    if ((int)p.size() <= max_rows) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<Partition> partitions_of(int k, int max_rows) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(k, k, std::max(max_rows, 0), cur, out);
  return out;
}

std::vector<Partition> pieri_rows(const Partition& mu, int k, int max_rows) {
  if (!is_partition(mu)) throw std::invalid_argument("pieri_rows: not a partition");
  if (k < 0) throw std::invalid_argument("pieri_rows: negative strip");
  return filter_rows(horizontal_strips(mu, k), max_rows);
}

std::vector<Partition> pieri_cols(const Partition& mu, int k, int max_rows) {
  if (!is_partition(mu)) throw std::invalid_argument("pieri_cols: not a partition");
  if (k < 0) throw std::invalid_argument("pieri_cols: negative strip");
  std::vector<Partition> out;
  for (const auto& t : horizontal_strips(conjugate(mu), k)) out.push_back(conjugate(t));
  std::sort(out.begin(), out.end(), std::greater<Partition>());
  return filter_rows(std::move(out), max_rows);
}

std::map<Partition, long long> lr_coefficients(const Partition& lam, const Partition& mu,
                                               int max_rows) {
  if (!is_partition(lam) || !is_partition(mu))
    throw std::invalid_argument("lr_coefficients: not a partition");
  if (weight_of(lam) + weight_of(mu) > 20)
    throw std::invalid_argument("lr_coefficients: more than 20 boxes");
  std::map<Partition, long long> out;
  // Build nu by adding, for i = 1..len(mu), a horizontal mu_i-strip of
  // entries i.  Lattice condition: the count of i in rows <= r never exceeds
  // the count of i-1 in rows <= r-1.  Row counts per label are tracked.
  size_t labels = mu.size();
  std::vector<std::vector<long long>> placed(labels + 1);  // per-label row counts
  Partition shape = lam;
  std::function<void(size_t)> place_label = [&](size_t i) {
    if (i > labels) {
      Partition key = shape;
      if ((int)key.size() <= max_rows) out[key] += 1;
      return;
    }
    size_t rows = shape.size() + 1;
    std::vector<long long> counts(rows, 0);
    Partition before = shape;
    std::function<void(size_t, long long, long long, long long)> rec =
        [&](size_t r, long long left, long long cum_this, long long cum_prev) {
          if (r == rows) {
            if (left == 0) {
              Partition grown;
              for (size_t t = 0; t < rows; ++t) {
                long long v = (t < before.size() ? before[t] : 0) + counts[t];
                if (v > 0) grown.push_back(v);
              }
              Partition saved = shape;
              shape = grown;
              placed[i] = counts;
              place_label(i + 1);
              shape = saved;
            }
            return;
          }
          long long base = r < before.size() ? before[r] : 0;
          long long above = r == 0 ? base + left : before[r - 1];
          long long cap = std::min(base + left, above);
          if (r > 0) cap = std::min(cap, (r - 1 < before.size() ? before[r - 1] : 0) + counts[r - 1]);
          // previous-label cumulative count through row r-1
          long long prev_cum =
              cum_prev + (i >= 2 && r >= 1 && r - 1 < placed[i - 1].size() ? placed[i - 1][r - 1]
                                                                           : 0);
          for (long long v = base; v <= cap; ++v) {
            long long add = v - base;
            if (i >= 2 && cum_this + add > prev_cum) break;  // lattice violated
            counts[r] = add;
            rec(r + 1, left - add, cum_this + add, prev_cum);
            counts[r] = 0;
          }
        };
    rec(0, mu[i - 1], 0, 0);
  };
  // label row counts are 1-indexed internally via placed[i]
  place_label(1);
  return out;
}

std::vector<Partition> cauchy_sym(int k, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("cauchy_sym: factors must be positive");
  return partitions_of(k, std::min(p, q));
}

std::vector<Partition> sym_of_sym(int k, int n) {
  std::vector<Partition> out;
  for (auto& half : partitions_of(k, n)) {
    Partition lam = half;
    for (auto& x : lam) x *= 2;
    out.push_back(std::move(lam));
  }
  return out;
}

std::vector<Partition> sym_of_ext(int k, int n) {
  std::vector<Partition> out;
  // conjugates of even partitions of 2k whose first part is at most n
  for (auto& half : partitions_of(k, k)) {
    if (!half.empty() && 2 * half[0] > n) continue;
    Partition dbl = half;
    for (auto& x : dbl) x *= 2;
    out.push_back(conjugate(dbl));
  }
  std::sort(out.begin(), out.end(), std::greater<Partition>());
  return out;
}

}  // namespace schur
