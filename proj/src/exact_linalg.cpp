#include "qtop/exact_linalg.hpp"

#include "qtop/error.hpp"

namespace qtop {

namespace {

/// Row-reduces in place, pivoting only among the first `cols` columns; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RVector to_rational(const Weight& w) {
  RVector out;
  out.reserve(w.rank());
  for (auto x : w.coords()) out.emplace_back(x);
  return out;
}

Rational dot(const RVector& a, const RVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rank_of(std::span<const RVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<RVector> m(vectors.begin(), vectors.end());
  return row_reduce(m, m.front().size()).size();
}

bool in_span(std::span<const RVector> vectors, const RVector& v) {
  std::vector<RVector> m(vectors.begin(), vectors.end());
  const auto r0 = rank_of(m);
  m.push_back(v);
  return rank_of(m) == r0;
}

std::vector<RVector> annihilator(std::span<const RVector> vectors, std::size_t dim) {
  std::vector<RVector> m(vectors.begin(), vectors.end());
  const auto pivots = row_reduce(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RVector x(dim, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

RVector project_onto_span(std::span<const RVector> vectors, const RVector& v) {
  const auto idx = independent_subset(vectors);
  const std::size_t k = idx.size();
  if (k == 0) return RVector(v.size(), Rational(0));
  // Gram system G a = (<b_i, v>)
  std::vector<RVector> aug(k, RVector(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = dot(vectors[idx[i]], vectors[idx[j]]);
    aug[i][k] = dot(vectors[idx[i]], v);
  }
  row_reduce(aug, k);
  RVector out(v.size(), Rational(0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < v.size(); ++c) out[c] += aug[i][k] * vectors[idx[i]][c];
  return out;
}

std::optional<RVector> solve_columns(std::span<const RVector> cols, const RVector& rhs) {
  const std::size_t k = cols.size();
  const std::size_t n = rhs.size();
  std::vector<RVector> aug(n, RVector(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < k; ++j) aug[r][j] = cols[j][r];
    aug[r][k] = rhs[r];
  }
  const auto pivots = row_reduce(aug, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw Error(Errc::InvalidInput, "solve_columns: dependent columns");
  RVector x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = aug[i][k];
  return x;
}

std::vector<std::size_t> independent_subset(std::span<const RVector> vectors) {
  std::vector<std::size_t> idx;
  std::vector<RVector> chosen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    chosen.push_back(vectors[i]);
    if (rank_of(chosen) == chosen.size())
      idx.push_back(i);
    else
      chosen.pop_back();
  }
  return idx;
}

}  // namespace qtop
