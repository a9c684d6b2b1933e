#include "wmin/linalg.hpp"

#include <stdexcept>

namespace wmin {

VecQ vec_zero(size_t n) { return VecQ(n, Rat(0)); }

VecQ vec_add(const VecQ& a, const VecQ& b)
{
  VecQ r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

VecQ vec_sub(const VecQ& a, const VecQ& b)
{
  VecQ r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

VecQ vec_scale(const VecQ& a, const Rat& s)
{
  VecQ r(a);
  for (auto& x : r) x *= s;
  return r;
}

Rat dot(const VecQ& a, const VecQ& b)
{
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const VecQ& a)
{
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

MatQ mat_zero(size_t r, size_t c) { return MatQ(r, VecQ(c, Rat(0))); }

MatQ mat_mul(const MatQ& a, const MatQ& b)
{
  MatQ r = mat_zero(a.size(), b[0].size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t l = 0; l < b.size(); ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

VecQ mat_apply(const MatQ& a, const VecQ& v)
{
  VecQ r = vec_zero(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

Rat trace(const MatQ& a)
{
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

std::vector<size_t> rref(MatQ& m)
{
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(MatQ m) { return rref(m).size(); }

std::vector<VecQ> kernel(const MatQ& m)
{
  if (m.empty()) return {};
  MatQ r = m;
  std::vector<size_t> pivots = rref(r);
  size_t cols = m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<VecQ> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v = vec_zero(cols);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<VecQ> solve(MatQ m, VecQ b)
{
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<size_t> pivots = rref(m);
  VecQ x = vec_zero(cols);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt; // pivot in augmented column
    x[pivots[i]] = m[i][cols];
  }
  return x;
}

std::optional<VecQ> coords_in_basis(const std::vector<VecQ>& basis, const VecQ& v)
{
  if (basis.empty()) return is_zero(v) ? std::optional<VecQ>(VecQ{}) : std::nullopt;
  size_t dim = basis[0].size();
  MatQ m = mat_zero(dim, basis.size());
  for (size_t j = 0; j < basis.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m[i][j] = basis[j][i];
  auto x = solve(m, v);
  if (!x) return std::nullopt;
  // solve() ignores redundant equations only when consistent; verify exactly
  VecQ back = vec_zero(dim);
  for (size_t j = 0; j < basis.size(); ++j) back = vec_add(back, vec_scale(basis[j], (*x)[j]));
  if (back != v) return std::nullopt;
  return x;
}

MatQ inverse(MatQ m)
{
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  std::vector<size_t> pivots = rref(m);
  if (pivots.size() != n || pivots.back() >= n)
    throw std::invalid_argument("inverse: singular matrix");
  MatQ inv = mat_zero(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

} // namespace wmin
