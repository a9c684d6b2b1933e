#ifndef WMIN_LINALG_HPP
#define WMIN_LINALG_HPP

#include "wmin/rational.hpp"

#include <optional>
#include <vector>

namespace wmin {

using VecQ = std::vector<Rat>;
using MatQ = std::vector<VecQ>; // row major

VecQ vec_zero(size_t n);
VecQ vec_add(const VecQ& a, const VecQ& b);
VecQ vec_sub(const VecQ& a, const VecQ& b);
VecQ vec_scale(const VecQ& a, const Rat& s);
Rat dot(const VecQ& a, const VecQ& b);
bool is_zero(const VecQ& a);

MatQ mat_zero(size_t r, size_t c);
MatQ mat_mul(const MatQ& a, const MatQ& b);
VecQ mat_apply(const MatQ& a, const VecQ& v);
Rat trace(const MatQ& a);

/// Row-reduce in place; returns pivot column indices.
std::vector<size_t> rref(MatQ& m);
size_t rank(MatQ m);

/// Basis of the null space of m (as vectors of length = #cols).
std::vector<VecQ> kernel(const MatQ& m);

/// Solves m x = b; nullopt if inconsistent (any solution if underdetermined).
std::optional<VecQ> solve(MatQ m, VecQ b);

/// Expands v in the given basis (columns); nullopt if not in the span.
std::optional<VecQ> coords_in_basis(const std::vector<VecQ>& basis, const VecQ& v);

MatQ inverse(MatQ m); // throws on singular

} // namespace wmin

#endif
