#ifndef WMIN_WSTRUCT_HPP
#define WMIN_WSTRUCT_HPP

#include "wmin/matrixalg.hpp"

#include <map>
#include <vector>

namespace wmin {

struct PoleNotCancelled : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentPairs : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoNondegeneratePair : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchAt : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// [J^a, J^b] bracket data: current part plus the level-dependent scalar.
struct JJBracket {
  VecQ commutator;
  PolyK lambda_scalar; // (k + h_vee/2)(a|b) - kappa_0(a,b)/4
};
JJBracket ope_JJ(const SuperMatrixAlgebra& A, const VecQ& a, const VecQ& b);

/// [G^u, G^v] bracket, assembled from structure constants, with quadratic
/// terms in canonical order (first index <= second in basis order; the
/// reordering corrections are folded into deriv_term).
struct GGBracket {
  PolyK omega_coeff;
  std::map<std::pair<size_t, size_t>, PolyK> quad_terms; // :J^{b_i} J^{b_j}:
  std::map<size_t, PolyK> deriv_term;                    // coeff of dJ^{b_i}
  std::map<size_t, PolyK> lambda_term;                   // coeff of lambda J^{b_i}
  PolyK lambda2_scalar;                                  // coeff of lambda^2 1
  bool quad_available = true; // false when the centralizer dual bases degenerate
};
/// u, v must be parity-homogeneous and supported on the grade -1/2 subspace.
GGBracket ope_GG_full(const SuperMatrixAlgebra& A, const VecQ& u, const VecQ& v);

struct PkResult {
  PolyK p; // monic, degree two
  std::vector<std::tuple<size_t, size_t, PolyK>> witnesses; // (u idx, v idx, extracted)
};
/// Reads p(k) off the lambda^2 scalars over all basis pairs of g_{-1/2}:
/// the (2)-product is twice the lambda^2 coefficient and must equal
/// 4 (e_theta|[u,v]) p(k) for a single monic quadratic p.
PkResult extract_pk(const SuperMatrixAlgebra& A);

struct BracketSimplificationReport {
  PolyK p;
  bool ki_divides = false;      // every component level divides p
  bool lambda_identity = false; // lambda term equals 4 sum_i (p/k_i) (.)_i
  bool full_agreement = false;  // entire bracket matches the simplified form
};
/// Verifies that the assembled [G^u, G^v] bracket coincides, for every basis
/// pair, with its simplified closed form driven by p(k); throws MismatchAt
/// naming the pair and term on failure.
BracketSimplificationReport verify_bracket_simplification(const SuperMatrixAlgebra& A);

} // namespace wmin

#endif
