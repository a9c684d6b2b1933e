#ifndef WMIN_MATRIXALG_HPP
#define WMIN_MATRIXALG_HPP

#include "wmin/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmin {

struct UnsupportedRealization : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateForm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotScalar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structure constants of a classical basic Lie superalgebra (or D(2,1;a))
/// on a graded basis of root vectors, x, and Cartan directions orthogonal
/// to x. Elements are coordinate vectors in this basis. The form satisfies
/// (theta|theta) = 2, equivalently (e_theta|e_{-theta}) = (x|x) = 1/2, and
/// [e_theta, e_{-theta}] = x, [x, e_{+-theta}] = +-e_{+-theta}.
struct SuperMatrixAlgebra {
  AlgebraId id;
  MinimalGradingData mg;
  size_t dim = 0;
  std::vector<bool> parity;
  std::vector<std::string> labels;
  std::vector<std::optional<VecQ>> root_of; // root coordinates of root-vector elements
  std::vector<std::vector<VecQ>> brk;       // [i][j] -> coordinates of [e_i, e_j]
  MatQ form;

  VecQ e_theta, e_mtheta, x;
  std::vector<int> grade2;                  // 2 * (ad x eigenvalue), in {-2..2}
  std::vector<size_t> g_half, g_mhalf, g_zero;

  std::vector<std::vector<VecQ>> comp_vectors; // basis per g^nat component (mg.comps order)
  std::vector<std::vector<VecQ>> comp_duals;   // (.|.)-dual basis per component
  std::vector<VecQ> gnat_basis, gnat_duals;    // all of g^nat; duals empty if degenerate
  bool gnat_nondegenerate = true;
  std::vector<VecQ> ne_basis, ne_duals;        // g_{1/2} with its <.,.>_ne dual

  VecQ bracket(const VecQ& a, const VecQ& b) const;
  Rat ip(const VecQ& a, const VecQ& b) const;
  MatQ ad(const VecQ& a) const;
  /// Supertrace of op restricted to the span of the given basis indices.
  Rat supertrace_on(const MatQ& op, const std::vector<size_t>& idx) const;
  VecQ project_nat(const VecQ& a) const;           // orthoprojection g_0 -> g^nat
  VecQ project_comp(size_t i, const VecQ& a) const;
  VecQ basis_vec(size_t i) const;
  bool is_odd_elem(const VecQ& a) const;           // requires homogeneous
};

/// Classical families and D(2,1;a); exceptional entries are root-level only.
SuperMatrixAlgebra realize(const AlgebraId& id);

struct CasimirReport {
  Rat eigenvalue;
  bool is_scalar = false;
};

enum class CasimirKind { GonG, G0onGhalf, CompOnSelf };

/// Builds the Casimir from dual bases and verifies scalar action on the
/// designated subspace; comp selects the component for CompOnSelf.
CasimirReport casimir_eigenvalue(const SuperMatrixAlgebra& A, CasimirKind kind,
                                 size_t comp = 0);

/// kappa_0(a,b): supertrace of ad(a)ad(b) on g_0.
Rat kappa0(const SuperMatrixAlgebra& A, const VecQ& a, const VecQ& b);

} // namespace wmin

#endif
