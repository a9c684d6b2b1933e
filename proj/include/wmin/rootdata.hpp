#ifndef WMIN_ROOTDATA_HPP
#define WMIN_ROOTDATA_HPP

#include "wmin/algebra_id.hpp"
#include "wmin/linalg.hpp"
#include "wmin/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmin {

struct Root {
  VecQ v;
  bool odd = false;
};

/// Root system of g in explicit coordinates, with the invariant form scaled
/// so that the designated even root theta satisfies (theta|theta) = 2.
struct RootDatum {
  AlgebraId id;
  size_t dim = 0;                // number of coordinates
  std::vector<Root> roots;
  MatQ form;                     // symmetric dim x dim
  VecQ theta;

  Rat ip(const VecQ& x, const VecQ& y) const; // the form
  int theta_pairing(const VecQ& x) const;     // (x|theta), guaranteed integral for roots

  std::vector<VecQ> root_span;   // basis of the span of all roots
  std::vector<VecQ> span_radical; // radical of the form on root_span (psl only)
  size_t cartan_dim = 0;         // dim root_span - dim radical
};

struct GnatComponent {
  bool is_center = false;
  std::vector<size_t> root_idx;  // indices into RootDatum::roots; empty for center
  VecQ center_vec;               // center only: c with (c|theta) = 0, (c|Delta^nat) = 0
  Rat h0;                        // half Casimir eigenvalue on the component (0 for center)
  PolyK ki;                      // k + (h_vee - h0)/2
  Rat sdim;
  size_t rank = 0;               // Cartan dimension of the component
  std::string tag;               // human-readable type, structural where identifiable
};

struct HalfWeightComponent {
  VecQ mu;                        // highest weight of one irreducible summand of g_{-1/2}
  std::vector<VecQ> mu_parts;     // projection onto each g^nat component (same order as comps)
  std::vector<Rat> casimir_parts; // (mu^i | mu^i + 2 rho_0^i), or (mu^0|mu^0) for the center
};

struct HalfSpaceWeights {
  std::vector<HalfWeightComponent> components; // one or two
  bool contragredient_pair = false;            // two summands U and U*
};

struct SuperDims {
  Rat g, g0, ghalf;
};

/// Everything the classification engine needs about (g, theta), computed at
/// the root level.
struct MinimalGradingData {
  RootDatum rd;
  Rat h_vee;
  std::vector<size_t> positive;   // indices of positive roots (theta is the highest)
  VecQ rho;                       // rho_even - rho_odd
  std::vector<GnatComponent> comps; // center first when present
  SuperDims sdims;
  HalfSpaceWeights half_weights;
};

RootDatum build_catalog_entry(const AlgebraId& id);
Rat dual_coxeter(const RootDatum& rd);
MinimalGradingData minimal_grading_data(const AlgebraId& id);

Rat weight_casimir(const MinimalGradingData& mg, size_t comp, const VecQ& mu_part);

/// Identifies an even component's root system (A/B/C/D/E/F/G) from rank and
/// root counts, returning a catalog id; nullopt for super or empty systems.
std::optional<AlgebraId> identify_simple_lie(const MinimalGradingData& mg,
                                             const GnatComponent& comp);

struct GradingViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace wmin

#endif
