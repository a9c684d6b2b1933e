#ifndef WMIN_LEVELS_HPP
#define WMIN_LEVELS_HPP

#include "wmin/rootdata.hpp"

#include <set>
#include <string>
#include <vector>

namespace wmin {

struct NotCollapsing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SetMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Why a candidate conformal level was discarded.
enum class ExclusionTag {
  Critical,     // k + h_vee = 0
  Collapsing,   // p(k) = 0 (conformal, but not *non-collapsing* conformal)
  KiZero,       // some component level k_i vanishes
  SugawaraPole, // some k_i + h_vee_{0,i} = 0 with k_i != 0
};
std::string exclusion_tag_name(ExclusionTag t);

struct ExcludedCandidate {
  Rat k;
  ExclusionTag tag;
  std::string detail;
  bool operator<(const ExcludedCandidate& o) const
  {
    return k < o.k || (k == o.k && tag < o.tag);
  }
};

struct LevelClassification {
  AlgebraId id;
  MinimalGradingData mg;
  PolyK p_of_k;                         // catalog closed form
  std::set<Rat> collapsing;             // roots of p, minus the critical level
  std::set<Rat> trivial;                // collapsing with every k_i = 0
  std::set<Rat> conformal_noncollapsing;
  std::vector<ExcludedCandidate> excluded;
  RatFunK c_g;                          // central charge of W^k
  RatFunK c_sug;                        // Sugawara charge, generic branch (no k_i = 0)
};

/// c(g, k) = k sdim/(k + h_vee) - 6k + h_vee - 4.
RatFunK central_charge(const Rat& sdim_g, const Rat& h_vee);

/// Closed form of the monic quadratic p(k) per family (catalog data; the
/// ab initio route in the bracket engine must reproduce it).
PolyK table_pk(const AlgebraId& id);

LevelClassification classify(const AlgebraId& id);

/// Levels where the simple W-algebra collapses to C|0>: computed
/// structurally as p(k) = 0 with every component level zero.
std::set<Rat> trivial_levels(const LevelClassification& lc);

struct CollapseFactor {
  size_t comp;       // index into mg.comps
  Rat level;         // k_i evaluated at the collapsing level
  bool is_center;
  std::string tag;
};
struct CollapseTargetResult {
  std::vector<CollapseFactor> factors; // only k_i != 0; empty = trivial algebra
};
CollapseTargetResult collapse_target(const LevelClassification& lc, const Rat& k);

struct CentralChargeCriterionReport {
  std::set<Rat> solutions; // rational k with c_g(k) = c_sug(k), branch-aware
  std::set<Rat> expected;  // (collapsing within the Sugawara-admissible set) + conformal
  bool match = false;
};
/// Solves c(g,k) = c_sug(k) and checks the solution set equals the union of
/// admissible collapsing levels and conformal non-collapsing levels. When
/// some k_i vanishes at a candidate, the corresponding factor (including the
/// rank-one center) drops out of c_sug and the branch value is used.
CentralChargeCriterionReport check_central_charge_criterion(const LevelClassification& lc);

enum class ChainEnd {
  Virasoro,      // last factor is sl(2); terminal Virasoro central charge recorded
  Heisenberg,    // only abelian factors survive
  Trivial,       // no factor survives: C|0>
  MultiFactor,   // more than one simple factor; reduction not iterated
  NonCollapsing, // single simple factor whose level is not collapsing again
  Unidentified,  // factor is a superalgebra component not mapped to a catalog id
};
std::string chain_end_name(ChainEnd e);

struct ChainStep {
  AlgebraId id;
  Rat level;
};
struct CollapseChain {
  std::vector<ChainStep> steps; // starts with the input pair
  ChainEnd end = ChainEnd::Trivial;
  Rat virasoro_c;               // set for ChainEnd::Virasoro
};
CollapseChain collapse_chain(const AlgebraId& id, const Rat& k);

} // namespace wmin

#endif
