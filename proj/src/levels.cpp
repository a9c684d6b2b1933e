#include "wmin/levels.hpp"

#include <algorithm>

namespace wmin {

std::string exclusion_tag_name(ExclusionTag t)
{
  switch (t) {
    case ExclusionTag::Critical: return "critical";
    case ExclusionTag::Collapsing: return "collapsing";
    case ExclusionTag::KiZero: return "ki_zero";
    case ExclusionTag::SugawaraPole: return "sugawara_pole";
  }
  return "?";
}

std::string chain_end_name(ChainEnd e)
{
  switch (e) {
    case ChainEnd::Virasoro: return "virasoro";
    case ChainEnd::Heisenberg: return "heisenberg";
    case ChainEnd::Trivial: return "trivial";
    case ChainEnd::MultiFactor: return "multi_factor";
    case ChainEnd::NonCollapsing: return "non_collapsing";
    case ChainEnd::Unidentified: return "unidentified";
  }
  return "?";
}

RatFunK central_charge(const Rat& sdim_g, const Rat& h_vee)
{
  // k sdim/(k + h_vee) - 6k + h_vee - 4
  RatFunK first(PolyK({Rat(0), sdim_g}), PolyK::linear(h_vee));
  return first + RatFunK::from_poly(PolyK({h_vee - 4, Rat(-6)}));
}

PolyK table_pk(const AlgebraId& id)
{
  using F = AlgebraId::Fam;
  auto two = [](const Rat& a, const Rat& b) { return PolyK::linear(a) * PolyK::linear(b); };
  switch (id.fam) {
    case F::SL: return two(Rat(1), Rat(id.m - id.n) / 2);
    case F::PSL: return PolyK::k() * PolyK::linear(Rat(1));
    case F::OSP: return two(Rat(2), Rat(id.m - id.n - 4) / 2);
    case F::SPO: return two(rat(1, 2), Rat(id.n - id.m + 4) / 4);
    case F::D21A: return two(-id.a, Rat(1) + id.a);
    case F::F4_SL2: return two(rat(2, 3), rat(-2, 3));
    case F::F4_D212: return two(rat(3, 2), Rat(1));
    case F::G3_SL2: return two(rat(-1, 2), rat(3, 4));
    case F::G3_G2: return two(rat(2, 3), rat(4, 3));
    case F::G2: return two(rat(4, 3), rat(5, 3));
    case F::F4: return two(rat(5, 2), Rat(3));
    case F::E6: return two(Rat(3), Rat(4));
    case F::E7: return two(Rat(4), Rat(6));
    case F::E8: return two(Rat(6), Rat(10));
  }
  throw std::logic_error("table_pk: unhandled family");
}

namespace {

// conformal-level candidates for one irreducible summand of g_{-1/2}:
// rational roots of the cleared form of
//   sum_i (mu^i|mu^i + 2 rho_0^i) / (2(k_i + h0_i)) = 3/2
std::set<Rat> conformal_candidates(const MinimalGradingData& mg,
                                   const HalfWeightComponent& hw)
{
  std::vector<PolyK> dens;
  for (size_t i = 0; i < mg.comps.size(); ++i)
    dens.push_back((mg.comps[i].ki + PolyK::constant(mg.comps[i].h0)).scaled(Rat(2)));

  PolyK cleared = PolyK::constant(rat(-3, 2));
  for (const PolyK& d : dens) cleared = cleared * d;
  for (size_t i = 0; i < mg.comps.size(); ++i) {
    PolyK term = PolyK::constant(hw.casimir_parts[i]);
    for (size_t j = 0; j < dens.size(); ++j)
      if (j != i) term = term * dens[j];
    cleared = cleared + term;
  }
  if (cleared.is_zero())
    throw SetMismatch(mg.rd.id.str() + ": conformal-level equation is identically satisfied");
  return rational_roots(cleared).roots;
}

Rat sl2_w_central_charge(const Rat& k)
{
  // central charge of the rank-one W-algebra: 3k/(k+2) - 6k - 2
  return 3 * k / (k + 2) - 6 * k - 2;
}

} // namespace

LevelClassification classify(const AlgebraId& id)
{
  id.validate();
  if (id.fam == AlgebraId::Fam::SL && id.n >= 1 && id.m == id.n + 2)
    throw ExcludedAlgebra(id.str() +
                          ": centralizer of the grading triple is not a direct sum of minimal ideals; excluded from classification");

  LevelClassification lc;
  lc.id = id;
  lc.mg = minimal_grading_data(id);
  const MinimalGradingData& mg = lc.mg;
  Rat h_vee = mg.h_vee;

  lc.p_of_k = table_pk(id);
  RootExtraction pr = rational_roots(lc.p_of_k);
  if (!pr.splits)
    throw SetMismatch(id.str() + ": p(k) does not split over Q");
  for (const Rat& r : pr.roots)
    if (r != -h_vee) lc.collapsing.insert(r);

  for (const Rat& k : lc.collapsing) {
    bool all_zero = true;
    for (const GnatComponent& c : mg.comps)
      if (c.ki.eval(k) != 0) all_zero = false;
    if (all_zero) lc.trivial.insert(k);
  }

  // conformal non-collapsing levels; the candidate equation is solved per
  // irreducible summand of g_{-1/2} and the sets must agree
  std::set<Rat> candidates;
  for (size_t w = 0; w < mg.half_weights.components.size(); ++w) {
    std::set<Rat> cs = conformal_candidates(mg, mg.half_weights.components[w]);
    if (w == 0) {
      candidates = cs;
    } else if (cs != candidates) {
      throw SetMismatch(id.str() + ": conformal candidates differ between g_{-1/2} summands");
    }
  }
  for (const Rat& k : candidates) {
    if (k == -h_vee) {
      lc.excluded.push_back({k, ExclusionTag::Critical, "k + h_vee = 0"});
      continue;
    }
    if (lc.p_of_k.eval(k) == 0) {
      lc.excluded.push_back({k, ExclusionTag::Collapsing, "p(k) = 0"});
      continue;
    }
    bool done = false;
    for (size_t i = 0; i < mg.comps.size() && !done; ++i)
      if (mg.comps[i].ki.eval(k) == 0) {
        lc.excluded.push_back({k, ExclusionTag::KiZero,
                               "k_" + std::to_string(i) + " = 0 (" + mg.comps[i].tag + ")"});
        done = true;
      }
    if (done) continue;
    for (size_t i = 0; i < mg.comps.size() && !done; ++i)
      if (mg.comps[i].ki.eval(k) + mg.comps[i].h0 == 0) {
        lc.excluded.push_back({k, ExclusionTag::SugawaraPole,
                               "k_" + std::to_string(i) + " + h0_" + std::to_string(i) +
                                   " = 0 (" + mg.comps[i].tag + ")"});
        done = true;
      }
    if (!done) lc.conformal_noncollapsing.insert(k);
  }

  lc.c_g = central_charge(mg.sdims.g, h_vee);
  lc.c_sug = RatFunK();
  for (const GnatComponent& c : mg.comps) {
    if (c.is_center) {
      lc.c_sug = lc.c_sug + RatFunK::constant(Rat(1));
    } else {
      lc.c_sug = lc.c_sug + RatFunK(c.ki.scaled(c.sdim), c.ki + PolyK::constant(c.h0));
    }
  }
  return lc;
}

std::set<Rat> trivial_levels(const LevelClassification& lc) { return lc.trivial; }

CollapseTargetResult collapse_target(const LevelClassification& lc, const Rat& k)
{
  if (lc.p_of_k.eval(k) != 0)
    throw NotCollapsing(lc.id.str() + ": p(" + to_string(k) + ") != 0");
  CollapseTargetResult t;
  for (size_t i = 0; i < lc.mg.comps.size(); ++i) {
    Rat ki = lc.mg.comps[i].ki.eval(k);
    if (ki != 0) t.factors.push_back({i, ki, lc.mg.comps[i].is_center, lc.mg.comps[i].tag});
  }
  return t;
}

CentralChargeCriterionReport check_central_charge_criterion(const LevelClassification& lc)
{
  CentralChargeCriterionReport rep;
  Rat h_vee = lc.mg.h_vee;

  EqualSolutions es = ratfun_equal_solutions(lc.c_g, lc.c_sug, {-h_vee});
  if (es.all_k) throw SetMismatch(lc.id.str() + ": central charges agree identically");
  rep.solutions = es.roots;

  // branch points: where some factor level vanishes, it drops out of c_sug
  std::set<Rat> branch_points;
  for (const GnatComponent& c : lc.mg.comps)
    branch_points.insert(-c.ki.coeff(0)); // k_i is monic linear
  for (const Rat& k : branch_points) {
    if (k == -h_vee) continue;
    Rat lhs = lc.c_g.eval(k);
    Rat rhs(0);
    bool defined = true;
    for (const GnatComponent& c : lc.mg.comps) {
      Rat ki = c.ki.eval(k);
      if (ki == 0) continue;
      if (c.is_center) {
        rhs += 1;
      } else if (ki + c.h0 == 0) {
        defined = false;
        break;
      } else {
        rhs += ki * c.sdim / (ki + c.h0);
      }
    }
    if (defined && lhs == rhs)
      rep.solutions.insert(k);
    else
      rep.solutions.erase(k);
  }

  rep.expected = lc.conformal_noncollapsing;
  for (const Rat& k : lc.collapsing) {
    bool admissible = true;
    for (const GnatComponent& c : lc.mg.comps) {
      Rat ki = c.ki.eval(k);
      if (ki != 0 && ki + c.h0 == 0) admissible = false;
    }
    if (admissible) rep.expected.insert(k);
  }
  rep.match = (rep.solutions == rep.expected);
  return rep;
}

CollapseChain collapse_chain(const AlgebraId& id, const Rat& k)
{
  CollapseChain chain;
  AlgebraId cur = id;
  Rat level = k;
  for (;;) {
    chain.steps.push_back({cur, level});
    LevelClassification lc = classify(cur);
    if (lc.p_of_k.eval(level) != 0) {
      if (chain.steps.size() == 1)
        throw NotCollapsing(cur.str() + ": p(" + to_string(level) + ") != 0");
      chain.end = ChainEnd::NonCollapsing;
      return chain;
    }
    CollapseTargetResult tgt = collapse_target(lc, level);
    std::vector<CollapseFactor> simple;
    for (const CollapseFactor& f : tgt.factors)
      if (!f.is_center) simple.push_back(f);
    if (tgt.factors.empty()) {
      chain.end = ChainEnd::Trivial;
      return chain;
    }
    if (simple.empty()) {
      chain.end = ChainEnd::Heisenberg;
      return chain;
    }
    if (simple.size() > 1 || simple.size() < tgt.factors.size()) {
      chain.end = ChainEnd::MultiFactor;
      return chain;
    }
    const CollapseFactor& f = simple[0];
    std::optional<AlgebraId> next = identify_simple_lie(lc.mg, lc.mg.comps[f.comp]);
    if (!next) {
      chain.end = ChainEnd::Unidentified;
      return chain;
    }
    if (next->fam == AlgebraId::Fam::SL && next->m == 2 && next->n == 0) {
      chain.steps.push_back({*next, f.level});
      chain.end = ChainEnd::Virasoro;
      chain.virasoro_c = sl2_w_central_charge(f.level);
      return chain;
    }
    bool in_catalog = true;
    try {
      next->validate();
    } catch (const std::exception&) {
      in_catalog = false;
    }
    if (!in_catalog) {
      chain.steps.push_back({*next, f.level});
      chain.end = ChainEnd::Unidentified;
      return chain;
    }
    cur = *next;
    level = f.level;
  }
}

} // namespace wmin
