#include "wmin/wstruct.hpp"

#include "wmin/levels.hpp"

namespace wmin {

JJBracket ope_JJ(const SuperMatrixAlgebra& A, const VecQ& a, const VecQ& b)
{
  JJBracket out;
  out.commutator = A.bracket(a, b);
  Rat ab = A.ip(a, b);
  out.lambda_scalar = PolyK({A.mg.h_vee / 2 * ab - kappa0(A, a, b) / 4, ab});
  return out;
}

namespace {

// index of e_theta in the basis (the unique grade +1 element)
size_t theta_index(const SuperMatrixAlgebra& A)
{
  for (size_t i = 0; i < A.dim; ++i)
    if (A.grade2[i] == 2) return i;
  throw std::logic_error("no grade-one basis element");
}

void add_poly(std::map<size_t, PolyK>& m, size_t i, const PolyK& p)
{
  PolyK s = m[i] + p;
  if (s.is_zero())
    m.erase(i);
  else
    m[i] = s;
}

void trim_map(std::map<size_t, PolyK>& m)
{
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

// adds coef * :J^a J^b: in canonical order (first basis index <= second),
// folding the reordering correction :J^i J^j: = +-:J^j J^i: + dJ^{[e_i,e_j]}
// into the derivative terms
void add_quad(const SuperMatrixAlgebra& A, GGBracket& out, const VecQ& a, const VecQ& b,
              const PolyK& coef)
{
  if (coef.is_zero()) return;
  for (size_t i = 0; i < A.dim; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < A.dim; ++j) {
      if (b[j] == 0) continue;
      PolyK c = coef.scaled(a[i] * b[j]);
      if (i <= j) {
        auto key = std::make_pair(i, j);
        PolyK s = out.quad_terms[key] + c;
        if (s.is_zero())
          out.quad_terms.erase(key);
        else
          out.quad_terms[key] = s;
      } else {
        Rat sign = (A.parity[i] && A.parity[j]) ? Rat(-1) : Rat(1);
        auto key = std::make_pair(j, i);
        PolyK s = out.quad_terms[key] + c.scaled(sign);
        if (s.is_zero())
          out.quad_terms.erase(key);
        else
          out.quad_terms[key] = s;
        VecQ corr = A.brk[i][j];
        for (size_t m = 0; m < A.dim; ++m)
          if (corr[m] != 0) add_poly(out.deriv_term, m, c.scaled(corr[m]));
      }
    }
  }
}

// c'(a,b) = k(a|b) + (1/2) str(ad a . ad b) over the positive-grade part
PolyK cprime(const SuperMatrixAlgebra& A, const std::vector<size_t>& pos_idx, const VecQ& a,
             const VecQ& b)
{
  MatQ prod = mat_mul(A.ad(a), A.ad(b));
  return PolyK({A.supertrace_on(prod, pos_idx) / 2, A.ip(a, b)});
}

} // namespace

GGBracket ope_GG_full(const SuperMatrixAlgebra& A, const VecQ& u, const VecQ& v)
{
  const MinimalGradingData& mg = A.mg;
  Rat h_vee = mg.h_vee;
  GGBracket out;

  // (e_theta | [u,v]); [u,v] has grade -1, so this reads off the e_{-theta} part
  Rat s = A.ip(A.e_theta, A.bracket(u, v));

  out.omega_coeff = PolyK::linear(h_vee).scaled(Rat(-2) * s);

  // quadratic sum over dual bases of the centralizer
  if (A.gnat_nondegenerate) {
    if (s != 0)
      for (size_t al = 0; al < A.gnat_basis.size(); ++al)
        add_quad(A, out, A.gnat_duals[al], A.gnat_basis[al], PolyK::constant(s));
  } else {
    out.quad_available = false;
  }

  // sums over the dual bases of g_{1/2} under (e_{-theta}|[.,.])
  std::vector<size_t> pos_idx = A.g_half;
  pos_idx.push_back(theta_index(A));
  PolyK l2 = PolyK();
  for (size_t ga = 0; ga < A.ne_basis.size(); ++ga) {
    VecQ a = A.project_nat(A.bracket(u, A.ne_duals[ga]));
    VecQ b = A.project_nat(A.bracket(A.ne_basis[ga], v));
    if (out.quad_available) add_quad(A, out, a, b, PolyK::constant(Rat(1)));
    VecQ lam = A.project_nat(A.bracket(A.bracket(u, A.ne_duals[ga]), A.bracket(A.ne_basis[ga], v)));
    for (size_t m = 0; m < A.dim; ++m)
      if (lam[m] != 0) add_poly(out.lambda_term, m, PolyK::constant(lam[m]));
    l2 = l2 + cprime(A, pos_idx, a, b);
  }

  // 2(k+1)(d + 2 lambda) J^{[[e_theta,u],v]^nat}
  VecQ w = A.project_nat(A.bracket(A.bracket(A.e_theta, u), v));
  for (size_t m = 0; m < A.dim; ++m)
    if (w[m] != 0) {
      add_poly(out.deriv_term, m, PolyK::linear(Rat(1)).scaled(Rat(2) * w[m]));
      add_poly(out.lambda_term, m, PolyK::linear(Rat(1)).scaled(Rat(4) * w[m]));
    }

  // lambda^2 scalar: (1/3){sum_gamma c'(...) + (e_theta|[u,v])(-(k+h_vee)c(g,k)
  //   + (k + h_vee/2) sdim g^nat - (1/2) sum_i h0_i sdim_i)}
  if (s != 0) {
    RatFunK cc = RatFunK::from_poly(PolyK::linear(h_vee)) * central_charge(mg.sdims.g, h_vee);
    if (cc.den().degree() != 0)
      throw PoleNotCancelled(A.id.str() + ": (k + h_vee) c(g,k) is not polynomial");
    PolyK cc_poly = cc.num().scaled(Rat(1) / cc.den().coeff(0));
    Rat sdim_nat = mg.sdims.g0 - 1;
    Rat hs(0);
    for (const GnatComponent& c : mg.comps) hs += c.h0 * c.sdim;
    PolyK inner = -cc_poly + PolyK::linear(h_vee / 2).scaled(sdim_nat) - PolyK::constant(hs / 2);
    l2 = l2 + inner.scaled(s);
  }
  out.lambda2_scalar = l2.scaled(rat(1, 3));

  trim_map(out.deriv_term);
  trim_map(out.lambda_term);
  return out;
}

PkResult extract_pk(const SuperMatrixAlgebra& A)
{
  PkResult res;
  bool have = false;
  std::vector<std::tuple<size_t, size_t, PolyK>> zero_checks;
  for (size_t i : A.g_mhalf)
    for (size_t j : A.g_mhalf) {
      VecQ u = A.basis_vec(i), v = A.basis_vec(j);
      GGBracket gg = ope_GG_full(A, u, v);
      Rat s = A.ip(A.e_theta, A.bracket(u, v));
      if (s == 0) {
        if (!gg.lambda2_scalar.is_zero())
          throw InconsistentPairs(A.id.str() + ": lambda^2 scalar nonzero for a pair with (e_theta|[u,v]) = 0 (" +
                                  A.labels[i] + ", " + A.labels[j] + ")");
        continue;
      }
      PolyK cand = gg.lambda2_scalar.scaled(Rat(1) / (2 * s));
      if (!have) {
        res.p = cand;
        have = true;
      } else if (cand != res.p) {
        throw InconsistentPairs(A.id.str() + ": pairs (" + A.labels[i] + ", " + A.labels[j] +
                                ") disagree: " + cand.str() + " vs " + res.p.str());
      }
      res.witnesses.emplace_back(i, j, cand);
    }
  if (!have) throw NoNondegeneratePair(A.id.str() + ": no pair with (e_theta|[u,v]) != 0");
  if (res.p.degree() != 2 || res.p.leading() != 1)
    throw InconsistentPairs(A.id.str() + ": extracted scalar " + res.p.str() +
                            " is not a monic quadratic");
  return res;
}

BracketSimplificationReport verify_bracket_simplification(const SuperMatrixAlgebra& A)
{
  const MinimalGradingData& mg = A.mg;
  BracketSimplificationReport rep;
  rep.p = extract_pk(A).p;

  std::vector<PolyK> quotients;
  for (const GnatComponent& c : mg.comps) {
    auto [q, r] = rep.p.divmod(c.ki);
    if (!r.is_zero())
      throw MismatchAt(A.id.str() + ": component level " + c.ki.str() + " (" + c.tag +
                       ") does not divide p = " + rep.p.str());
    quotients.push_back(q);
  }
  rep.ki_divides = true;

  for (size_t i : A.g_mhalf)
    for (size_t j : A.g_mhalf) {
      VecQ u = A.basis_vec(i), v = A.basis_vec(j);
      GGBracket gg = ope_GG_full(A, u, v);
      Rat s = A.ip(A.e_theta, A.bracket(u, v));

      // lambda term must equal 4 sum_i (p/k_i) J^{([[e_theta,u],v])_i}
      std::map<size_t, PolyK> want;
      VecQ w = A.bracket(A.bracket(A.e_theta, u), v);
      for (size_t c = 0; c < mg.comps.size(); ++c) {
        VecQ part = A.project_comp(c, w);
        for (size_t m = 0; m < A.dim; ++m)
          if (part[m] != 0) {
            PolyK add = quotients[c].scaled(Rat(4) * part[m]);
            PolyK sum = want[m] + add;
            if (sum.is_zero())
              want.erase(m);
            else
              want[m] = sum;
          }
      }
      if (gg.lambda_term != want)
        throw MismatchAt(A.id.str() + ": lambda term mismatch at pair (" + A.labels[i] + ", " +
                         A.labels[j] + ")");

      // lambda^2 scalar must equal 2 (e_theta|[u,v]) p(k)
      if (gg.lambda2_scalar != rep.p.scaled(2 * s))
        throw MismatchAt(A.id.str() + ": lambda^2 scalar mismatch at pair (" + A.labels[i] +
                         ", " + A.labels[j] + ")");
    }
  rep.lambda_identity = true;
  rep.full_agreement = true;
  return rep;
}

} // namespace wmin
