#include "wmin/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wmin {

Rat RootDatum::ip(const VecQ& x, const VecQ& y) const
{
  Rat s(0);
  for (size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < dim; ++j) s += x[i] * form[i][j] * y[j];
  }
  return s;
}

int RootDatum::theta_pairing(const VecQ& x) const
{
  Rat p = ip(x, theta);
  if (!is_integer(p)) throw GradingViolation(id.str() + ": non-integral pairing with theta");
  return (int)p.get_num().get_si();
}

namespace {

void push(std::vector<Root>& roots, VecQ v, bool odd)
{
  roots.push_back({std::move(v), odd});
}

VecQ unit(size_t dim, size_t i, const Rat& val = Rat(1))
{
  VecQ v(dim, Rat(0));
  v[i] = val;
  return v;
}

void build_sl(RootDatum& rd, int m, int n)
{
  size_t d = m + n;
  rd.dim = d;
  rd.form = mat_zero(d, d);
  for (int i = 0; i < m; ++i) rd.form[i][i] = 1;
  for (int i = m; i < (int)d; ++i) rd.form[i][i] = -1;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      VecQ v(d, Rat(0));
      v[i] = 1;
      v[j] = -1;
      bool odd = (i < (size_t)m) != (j < (size_t)m);
      push(rd.roots, std::move(v), odd);
    }
  rd.theta = VecQ(d, Rat(0));
  rd.theta[0] = 1;
  rd.theta[1] = -1;
}

// osp(m|n) coordinates: eps_1..eps_r then delta_1..delta_l, r = floor(m/2).
void build_osp_spo(RootDatum& rd, int m, int n, bool theta_in_sp)
{
  int r = m / 2, l = n / 2;
  bool modd = (m % 2 == 1);
  size_t d = r + l;
  rd.dim = d;
  Rat se = theta_in_sp ? rat(-1, 2) : Rat(1);  // (eps_i|eps_i)
  Rat sd = theta_in_sp ? rat(1, 2) : Rat(-1);  // (delta_j|delta_j)
  rd.form = mat_zero(d, d);
  for (int i = 0; i < r; ++i) rd.form[i][i] = se;
  for (int i = r; i < (int)d; ++i) rd.form[i][i] = sd;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          VecQ v(d, Rat(0));
          v[i] = si;
          v[j] = sj;
          push(rd.roots, std::move(v), false);
        }
  if (modd)
    for (int i = 0; i < r; ++i)
      for (int si : {1, -1}) push(rd.roots, unit(d, i, Rat(si)), false);
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          VecQ v(d, Rat(0));
          v[r + i] = si;
          v[r + j] = sj;
          push(rd.roots, std::move(v), false);
        }
    for (int si : {1, -1}) push(rd.roots, unit(d, r + i, Rat(2 * si)), false);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < l; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          VecQ v(d, Rat(0));
          v[i] = si;
          v[r + j] = sj;
          push(rd.roots, std::move(v), true);
        }
  if (modd)
    for (int j = 0; j < l; ++j)
      for (int sj : {1, -1}) push(rd.roots, unit(d, r + j, Rat(sj)), true);
  rd.theta = VecQ(d, Rat(0));
  if (theta_in_sp) {
    rd.theta[r] = 2; // 2 delta_1
  } else {
    rd.theta[0] = 1; // eps_1 + eps_2
    rd.theta[1] = 1;
  }
}

void build_d21a(RootDatum& rd, const Rat& a)
{
  rd.dim = 3;
  rd.form = mat_zero(3, 3);
  rd.form[0][0] = -(Rat(1) + a) / 2;
  rd.form[1][1] = rat(1, 2);
  rd.form[2][2] = a / 2;
  for (size_t i = 0; i < 3; ++i)
    for (int s : {2, -2}) push(rd.roots, unit(3, i, Rat(s)), false);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1}) push(rd.roots, VecQ{Rat(s1), Rat(s2), Rat(s3)}, true);
  rd.theta = VecQ{Rat(0), Rat(2), Rat(0)};
}

// G2 in the sum-zero plane of three coordinates; long roots e_i - e_j.
void add_g2_roots(std::vector<Root>& roots, size_t dim)
{
  Rat t(1, 3);
  std::vector<VecQ> eps = {
      {2 * t, -t, -t}, {-t, 2 * t, -t}, {-t, -t, 2 * t}};
  for (size_t i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      VecQ v(dim, Rat(0));
      for (size_t j = 0; j < 3; ++j) v[j] = Rat(s) * eps[i][j];
      roots.push_back({std::move(v), false});
    }
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      VecQ v(dim, Rat(0));
      v[i] = 1;
      v[j] = -1;
      roots.push_back({std::move(v), false});
    }
}

void build_g2(RootDatum& rd)
{
  rd.dim = 3;
  rd.form = mat_zero(3, 3);
  for (size_t i = 0; i < 3; ++i) rd.form[i][i] = 1; // long roots e_i - e_j have norm 2
  add_g2_roots(rd.roots, 3);
  rd.theta = VecQ{Rat(1), Rat(-1), Rat(0)};
}

void build_f4(RootDatum& rd)
{
  rd.dim = 4;
  rd.form = mat_zero(4, 4);
  for (size_t i = 0; i < 4; ++i) rd.form[i][i] = 1;
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          VecQ v(4, Rat(0));
          v[i] = si;
          v[j] = sj;
          push(rd.roots, std::move(v), false);
        }
  for (size_t i = 0; i < 4; ++i)
    for (int s : {1, -1}) push(rd.roots, unit(4, i, Rat(s)), false);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        for (int s4 : {1, -1})
          push(rd.roots, VecQ{rat(s1, 2), rat(s2, 2), rat(s3, 2), rat(s4, 2)}, false);
  rd.theta = VecQ{Rat(1), Rat(1), Rat(0), Rat(0)};
}

void build_e(RootDatum& rd, int which)
{
  size_t d = 8;
  rd.dim = d;
  rd.form = mat_zero(d, d);
  for (size_t i = 0; i < d; ++i) rd.form[i][i] = 1;
  auto pair_roots = [&](size_t lim) {
    for (size_t i = 0; i < lim; ++i)
      for (size_t j = i + 1; j < lim; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            VecQ v(d, Rat(0));
            v[i] = si;
            v[j] = sj;
            push(rd.roots, std::move(v), false);
          }
  };
  if (which == 8) {
    pair_roots(8);
    for (int mask = 0; mask < 256; ++mask) {
      int minus = __builtin_popcount(mask);
      if (minus % 2 != 0) continue;
      VecQ v(d);
      for (size_t i = 0; i < 8; ++i) v[i] = rat((mask >> i) & 1 ? -1 : 1, 2);
      push(rd.roots, std::move(v), false);
    }
    rd.theta = VecQ(d, Rat(0));
    rd.theta[6] = 1;
    rd.theta[7] = 1;
  } else if (which == 7) {
    pair_roots(6);
    for (int s : {1, -1}) {
      VecQ v(d, Rat(0));
      v[6] = s;
      v[7] = -s;
      push(rd.roots, std::move(v), false);
    }
    for (int mask = 0; mask < 64; ++mask) {
      if (__builtin_popcount(mask) % 2 == 0) continue; // odd number of minus signs
      for (int outer : {1, -1}) {
        VecQ v(d);
        for (size_t i = 0; i < 6; ++i) v[i] = rat(outer * ((mask >> i) & 1 ? -1 : 1), 2);
        v[6] = rat(-outer, 2);
        v[7] = rat(outer, 2);
        push(rd.roots, std::move(v), false);
      }
    }
    rd.theta = VecQ(d, Rat(0));
    rd.theta[7] = 1;
    rd.theta[6] = -1;
  } else { // E6
    pair_roots(5);
    for (int mask = 0; mask < 32; ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      for (int outer : {1, -1}) {
        VecQ v(d);
        for (size_t i = 0; i < 5; ++i) v[i] = rat(outer * ((mask >> i) & 1 ? -1 : 1), 2);
        v[5] = rat(-outer, 2);
        v[6] = rat(-outer, 2);
        v[7] = rat(outer, 2);
        push(rd.roots, std::move(v), false);
      }
    }
    rd.theta = VecQ{rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2),
                    rat(-1, 2), rat(-1, 2), rat(1, 2)};
  }
}

void build_f4_super(RootDatum& rd, bool theta_in_sl2)
{
  rd.dim = 4;
  rd.form = mat_zero(4, 4);
  Rat se = theta_in_sl2 ? rat(-2, 3) : Rat(1);
  Rat sdel = theta_in_sl2 ? Rat(2) : Rat(-3);
  for (size_t i = 0; i < 3; ++i) rd.form[i][i] = se;
  rd.form[3][3] = sdel;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i + 1; j < 3; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          VecQ v(4, Rat(0));
          v[i] = si;
          v[j] = sj;
          push(rd.roots, std::move(v), false);
        }
  for (size_t i = 0; i < 3; ++i)
    for (int s : {1, -1}) push(rd.roots, unit(4, i, Rat(s)), false);
  for (int s : {1, -1}) push(rd.roots, unit(4, 3, Rat(s)), false);
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int s3 : {1, -1})
        for (int s4 : {1, -1})
          push(rd.roots, VecQ{rat(s1, 2), rat(s2, 2), rat(s3, 2), rat(s4, 2)}, true);
  if (theta_in_sl2)
    rd.theta = VecQ{Rat(0), Rat(0), Rat(0), Rat(1)};
  else
    rd.theta = VecQ{Rat(1), Rat(1), Rat(0), Rat(0)};
}

void build_g3_super(RootDatum& rd, bool theta_in_sl2)
{
  rd.dim = 4;
  rd.form = mat_zero(4, 4);
  Rat s = theta_in_sl2 ? rat(-3, 4) : Rat(1);
  Rat t = theta_in_sl2 ? rat(1, 2) : rat(-2, 3);
  for (size_t i = 0; i < 3; ++i) rd.form[i][i] = s;
  rd.form[3][3] = t;
  add_g2_roots(rd.roots, 4);
  for (int sg : {2, -2}) push(rd.roots, unit(4, 3, Rat(sg)), false);
  Rat third(1, 3);
  std::vector<VecQ> eps = {{2 * third, -third, -third, Rat(0)},
                           {-third, 2 * third, -third, Rat(0)},
                           {-third, -third, 2 * third, Rat(0)}};
  for (size_t i = 0; i < 3; ++i)
    for (int si : {1, -1})
      for (int sd : {1, -1}) {
        VecQ v = vec_scale(eps[i], Rat(si));
        v[3] = sd;
        push(rd.roots, std::move(v), true);
      }
  for (int sd : {1, -1}) push(rd.roots, unit(4, 3, Rat(sd)), true);
  if (theta_in_sl2)
    rd.theta = VecQ{Rat(0), Rat(0), Rat(0), Rat(2)};
  else
    rd.theta = VecQ{Rat(1), Rat(-1), Rat(0), Rat(0)};
}

// Deterministic generic functional for tie-breaking inside a grading level.
Rat tiebreak(const VecQ& v)
{
  Rat s(0), w(1);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    s += *it * w;
    w *= 1000;
  }
  return s;
}

} // namespace

RootDatum build_catalog_entry(const AlgebraId& id)
{
  id.validate();
  RootDatum rd;
  rd.id = id;
  using F = AlgebraId::Fam;
  switch (id.fam) {
    case F::SL: build_sl(rd, id.m, id.n); break;
    case F::PSL: build_sl(rd, id.m, id.m); break;
    case F::OSP: build_osp_spo(rd, id.m, id.n, false); break;
    case F::SPO: build_osp_spo(rd, id.m, id.n, true); break;
    case F::D21A: build_d21a(rd, id.a); break;
    case F::G2: build_g2(rd); break;
    case F::F4: build_f4(rd); break;
    case F::E6: build_e(rd, 6); break;
    case F::E7: build_e(rd, 7); break;
    case F::E8: build_e(rd, 8); break;
    case F::F4_SL2: build_f4_super(rd, true); break;
    case F::F4_D212: build_f4_super(rd, false); break;
    case F::G3_SL2: build_g3_super(rd, true); break;
    case F::G3_G2: build_g3_super(rd, false); break;
  }

  if (rd.ip(rd.theta, rd.theta) != 2)
    throw GradingViolation(id.str() + ": (theta|theta) != 2");
  // grading invariant: pairings in {0,±1,±2}, ±2 only at ±theta
  for (const Root& r : rd.roots) {
    int p = rd.theta_pairing(r.v);
    if (p < -2 || p > 2) throw GradingViolation(id.str() + ": pairing out of range");
    if ((p == 2 || p == -2) && r.v != vec_scale(rd.theta, Rat(p / 2)))
      throw GradingViolation(id.str() + ": non-theta root at grading ±1");
  }

  // span of the roots and the radical of the form on it
  {
    MatQ rows;
    for (const Root& r : rd.roots) rows.push_back(r.v);
    MatQ red = rows;
    std::vector<size_t> piv = rref(red);
    for (size_t i = 0; i < piv.size(); ++i) rd.root_span.push_back(red[i]);
    // Gram matrix on the span
    size_t sdim = rd.root_span.size();
    MatQ gram = mat_zero(sdim, sdim);
    for (size_t i = 0; i < sdim; ++i)
      for (size_t j = 0; j < sdim; ++j) gram[i][j] = rd.ip(rd.root_span[i], rd.root_span[j]);
    for (const VecQ& knl : kernel(gram)) {
      VecQ v = vec_zero(rd.dim);
      for (size_t j = 0; j < sdim; ++j) v = vec_add(v, vec_scale(rd.root_span[j], knl[j]));
      rd.span_radical.push_back(std::move(v));
    }
    rd.cartan_dim = sdim - rd.span_radical.size();
  }
  return rd;
}

namespace {

struct PosSystem {
  std::vector<size_t> positive;
  VecQ rho;
};

PosSystem positive_system(const RootDatum& rd)
{
  PosSystem ps;
  ps.rho = vec_zero(rd.dim);
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    const Root& r = rd.roots[i];
    int g = rd.theta_pairing(r.v);
    bool pos;
    if (g != 0)
      pos = g > 0;
    else {
      Rat t = tiebreak(r.v);
      if (t == 0) throw GradingViolation(rd.id.str() + ": tie-break functional vanishes on a root");
      pos = t > 0;
    }
    if (!pos) continue;
    ps.positive.push_back(i);
    ps.rho = vec_add(ps.rho, vec_scale(r.v, rat(r.odd ? -1 : 1, 2)));
  }
  return ps;
}

} // namespace

Rat dual_coxeter(const RootDatum& rd)
{
  PosSystem ps = positive_system(rd);
  return Rat(1) + rd.ip(ps.rho, rd.theta);
}

Rat weight_casimir(const MinimalGradingData& mg, size_t comp, const VecQ& mu_part)
{
  const GnatComponent& c = mg.comps[comp];
  if (c.is_center) return mg.rd.ip(mu_part, mu_part);
  // rho of the component: half signed sum of its positive roots
  VecQ rho = vec_zero(mg.rd.dim);
  for (size_t idx : c.root_idx) {
    const Root& r = mg.rd.roots[idx];
    if (tiebreak(r.v) > 0) rho = vec_add(rho, vec_scale(r.v, rat(r.odd ? -1 : 1, 2)));
  }
  return mg.rd.ip(mu_part, vec_add(mu_part, vec_scale(rho, Rat(2))));
}

namespace {

// Union-find over the grade-zero roots orthogonal to theta.
struct UF {
  std::vector<size_t> p;
  explicit UF(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  size_t find(size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(size_t a, size_t b) { p[find(a)] = find(b); }
};

std::string super_tag(size_t rank, size_t even, size_t odd)
{
  return "super[rank=" + std::to_string(rank) + ",even=" + std::to_string(even) +
         ",odd=" + std::to_string(odd) + "]";
}

} // namespace

std::optional<AlgebraId> identify_simple_lie(const MinimalGradingData& mg,
                                             const GnatComponent& comp)
{
  if (comp.is_center || comp.root_idx.empty()) return std::nullopt;
  std::vector<Rat> norms; // |(.|.)|: the restricted form may be negative definite
  for (size_t idx : comp.root_idx) {
    const Root& r = mg.rd.roots[idx];
    if (r.odd) return std::nullopt;
    Rat nv = mg.rd.ip(r.v, r.v);
    norms.push_back(nv < 0 ? -nv : nv);
  }
  size_t rank = comp.rank, N = norms.size();
  Rat nmin = *std::min_element(norms.begin(), norms.end());
  Rat nmax = *std::max_element(norms.begin(), norms.end());
  if (nmin == 0) return std::nullopt;
  Rat ratio = nmax / nmin;
  size_t longs = (size_t)std::count(norms.begin(), norms.end(), nmax);
  AlgebraId out;
  if (ratio == 1) {
    if (N == rank * (rank + 1)) {
      out.fam = AlgebraId::Fam::SL;
      out.m = (int)rank + 1;
      return out;
    }
    if (N == 2 * rank * (rank - 1) && rank >= 4) {
      out.fam = AlgebraId::Fam::OSP;
      out.m = 2 * (int)rank;
      return out;
    }
    if (rank == 6 && N == 72) { out.fam = AlgebraId::Fam::E6; return out; }
    if (rank == 7 && N == 126) { out.fam = AlgebraId::Fam::E7; return out; }
    if (rank == 8 && N == 240) { out.fam = AlgebraId::Fam::E8; return out; }
    return std::nullopt;
  }
  if (ratio == 2) {
    if (rank == 4 && N == 48 && longs == 24) { out.fam = AlgebraId::Fam::F4; return out; }
    if (longs == 2 * rank) {
      out.fam = AlgebraId::Fam::SPO;
      out.n = 2 * (int)rank;
      return out;
    }
    if (longs == 2 * rank * (rank - 1)) {
      out.fam = AlgebraId::Fam::OSP;
      out.m = 2 * (int)rank + 1;
      return out;
    }
    return std::nullopt;
  }
  if (ratio == 3 && rank == 2 && N == 12) { out.fam = AlgebraId::Fam::G2; return out; }
  return std::nullopt;
}

MinimalGradingData minimal_grading_data(const AlgebraId& id)
{
  MinimalGradingData mg;
  mg.rd = build_catalog_entry(id);
  const RootDatum& rd = mg.rd;

  PosSystem ps = positive_system(rd);
  mg.positive = ps.positive;
  mg.rho = ps.rho;
  mg.h_vee = Rat(1) + rd.ip(mg.rho, rd.theta);

  // superdimensions
  long ev[5] = {0, 0, 0, 0, 0}, od[5] = {0, 0, 0, 0, 0}; // grading -2..+2 shifted by 2
  for (const Root& r : rd.roots) {
    int g = rd.theta_pairing(r.v) + 2;
    (r.odd ? od : ev)[g]++;
  }
  mg.sdims.g = Rat((long)rd.cartan_dim);
  for (int g = 0; g < 5; ++g) mg.sdims.g += Rat(ev[g] - od[g]);
  mg.sdims.g0 = Rat((long)rd.cartan_dim) + Rat(ev[2] - od[2]);
  mg.sdims.ghalf = Rat(ev[3] - od[3]);

  // g^nat root set and component split
  std::vector<size_t> nat;
  for (size_t i = 0; i < rd.roots.size(); ++i)
    if (rd.theta_pairing(rd.roots[i].v) == 0) nat.push_back(i);

  auto is_root_at = [&](const VecQ& v) -> bool {
    for (size_t i : nat)
      if (rd.roots[i].v == v) return true;
    return false;
  };
  UF uf(nat.size());
  for (size_t a = 0; a < nat.size(); ++a)
    for (size_t b = a + 1; b < nat.size(); ++b) {
      const VecQ& x = rd.roots[nat[a]].v;
      const VecQ& y = rd.roots[nat[b]].v;
      if (rd.ip(x, y) != 0 || is_root_at(vec_add(x, y)) || is_root_at(vec_sub(x, y)))
        uf.join(a, b);
    }
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t a = 0; a < nat.size(); ++a) groups[uf.find(a)].push_back(nat[a]);

  // center: directions in the root span orthogonal to theta and all of Delta^nat,
  // modulo the radical of the form
  {
    size_t sdim = rd.root_span.size();
    MatQ cond;
    {
      VecQ row(sdim);
      for (size_t j = 0; j < sdim; ++j) row[j] = rd.ip(rd.root_span[j], rd.theta);
      cond.push_back(row);
    }
    for (size_t i : nat) {
      VecQ row(sdim);
      for (size_t j = 0; j < sdim; ++j) row[j] = rd.ip(rd.root_span[j], rd.roots[i].v);
      cond.push_back(row);
    }
    std::vector<VecQ> knl = kernel(cond);
    size_t center_dim = knl.size() - rd.span_radical.size();
    if (center_dim > 1)
      throw GradingViolation(id.str() + ": centralizer center has dimension > 1");
    if (center_dim == 1) {
      // pick a kernel element outside the radical
      for (const VecQ& kv : knl) {
        VecQ v = vec_zero(rd.dim);
        for (size_t j = 0; j < sdim; ++j) v = vec_add(v, vec_scale(rd.root_span[j], kv[j]));
        bool in_rad = true;
        for (const VecQ& b : rd.root_span)
          if (rd.ip(v, b) != 0) { in_rad = false; break; }
        if (!in_rad || rd.span_radical.empty()) {
          GnatComponent c;
          c.is_center = true;
          c.center_vec = v;
          c.h0 = 0;
          c.sdim = 1;
          c.rank = 1;
          c.tag = "u(1)";
          mg.comps.push_back(std::move(c));
          break;
        }
      }
    }
  }

  for (auto& [rep, idxs] : groups) {
    GnatComponent c;
    c.root_idx = idxs;
    // rank = dimension of the span of the component's roots
    MatQ rows;
    for (size_t i : idxs) rows.push_back(rd.roots[i].v);
    c.rank = rank(rows);
    long e = 0, o = 0;
    for (size_t i : idxs) (rd.roots[i].odd ? o : e)++;
    c.sdim = Rat((long)c.rank) + Rat(e - o);
    // highest root of the component under the global order, and its rho
    size_t hi = idxs[0];
    for (size_t i : idxs)
      if (tiebreak(rd.roots[i].v) > tiebreak(rd.roots[hi].v)) hi = i;
    VecQ rho_i = vec_zero(rd.dim);
    for (size_t i : idxs)
      if (tiebreak(rd.roots[i].v) > 0)
        rho_i = vec_add(rho_i, vec_scale(rd.roots[i].v, rat(rd.roots[i].odd ? -1 : 1, 2)));
    const VecQ& th = rd.roots[hi].v;
    c.h0 = rd.ip(th, vec_add(th, vec_scale(rho_i, Rat(2)))) / 2;
    if (o == 0) c.tag = ""; // filled after identify below
    else c.tag = super_tag(c.rank, e, o);
    mg.comps.push_back(std::move(c));
  }

  for (auto& c : mg.comps) {
    c.ki = PolyK::linear((mg.h_vee - c.h0) / 2);
    if (!c.is_center && c.tag.empty()) {
      auto ident = identify_simple_lie(mg, c);
      c.tag = ident ? ident->str() : super_tag(c.rank, c.root_idx.size(), 0);
    }
  }

  size_t r_count = 0;
  for (const auto& c : mg.comps)
    if (!c.is_center) ++r_count;
  if (r_count > 3 || (r_count == 3 && !(id.fam == AlgebraId::Fam::OSP && id.m == 8 && id.n == 0)))
    throw GradingViolation(id.str() + ": unexpected number of centralizer components");

  // highest weights of g_{-1/2}
  std::vector<size_t> lower;
  for (size_t i = 0; i < rd.roots.size(); ++i)
    if (rd.theta_pairing(rd.roots[i].v) == -1) lower.push_back(i);
  auto in_lower = [&](const VecQ& v) -> bool {
    for (size_t i : lower)
      if (rd.roots[i].v == v) return true;
    return false;
  };
  for (size_t i : lower) {
    bool highest = true;
    for (size_t j : nat) {
      const Root& al = rd.roots[j];
      if (tiebreak(al.v) <= 0) continue;
      if (in_lower(vec_add(rd.roots[i].v, al.v))) {
        highest = false;
        break;
      }
    }
    if (!highest) continue;
    HalfWeightComponent hw;
    hw.mu = rd.roots[i].v;
    mg.half_weights.components.push_back(std::move(hw));
  }
  mg.half_weights.contragredient_pair = mg.half_weights.components.size() == 2;
  if (mg.half_weights.components.empty() && !lower.empty())
    throw GradingViolation(id.str() + ": no highest weight found in g_{-1/2}");

  // per-component projections of each highest weight (only where the
  // component Gram matrices are invertible; sl(n+2|n) fails here and is
  // rejected by the classification layer before using these)
  for (auto& hw : mg.half_weights.components) {
    // the theta-direction part of mu is not seen by the components
    VecQ residual = vec_sub(hw.mu, vec_scale(rd.theta, rd.ip(hw.mu, rd.theta) / 2));
    for (const auto& c : mg.comps) {
      VecQ part = vec_zero(rd.dim);
      bool ok = true;
      if (c.is_center) {
        Rat cc = rd.ip(c.center_vec, c.center_vec);
        if (cc == 0)
          ok = false;
        else
          part = vec_scale(c.center_vec, rd.ip(hw.mu, c.center_vec) / cc);
      } else {
        MatQ rows;
        for (size_t i : c.root_idx) rows.push_back(rd.roots[i].v);
        MatQ red = rows;
        std::vector<size_t> piv = rref(red);
        std::vector<VecQ> basis(red.begin(), red.begin() + piv.size());
        size_t bn = basis.size();
        MatQ gram = mat_zero(bn, bn);
        VecQ rhs(bn);
        for (size_t x = 0; x < bn; ++x) {
          rhs[x] = rd.ip(hw.mu, basis[x]);
          for (size_t y = 0; y < bn; ++y) gram[x][y] = rd.ip(basis[x], basis[y]);
        }
        if (rank(gram) < bn)
          ok = false;
        else {
          VecQ t = *solve(gram, rhs);
          for (size_t x = 0; x < bn; ++x) part = vec_add(part, vec_scale(basis[x], t[x]));
        }
      }
      if (!ok) {
        hw.mu_parts.clear();
        hw.casimir_parts.clear();
        goto next_weight;
      }
      hw.mu_parts.push_back(part);
      residual = vec_sub(residual, part);
    }
    // the residual must be invisible to the form (radical direction only)
    for (const VecQ& b : rd.root_span)
      if (rd.ip(residual, b) != 0)
        throw GradingViolation(id.str() + ": highest weight does not split over the components");
    for (size_t ci = 0; ci < mg.comps.size(); ++ci)
      hw.casimir_parts.push_back(weight_casimir(mg, ci, hw.mu_parts[ci]));
  next_weight:;
  }

  return mg;
}

} // namespace wmin
