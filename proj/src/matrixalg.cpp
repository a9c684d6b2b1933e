#include "wmin/matrixalg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>

namespace wmin {

namespace {

void check(bool ok, const std::string& msg)
{
  if (!ok) throw std::runtime_error("realization invariant failed: " + msg);
}

// One basis element of the algebra inside its ambient coordinate space
// (vectorized supermatrices for the classical families).
struct RawElem {
  VecQ mat;
  bool odd = false;
  std::string label;
  std::optional<VecQ> root;
};

// Family-specific input to the common normalization pipeline: root vectors
// aligned with rd.roots, a Cartan basis, and ambient bracket/supertrace.
struct RawAlgebra {
  std::vector<RawElem> root_vecs; // same order as rd.roots
  std::vector<VecQ> cartan;
  std::function<VecQ(const VecQ&, const VecQ&, bool, bool)> bracket;
  std::function<Rat(const VecQ&, const VecQ&)> form;
};

// ---- gl(m|n) ambient helpers ------------------------------------------------

struct GlSpace {
  int N = 0, meven = 0;
  bool mod_identity = false; // psl: work with representatives, last diag entry 0

  size_t at(int i, int j) const { return (size_t)(i * N + j); }
  VecQ unit(int i, int j) const
  {
    VecQ v((size_t)N * N, Rat(0));
    v[at(i, j)] = 1;
    return v;
  }
  VecQ reduce(VecQ v) const
  {
    if (!mod_identity) return v;
    Rat corner = v[at(N - 1, N - 1)];
    if (corner == 0) return v;
    for (int i = 0; i < N; ++i) v[at(i, i)] -= corner;
    return v;
  }
  VecQ mul(const VecQ& a, const VecQ& b) const
  {
    VecQ r((size_t)N * N, Rat(0));
    for (int i = 0; i < N; ++i)
      for (int t = 0; t < N; ++t) {
        const Rat& x = a[at(i, t)];
        if (x == 0) continue;
        for (int j = 0; j < N; ++j) {
          const Rat& y = b[at(t, j)];
          if (y != 0) r[at(i, j)] += x * y;
        }
      }
    return r;
  }
  VecQ brk(const VecQ& a, const VecQ& b, bool aodd, bool bodd) const
  {
    VecQ ab = mul(a, b), ba = mul(b, a);
    return reduce((aodd && bodd) ? vec_add(ab, ba) : vec_sub(ab, ba));
  }
  Rat str(const VecQ& a) const
  {
    Rat s(0);
    for (int i = 0; i < N; ++i) s += (i < meven) ? a[at(i, i)] : -a[at(i, i)];
    return s;
  }
  Rat form(const VecQ& a, const VecQ& b) const { return str(mul(a, b)); }
};

RawAlgebra build_sl_raw(const RootDatum& rd, int m, int n, bool projective)
{
  auto sp = std::make_shared<GlSpace>();
  sp->N = m + n;
  sp->meven = m;
  sp->mod_identity = projective;

  RawAlgebra raw;
  for (const Root& r : rd.roots) {
    int i = -1, j = -1;
    for (int t = 0; t < sp->N; ++t) {
      if (r.v[t] == 1) i = t;
      if (r.v[t] == -1) j = t;
    }
    raw.root_vecs.push_back({sp->unit(i, j), r.odd,
                             "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                             r.v});
  }
  int ncart = m + n - 1 - (projective ? 1 : 0);
  for (int l = 0; l < ncart; ++l) {
    VecQ h = sp->unit(l, l);
    // sign flip at the parity boundary keeps the supertrace zero
    h = (l == m - 1) ? vec_add(h, sp->unit(l + 1, l + 1)) : vec_sub(h, sp->unit(l + 1, l + 1));
    raw.cartan.push_back(std::move(h));
  }
  raw.bracket = [sp](const VecQ& a, const VecQ& b, bool ao, bool bo) {
    return sp->brk(a, b, ao, bo);
  };
  raw.form = [sp](const VecQ& a, const VecQ& b) { return sp->form(a, b); };
  return raw;
}

// osp(M|N) with the split symmetric form antidiag(1,...,1) on the even part
// and the split symplectic form antidiag(1,..,1,-1,..,-1) on the odd part.
// The root datum uses eps_1..eps_r then delta_1..delta_l with r = floor(M/2),
// l = N/2, matching the weights of the first r resp. l coordinates.
RawAlgebra build_osp_raw(const RootDatum& rd, int M, int N)
{
  auto sp = std::make_shared<GlSpace>();
  sp->N = M + N;
  sp->meven = M;
  int r = M / 2, l = N / 2;
  int D = M + N;

  // bilinear form G on C^{M|N}
  MatQ G = mat_zero(D, D);
  for (int i = 0; i < M; ++i) G[i][M - 1 - i] = 1;
  for (int q = 0; q < N; ++q) G[M + q][M + N - 1 - q] = (q < l) ? Rat(1) : Rat(-1);
  auto par = [&](int p) { return p >= M; };

  // weight of the p-th coordinate as a vector over (eps_1..eps_r, delta_1..delta_l)
  auto wt = [&](int p) {
    VecQ w((size_t)(r + l), Rat(0));
    if (p < M) {
      if (p < r) w[p] = 1;
      else if (p >= M - r) w[M - 1 - p] = -1;
    } else {
      int q = p - M;
      if (q < l) w[r + q] = 1;
      else w[r + (N - 1 - q)] = -1;
    }
    return w;
  };

  // solves the invariance condition X^T G + (-1)^{pX p(a)} G X = 0 within the
  // span of the matrix units whose ad-Cartan weight equals the given root
  auto root_vector = [&](const Root& rt) {
    std::vector<std::pair<int, int>> cand;
    for (int p = 0; p < D; ++p)
      for (int q = 0; q < D; ++q) {
        if (p == q) continue;
        if ((par(p) != par(q)) != rt.odd) continue;
        if (vec_sub(wt(p), wt(q)) == rt.v) cand.push_back({p, q});
      }
    check(!cand.empty(), "no matrix units at root weight");
    MatQ rows;
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) {
        VecQ row(cand.size(), Rat(0));
        for (size_t c = 0; c < cand.size(); ++c) {
          auto [p, q] = cand[c];
          // (X^T G)_{ab} picks up x_{pq} when p = a: contributes G[q][b]... X^T_{a.} = X_{.a}
          if (q == a) row[c] += G[p][b];
          Rat sgn = (rt.odd && par(a)) ? Rat(-1) : Rat(1);
          if (q == b) row[c] += sgn * G[a][p];
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    std::vector<VecQ> knl;
    if (rows.empty()) {
      for (size_t c = 0; c < cand.size(); ++c) {
        VecQ u(cand.size(), Rat(0));
        u[c] = 1;
        knl.push_back(std::move(u));
      }
    } else {
      knl = kernel(rows);
    }
    check(knl.size() == 1, "root space not one-dimensional (" +
                               std::to_string(cand.size()) + " candidates, kernel " +
                               std::to_string(knl.size()) + ", " +
                               std::to_string(rows.size()) + " constraints)");
    VecQ coef = knl[0];
    for (const Rat& c : coef)
      if (c != 0) { coef = vec_scale(coef, Rat(1) / c); break; }
    VecQ X((size_t)D * D, Rat(0));
    for (size_t c = 0; c < cand.size(); ++c) X[sp->at(cand[c].first, cand[c].second)] = coef[c];
    return X;
  };

  RawAlgebra raw;
  for (const Root& rt : rd.roots)
    raw.root_vecs.push_back({root_vector(rt), rt.odd, "X[" + std::to_string(raw.root_vecs.size()) + "]", rt.v});
  for (int t = 0; t < r; ++t)
    raw.cartan.push_back(vec_sub(sp->unit(t, t), sp->unit(M - 1 - t, M - 1 - t)));
  for (int q = 0; q < l; ++q)
    raw.cartan.push_back(vec_sub(sp->unit(M + q, M + q), sp->unit(M + N - 1 - q, M + N - 1 - q)));
  raw.bracket = [sp](const VecQ& a, const VecQ& b, bool ao, bool bo) {
    return sp->brk(a, b, ao, bo);
  };
  raw.form = [sp](const VecQ& a, const VecQ& b) { return sp->form(a, b); };
  return raw;
}

// ---- D(2,1;a) ---------------------------------------------------------------
//
// g_0 = sl(2)^3 acting on g_1 = C^2 x C^2 x C^2. Ambient coordinates:
// 0..5 = E_1,F_1,E_2,F_2,E_3,F_3 (root vectors of +-2eps_i, matching the
// root order of the catalog entry), 6..13 = v_{s_1 s_2 s_3} with the sign
// patterns in catalog order, 14..16 = H_1,H_2,H_3.
struct D21Space {
  Rat a;
  static constexpr size_t DIM = 17;

  static size_t ei(int i) { return (size_t)(2 * i); }
  static size_t fi(int i) { return (size_t)(2 * i + 1); }
  static size_t hi(int i) { return (size_t)(14 + i); }
  static size_t vi(int s1, int s2, int s3)
  {
    return (size_t)(6 + 4 * (s1 < 0) + 2 * (s2 < 0) + (s3 < 0));
  }
  static std::array<int, 3> signs(size_t idx)
  {
    size_t t = idx - 6;
    return {t & 4 ? -1 : 1, t & 2 ? -1 : 1, t & 1 ? -1 : 1};
  }

  std::array<Rat, 3> sigma() const { return {-(Rat(1) + a), Rat(1), a}; }
  std::array<Rat, 3> tscale() const { return {Rat(-1) / (Rat(1) + a), Rat(1), Rat(1) / a}; }

  // structure constants on basis pairs
  VecQ brk_basis(size_t p, size_t q) const
  {
    VecQ r(DIM, Rat(0));
    auto add = [&](size_t t, const Rat& c) { r[t] += c; };
    bool podd = (p >= 6 && p < 14), qodd = (q >= 6 && q < 14);
    if (!podd && !qodd) {
      // within sl(2)^3: different factors commute
      auto factor = [](size_t t) { return t >= 14 ? (int)(t - 14) : (int)(t / 2); };
      if (factor(p) != factor(q)) return r;
      int i = factor(p);
      auto kind = [](size_t t) { return t >= 14 ? 2 : (int)(t % 2); }; // 0=E,1=F,2=H
      int kp = kind(p), kq = kind(q);
      if (kp == 2 && kq == 0) add(ei(i), Rat(2));
      else if (kp == 2 && kq == 1) add(fi(i), Rat(-2));
      else if (kp == 0 && kq == 2) add(ei(i), Rat(-2));
      else if (kp == 1 && kq == 2) add(fi(i), Rat(2));
      else if (kp == 0 && kq == 1) add(hi(i), Rat(1));
      else if (kp == 1 && kq == 0) add(hi(i), Rat(-1));
      return r;
    }
    if (!podd || !qodd) {
      // sl(2)^3 on the odd cube; E v_- = v_+, F v_+ = v_-, H v_s = s v_s
      size_t ev = podd ? q : p, od = podd ? p : q;
      Rat sgn = podd ? Rat(-1) : Rat(1); // [v, X] = -[X, v] for even X
      auto s = signs(od);
      int i = ev >= 14 ? (int)(ev - 14) : (int)(ev / 2);
      int kind = ev >= 14 ? 2 : (int)(ev % 2);
      if (kind == 2) add(od, sgn * Rat(s[i]));
      else if (kind == 0 && s[i] < 0) { s[i] = 1; add(vi(s[0], s[1], s[2]), sgn); }
      else if (kind == 1 && s[i] > 0) { s[i] = -1; add(vi(s[0], s[1], s[2]), sgn); }
      return r;
    }
    // odd-odd: sum over factors of sp(2)-contractions times sl(2) symmetrizers
    auto s = signs(p), t = signs(q);
    auto pair2 = [](int x, int y) { // <v_x, v_y> with <v_+,v_-> = 1
      if (x > 0 && y < 0) return Rat(1);
      if (x < 0 && y > 0) return Rat(-1);
      return Rat(0);
    };
    auto sig = sigma();
    for (int i = 0; i < 3; ++i) {
      Rat c = sig[i];
      for (int j = 0; j < 3; ++j)
        if (j != i) c *= pair2(s[j], t[j]);
      if (c == 0) continue;
      if (s[i] > 0 && t[i] > 0) add(ei(i), 2 * c);
      else if (s[i] < 0 && t[i] < 0) add(fi(i), -2 * c);
      else add(hi(i), -c);
    }
    return r;
  }

  VecQ brk(const VecQ& x, const VecQ& y) const
  {
    VecQ r(DIM, Rat(0));
    for (size_t p = 0; p < DIM; ++p) {
      if (x[p] == 0) continue;
      for (size_t q = 0; q < DIM; ++q) {
        if (y[q] == 0) continue;
        VecQ t = brk_basis(p, q);
        for (size_t u = 0; u < DIM; ++u)
          if (t[u] != 0) r[u] += x[p] * y[q] * t[u];
      }
    }
    return r;
  }

  Rat form_basis(size_t p, size_t q) const
  {
    auto ts = tscale();
    bool podd = (p >= 6 && p < 14), qodd = (q >= 6 && q < 14);
    if (podd != qodd) return Rat(0);
    if (!podd) {
      auto factor = [](size_t t) { return t >= 14 ? (int)(t - 14) : (int)(t / 2); };
      if (factor(p) != factor(q)) return Rat(0);
      int i = factor(p);
      auto kind = [](size_t t) { return t >= 14 ? 2 : (int)(t % 2); };
      int kp = kind(p), kq = kind(q);
      if (kp == 2 && kq == 2) return 2 * ts[i];
      if ((kp == 0 && kq == 1) || (kp == 1 && kq == 0)) return ts[i];
      return Rat(0);
    }
    auto s = signs(p), t = signs(q);
    Rat c(-2);
    for (int i = 0; i < 3; ++i) {
      if (s[i] == t[i]) return Rat(0);
      if (s[i] < 0) c = -c; // <v_-, v_+> = -1
    }
    return c;
  }

  Rat form(const VecQ& x, const VecQ& y) const
  {
    Rat r(0);
    for (size_t p = 0; p < DIM; ++p) {
      if (x[p] == 0) continue;
      for (size_t q = 0; q < DIM; ++q) {
        if (y[q] == 0) continue;
        Rat f = form_basis(p, q);
        if (f != 0) r += x[p] * y[q] * f;
      }
    }
    return r;
  }
};

RawAlgebra build_d21a_raw(const RootDatum& rd, const Rat& a)
{
  auto sp = std::make_shared<D21Space>();
  sp->a = a;
  RawAlgebra raw;
  for (const Root& rt : rd.roots) {
    VecQ v(D21Space::DIM, Rat(0));
    std::string lab;
    if (!rt.odd) {
      int i = 0;
      while (rt.v[(size_t)i] == 0) ++i;
      bool plus = rt.v[(size_t)i] > 0;
      v[plus ? D21Space::ei(i) : D21Space::fi(i)] = 1;
      lab = (plus ? "E" : "F") + std::to_string(i + 1);
    } else {
      int s1 = rt.v[0] > 0 ? 1 : -1, s2 = rt.v[1] > 0 ? 1 : -1, s3 = rt.v[2] > 0 ? 1 : -1;
      v[D21Space::vi(s1, s2, s3)] = 1;
      lab = "v(" + std::to_string(s1) + "," + std::to_string(s2) + "," + std::to_string(s3) + ")";
    }
    raw.root_vecs.push_back({std::move(v), rt.odd, lab, rt.v});
  }
  for (int i = 0; i < 3; ++i) {
    VecQ h(D21Space::DIM, Rat(0));
    h[D21Space::hi(i)] = 1;
    raw.cartan.push_back(std::move(h));
  }
  raw.bracket = [sp](const VecQ& x, const VecQ& y, bool, bool) { return sp->brk(x, y); };
  raw.form = [sp](const VecQ& x, const VecQ& y) { return sp->form(x, y); };
  return raw;
}

} // namespace

// ---- member operations ------------------------------------------------------

VecQ SuperMatrixAlgebra::basis_vec(size_t i) const
{
  VecQ v(dim, Rat(0));
  v[i] = 1;
  return v;
}

VecQ SuperMatrixAlgebra::bracket(const VecQ& a, const VecQ& b) const
{
  VecQ r(dim, Rat(0));
  for (size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const VecQ& t = brk[i][j];
      Rat c = a[i] * b[j];
      for (size_t u = 0; u < dim; ++u)
        if (t[u] != 0) r[u] += c * t[u];
    }
  }
  return r;
}

Rat SuperMatrixAlgebra::ip(const VecQ& a, const VecQ& b) const
{
  Rat r(0);
  for (size_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < dim; ++j)
      if (b[j] != 0 && form[i][j] != 0) r += a[i] * b[j] * form[i][j];
  }
  return r;
}

MatQ SuperMatrixAlgebra::ad(const VecQ& a) const
{
  MatQ m = mat_zero(dim, dim);
  for (size_t j = 0; j < dim; ++j) {
    VecQ col(dim, Rat(0));
    for (size_t i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      const VecQ& t = brk[i][j];
      for (size_t u = 0; u < dim; ++u)
        if (t[u] != 0) col[u] += a[i] * t[u];
    }
    for (size_t u = 0; u < dim; ++u) m[u][j] = col[u];
  }
  return m;
}

Rat SuperMatrixAlgebra::supertrace_on(const MatQ& op, const std::vector<size_t>& idx) const
{
  Rat s(0);
  for (size_t i : idx) s += parity[i] ? -op[i][i] : op[i][i];
  return s;
}

VecQ SuperMatrixAlgebra::project_nat(const VecQ& a) const
{
  return vec_sub(a, vec_scale(x, 2 * ip(a, x)));
}

VecQ SuperMatrixAlgebra::project_comp(size_t i, const VecQ& a) const
{
  VecQ r(dim, Rat(0));
  // coefficient functionals are ip(dual, .) so that odd directions project
  // correctly through the supersymmetric form
  for (size_t t = 0; t < comp_vectors[i].size(); ++t)
    r = vec_add(r, vec_scale(comp_vectors[i][t], ip(comp_duals[i][t], a)));
  return r;
}

bool SuperMatrixAlgebra::is_odd_elem(const VecQ& a) const
{
  bool any_odd = false, any_even = false;
  for (size_t i = 0; i < dim; ++i)
    if (a[i] != 0) (parity[i] ? any_odd : any_even) = true;
  check(!(any_odd && any_even), "element is not parity-homogeneous");
  return any_odd;
}

// ---- realization pipeline ---------------------------------------------------

SuperMatrixAlgebra realize(const AlgebraId& id)
{
  if (!id.has_matrix_realization())
    throw UnsupportedRealization(id.str() + ": structure constants are only available for the classical families and D(2,1;a)");
  id.validate();

  SuperMatrixAlgebra A;
  A.id = id;
  A.mg = minimal_grading_data(id);
  const RootDatum& rd = A.mg.rd;

  RawAlgebra raw;
  using F = AlgebraId::Fam;
  switch (id.fam) {
    case F::SL: raw = build_sl_raw(rd, id.m, id.n, false); break;
    case F::PSL: raw = build_sl_raw(rd, id.m, id.m, true); break;
    case F::OSP: raw = build_osp_raw(rd, id.m, id.n); break;
    case F::SPO: raw = build_osp_raw(rd, id.m, id.n); break;
    case F::D21A: raw = build_d21a_raw(rd, id.a); break;
    default: throw UnsupportedRealization(id.str());
  }
  check(raw.root_vecs.size() == rd.roots.size(), "root vector count");
  check(raw.cartan.size() == rd.cartan_dim, "Cartan dimension");

  // locate +-theta and normalize: [e_theta, e_{-theta}] = x, [x, e_theta] = e_theta
  size_t i_th = rd.roots.size(), i_mth = rd.roots.size();
  VecQ mtheta = vec_scale(rd.theta, Rat(-1));
  for (size_t i = 0; i < rd.roots.size(); ++i) {
    if (rd.roots[i].v == rd.theta) i_th = i;
    if (rd.roots[i].v == mtheta) i_mth = i;
  }
  check(i_th < rd.roots.size() && i_mth < rd.roots.size(), "theta not found among roots");

  VecQ h = raw.bracket(raw.root_vecs[i_th].mat, raw.root_vecs[i_mth].mat, false, false);
  VecQ he = raw.bracket(h, raw.root_vecs[i_th].mat, false, false);
  Rat c;
  bool cset = false;
  for (size_t t = 0; t < he.size(); ++t)
    if (raw.root_vecs[i_th].mat[t] != 0) {
      c = he[t] / raw.root_vecs[i_th].mat[t];
      cset = true;
      break;
    }
  check(cset && c != 0, "theta triple does not close");
  VecQ x_mat = vec_scale(h, Rat(1) / c);
  raw.root_vecs[i_mth].mat = vec_scale(raw.root_vecs[i_mth].mat, Rat(1) / c);

  // Cartan directions orthogonal to x (the Cartan of g^nat plus the center)
  std::vector<VecQ> hnat;
  {
    MatQ rows;
    VecQ row;
    for (const VecQ& hc : raw.cartan) row.push_back(raw.form(hc, x_mat));
    rows.push_back(row);
    for (const VecQ& knl : kernel(rows)) {
      VecQ v = vec_zero(raw.cartan[0].size());
      for (size_t t = 0; t < raw.cartan.size(); ++t)
        v = vec_add(v, vec_scale(raw.cartan[t], knl[t]));
      hnat.push_back(std::move(v));
    }
    check(hnat.size() == rd.cartan_dim - 1, "orthogonal Cartan dimension");
  }

  // final basis: root vectors (catalog order), then x, then the h^nat part
  std::vector<VecQ> mats;
  for (const RawElem& e : raw.root_vecs) {
    mats.push_back(e.mat);
    A.parity.push_back(e.odd);
    A.labels.push_back(e.label);
    A.root_of.push_back(e.root);
  }
  size_t ix = mats.size();
  mats.push_back(x_mat);
  A.parity.push_back(false);
  A.labels.push_back("x");
  A.root_of.push_back(std::nullopt);
  for (size_t t = 0; t < hnat.size(); ++t) {
    mats.push_back(hnat[t]);
    A.parity.push_back(false);
    A.labels.push_back("h[" + std::to_string(t + 1) + "]");
    A.root_of.push_back(std::nullopt);
  }
  A.dim = mats.size();

  // coordinatization: coords(v) = (M^T M)^{-1} M^T v, verified by expansion
  size_t amb = mats[0].size();
  MatQ Gram = mat_zero(A.dim, A.dim);
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = i; j < A.dim; ++j) {
      Rat s = dot(mats[i], mats[j]);
      Gram[i][j] = s;
      Gram[j][i] = s;
    }
  MatQ Ginv = inverse(Gram);
  auto coords = [&](const VecQ& v) {
    VecQ mtv(A.dim, Rat(0));
    for (size_t p = 0; p < amb; ++p) {
      if (v[p] == 0) continue;
      for (size_t i = 0; i < A.dim; ++i)
        if (mats[i][p] != 0) mtv[i] += mats[i][p] * v[p];
    }
    VecQ co = mat_apply(Ginv, mtv);
    VecQ back(amb, Rat(0));
    for (size_t i = 0; i < A.dim; ++i) {
      if (co[i] == 0) continue;
      for (size_t p = 0; p < amb; ++p)
        if (mats[i][p] != 0) back[p] += co[i] * mats[i][p];
    }
    check(back == v, "bracket image is outside the algebra");
    return co;
  };

  A.brk.assign(A.dim, std::vector<VecQ>(A.dim));
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = 0; j < A.dim; ++j)
      A.brk[i][j] = coords(raw.bracket(mats[i], mats[j], A.parity[i], A.parity[j]));

  // invariant form, scaled so that (e_theta | e_{-theta}) = 1/2
  Rat pairing = raw.form(mats[i_th], mats[i_mth]);
  check(pairing != 0, "degenerate theta pairing");
  Rat s = rat(1, 2) / pairing;
  A.form = mat_zero(A.dim, A.dim);
  for (size_t i = 0; i < A.dim; ++i)
    for (size_t j = i; j < A.dim; ++j) {
      Rat f = s * raw.form(mats[i], mats[j]);
      A.form[i][j] = f;
      A.form[j][i] = A.parity[i] && A.parity[j] ? -f : f;
    }

  A.e_theta = A.basis_vec(i_th);
  A.e_mtheta = A.basis_vec(i_mth);
  A.x = A.basis_vec(ix);
  check(A.ip(A.x, A.x) == rat(1, 2), "(x|x) != 1/2");
  check(A.bracket(A.e_theta, A.e_mtheta) == A.x, "[e_theta, e_{-theta}] != x");
  check(A.bracket(A.x, A.e_theta) == A.e_theta, "[x, e_theta] != e_theta");
  check(A.bracket(A.x, A.e_mtheta) == vec_scale(A.e_mtheta, Rat(-1)), "[x, e_{-theta}] != -e_{-theta}");

  // grading by ad x eigenvalues
  A.grade2.assign(A.dim, 0);
  for (size_t i = 0; i < A.dim; ++i) {
    if (A.root_of[i]) {
      int g = rd.theta_pairing(*A.root_of[i]);
      A.grade2[i] = g;
      check(A.brk[ix][i] == vec_scale(A.basis_vec(i), rat(g, 2)), "ad x is not diagonal");
    } else {
      check(is_zero(A.brk[ix][i]), "Cartan not in grade zero");
    }
    if (A.grade2[i] == 1) A.g_half.push_back(i);
    else if (A.grade2[i] == -1) A.g_mhalf.push_back(i);
    else if (A.grade2[i] == 0) A.g_zero.push_back(i);
  }

  // g^nat components, aligned with the root-level decomposition
  std::map<VecQ, size_t> root_index;
  for (size_t i = 0; i < rd.roots.size(); ++i) root_index[rd.roots[i].v] = i;
  std::vector<size_t> hnat_idx;
  for (size_t t = 0; t < hnat.size(); ++t) hnat_idx.push_back(ix + 1 + t);

  for (const GnatComponent& comp : A.mg.comps) {
    std::vector<VecQ> basis;
    if (comp.is_center) {
      // Cartan directions commuting with every grade-zero root vector
      MatQ rows;
      for (size_t j : A.g_zero) {
        if (!A.root_of[j]) continue;
        for (size_t u = 0; u < A.dim; ++u) {
          VecQ row;
          for (size_t t : hnat_idx) row.push_back(A.brk[t][j][u]);
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
      std::vector<VecQ> knl;
      if (rows.empty()) {
        // no grade-zero roots at all (sl(3)): the whole h^nat is central
        for (size_t t = 0; t < hnat_idx.size(); ++t) {
          VecQ u(hnat_idx.size(), Rat(0));
          u[t] = 1;
          knl.push_back(std::move(u));
        }
      } else {
        knl = kernel(rows);
      }
      check(knl.size() == 1, "center is not one-dimensional");
      VecQ v(A.dim, Rat(0));
      for (size_t t = 0; t < hnat_idx.size(); ++t)
        v = vec_add(v, vec_scale(A.basis_vec(hnat_idx[t]), knl[0][t]));
      check(!is_zero(v), "center vector vanished");
      basis.push_back(std::move(v));
    } else {
      MatQ cart_rows;
      for (size_t ri : comp.root_idx) {
        basis.push_back(A.basis_vec(ri));
        VecQ neg = vec_scale(rd.roots[ri].v, Rat(-1));
        size_t nj = root_index.at(neg);
        cart_rows.push_back(A.brk[ri][nj]);
      }
      std::vector<size_t> piv = rref(cart_rows);
      check(piv.size() == comp.rank, "component Cartan rank mismatch");
      for (size_t t = 0; t < piv.size(); ++t) basis.push_back(cart_rows[t]);
    }
    // (.|.)-dual basis; a singular Gram marks the decomposition degenerate
    size_t nb = basis.size();
    MatQ cg = mat_zero(nb, nb);
    for (size_t i = 0; i < nb; ++i)
      for (size_t j = 0; j < nb; ++j) cg[i][j] = A.ip(basis[i], basis[j]);
    std::vector<VecQ> duals;
    if (rank(cg) == nb) {
      MatQ cgi = inverse(cg);
      for (size_t i = 0; i < nb; ++i) {
        VecQ d(A.dim, Rat(0));
        for (size_t j = 0; j < nb; ++j) d = vec_add(d, vec_scale(basis[j], cgi[i][j]));
        duals.push_back(std::move(d));
      }
      for (size_t i = 0; i < nb; ++i)
        for (size_t j = 0; j < nb; ++j)
          check(A.ip(duals[i], basis[j]) == Rat(i == j ? 1 : 0), "dual basis");
    } else {
      A.gnat_nondegenerate = false;
    }
    A.comp_vectors.push_back(std::move(basis));
    A.comp_duals.push_back(std::move(duals));
  }
  if (A.gnat_nondegenerate)
    for (size_t ci = 0; ci < A.comp_vectors.size(); ++ci) {
      A.gnat_basis.insert(A.gnat_basis.end(), A.comp_vectors[ci].begin(), A.comp_vectors[ci].end());
      A.gnat_duals.insert(A.gnat_duals.end(), A.comp_duals[ci].begin(), A.comp_duals[ci].end());
    }

  // dual bases of g_{1/2} for <u,v> = (e_{-theta} | [u,v])
  {
    size_t nh = A.g_half.size();
    MatQ ne = mat_zero(nh, nh);
    for (size_t i = 0; i < nh; ++i)
      for (size_t j = 0; j < nh; ++j)
        ne[i][j] = A.ip(A.e_mtheta, A.brk[A.g_half[i]][A.g_half[j]]);
    MatQ nei = inverse(ne); // always nondegenerate on g_{1/2}
    for (size_t i = 0; i < nh; ++i) A.ne_basis.push_back(A.basis_vec(A.g_half[i]));
    for (size_t i = 0; i < nh; ++i) {
      VecQ d(A.dim, Rat(0));
      for (size_t j = 0; j < nh; ++j)
        d = vec_add(d, vec_scale(A.ne_basis[j], nei[j][i]));
      A.ne_duals.push_back(std::move(d));
    }
    for (size_t i = 0; i < nh; ++i)
      for (size_t j = 0; j < nh; ++j)
        check(A.ip(A.e_mtheta, A.bracket(A.ne_basis[i], A.ne_duals[j])) == Rat(i == j ? 1 : 0),
              "neutral-pairing dual basis");
  }

  return A;
}

// ---- derived quantities -----------------------------------------------------

CasimirReport casimir_eigenvalue(const SuperMatrixAlgebra& A, CasimirKind kind, size_t comp)
{
  std::vector<VecQ> basis, duals;
  std::vector<size_t> targets;
  switch (kind) {
    case CasimirKind::GonG: {
      MatQ finv = inverse(A.form);
      for (size_t i = 0; i < A.dim; ++i) {
        basis.push_back(A.basis_vec(i));
        // right duals (b_j | b^i) = delta: flip the sign of odd left duals
        duals.push_back(A.parity[i] ? vec_scale(finv[i], Rat(-1)) : VecQ(finv[i]));
      }
      for (size_t i = 0; i < A.dim; ++i) targets.push_back(i);
      break;
    }
    case CasimirKind::G0onGhalf: {
      size_t nz = A.g_zero.size();
      MatQ g = mat_zero(nz, nz);
      for (size_t i = 0; i < nz; ++i)
        for (size_t j = 0; j < nz; ++j) g[i][j] = A.form[A.g_zero[i]][A.g_zero[j]];
      MatQ gi = inverse(g);
      for (size_t i = 0; i < nz; ++i) {
        basis.push_back(A.basis_vec(A.g_zero[i]));
        VecQ d(A.dim, Rat(0));
        for (size_t j = 0; j < nz; ++j) d[A.g_zero[j]] = gi[i][j];
        if (A.parity[A.g_zero[i]]) d = vec_scale(d, Rat(-1)); // right duals
        duals.push_back(std::move(d));
      }
      targets = A.g_half;
      break;
    }
    case CasimirKind::CompOnSelf: {
      if (A.comp_duals[comp].empty())
        throw DegenerateForm(A.id.str() + ": component form is degenerate");
      basis = A.comp_vectors[comp];
      for (size_t t = 0; t < basis.size(); ++t)
        duals.push_back(A.is_odd_elem(basis[t]) ? vec_scale(A.comp_duals[comp][t], Rat(-1))
                                                : A.comp_duals[comp][t]);
      // act on the root-vector part of the component
      for (size_t t = 0; t < basis.size(); ++t) {
        size_t nz = 0, where = 0;
        for (size_t u = 0; u < A.dim; ++u)
          if (basis[t][u] != 0) { ++nz; where = u; }
        if (nz == 1 && A.root_of[where]) targets.push_back(where);
      }
      break;
    }
  }

  CasimirReport rep;
  bool have = false;
  for (size_t t : targets) {
    VecQ v = A.basis_vec(t);
    VecQ acc(A.dim, Rat(0));
    for (size_t i = 0; i < basis.size(); ++i)
      acc = vec_add(acc, A.bracket(duals[i], A.bracket(basis[i], v)));
    Rat ev = acc[t];
    if (acc != vec_scale(v, ev))
      throw NotScalar(A.id.str() + ": Casimir action is not scalar");
    if (!have) {
      rep.eigenvalue = ev;
      have = true;
    } else if (rep.eigenvalue != ev) {
      throw NotScalar(A.id.str() + ": Casimir eigenvalue differs across the subspace");
    }
  }
  rep.is_scalar = have;
  return rep;
}

Rat kappa0(const SuperMatrixAlgebra& A, const VecQ& a, const VecQ& b)
{
  Rat s(0);
  for (size_t i : A.g_zero) {
    VecQ w = A.bracket(a, A.bracket(b, A.basis_vec(i)));
    s += A.parity[i] ? -w[i] : w[i];
  }
  return s;
}

} // namespace wmin
