#include "doctest.h"

#include "wmin/matrixalg.hpp"

#include <random>

using namespace wmin;

namespace {

const std::vector<std::string> kRealizedEntries = {
    "sl(3)",     "sl(4)",     "sl(5)",     "sl(3|1)",     "sl(4|1)",
    "sl(2|4)",   "psl(3|3)",  "psl(4|4)",  "so(7)",       "so(8)",
    "sp(4)",     "sp(6)",     "osp(5|2)",  "osp(7|2)",    "osp(4|2)",
    "spo(4|2)",  "spo(6|2)",  "spo(2|1)",  "spo(2|3)",    "D(2,1;3)",
    "D(2,1;1/2)", "D(2,1;-3/2)"};

bool super_jacobi_at(const SuperMatrixAlgebra& A, size_t a, size_t b, size_t c)
{
  VecQ lhs = A.bracket(A.basis_vec(a), A.brk[b][c]);
  VecQ r1 = A.bracket(A.brk[a][b], A.basis_vec(c));
  VecQ r2 = A.bracket(A.basis_vec(b), A.brk[a][c]);
  if (A.parity[a] && A.parity[b]) r2 = vec_scale(r2, Rat(-1));
  return lhs == vec_add(r1, r2);
}

} // namespace

TEST_CASE("structure constants satisfy the super Jacobi identity")
{
  std::mt19937 rng(2024);
  for (const std::string& spec : kRealizedEntries) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    size_t d = A.dim;
    size_t bad = 0;
    if (d <= 36) {
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
          for (size_t c = 0; c < d; ++c)
            if (!super_jacobi_at(A, a, b, c)) ++bad;
    } else {
      std::uniform_int_distribution<size_t> pick(0, d - 1);
      for (int trial = 0; trial < 4000; ++trial)
        if (!super_jacobi_at(A, pick(rng), pick(rng), pick(rng))) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("invariant form: invariance, normalization and triple relations")
{
  std::mt19937 rng(7);
  for (const std::string& spec : kRealizedEntries) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    size_t d = A.dim;
    size_t bad = 0;
    auto check_inv = [&](size_t a, size_t b, size_t c) {
      if (A.ip(A.brk[a][b], A.basis_vec(c)) != A.ip(A.basis_vec(a), A.brk[b][c])) ++bad;
    };
    if (d <= 36) {
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
          for (size_t c = 0; c < d; ++c) check_inv(a, b, c);
    } else {
      std::uniform_int_distribution<size_t> pick(0, d - 1);
      for (int trial = 0; trial < 4000; ++trial) check_inv(pick(rng), pick(rng), pick(rng));
    }
    CHECK(bad == 0);

    // sl(2) triple normalization: (e_theta|e_{-theta}) = (x|x) = 1/2 and
    // [e_theta, e_{-theta}] = x, [x, e_{+-theta}] = +-e_{+-theta}.
    CHECK(A.ip(A.e_theta, A.e_mtheta) == rat(1, 2));
    CHECK(A.ip(A.x, A.x) == rat(1, 2));
    CHECK(A.bracket(A.e_theta, A.e_mtheta) == A.x);
    CHECK(A.bracket(A.x, A.e_theta) == A.e_theta);
    CHECK(A.bracket(A.x, A.e_mtheta) == vec_scale(A.e_mtheta, Rat(-1)));
  }
}

TEST_CASE("Casimir eigenvalues on the graded pieces")
{
  for (const std::string& spec : kRealizedEntries) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));

    if (A.gnat_nondegenerate && A.id.fam != AlgebraId::Fam::PSL) {
      CasimirReport g = casimir_eigenvalue(A, CasimirKind::GonG);
      CHECK(g.is_scalar);
      CHECK(g.eigenvalue == 2 * A.mg.h_vee);

      CasimirReport h = casimir_eigenvalue(A, CasimirKind::G0onGhalf);
      CHECK(h.is_scalar);
      CHECK(h.eigenvalue == A.mg.h_vee - 1);
    }

    for (size_t ci = 0; ci < A.mg.comps.size(); ++ci) {
      if (A.mg.comps[ci].is_center || A.comp_duals[ci].empty()) continue;
      CasimirReport r = casimir_eigenvalue(A, CasimirKind::CompOnSelf, ci);
      CHECK(r.is_scalar);
      CHECK(r.eigenvalue == 2 * A.mg.comps[ci].h0);
    }
  }
}

TEST_CASE("kappa0 is proportional to the form with ratio 2 h0 on each component")
{
  for (const std::string& spec : {"sl(4)", "sl(2|4)", "so(7)", "osp(5|2)", "spo(4|2)"}) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    for (size_t ci = 0; ci < A.mg.comps.size(); ++ci) {
      const auto& basis = A.comp_vectors[ci];
      for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
          CHECK(kappa0(A, basis[i], basis[j]) ==
                2 * A.mg.comps[ci].h0 * A.ip(basis[i], basis[j]));
    }
  }
}

TEST_CASE("grading data is consistent with the bracket")
{
  for (const std::string& spec : {"sl(5)", "osp(7|2)", "spo(6|2)", "D(2,1;3)"}) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    for (size_t i = 0; i < A.dim; ++i) {
      VecQ ad_x = A.bracket(A.x, A.basis_vec(i));
      CHECK(ad_x == vec_scale(A.basis_vec(i), rat(A.grade2[i], 2)));
    }
    CHECK(A.g_half.size() == A.g_mhalf.size());
    for (size_t i : A.g_half) CHECK(A.grade2[i] == 1);
    for (size_t i : A.g_zero) CHECK(A.grade2[i] == 0);

    // ne pairing dual bases really are dual for <a,b> = (e_{-theta}|[a,b]).
    REQUIRE(A.ne_basis.size() == A.ne_duals.size());
    for (size_t i = 0; i < A.ne_basis.size(); ++i)
      for (size_t j = 0; j < A.ne_basis.size(); ++j) {
        Rat pairing = A.ip(A.e_mtheta, A.bracket(A.ne_basis[i], A.ne_duals[j]));
        CHECK(pairing == (i == j ? Rat(1) : Rat(0)));
      }
  }
}

TEST_CASE("exceptional entries have no matrix realization")
{
  CHECK_THROWS_AS(realize(AlgebraId::parse("G2")), UnsupportedRealization);
  CHECK_THROWS_AS(realize(AlgebraId::parse("F(4):sl2")), UnsupportedRealization);
  CHECK(!AlgebraId::parse("E7").has_matrix_realization());
  CHECK(AlgebraId::parse("osp(10|4)").has_matrix_realization());
}
