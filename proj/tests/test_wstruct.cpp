#include "doctest.h"

#include "wmin/levels.hpp"
#include "wmin/wstruct.hpp"

using namespace wmin;

namespace {

VecQ unit(size_t dim, size_t i)
{
  VecQ v = vec_zero(dim);
  v[i] = 1;
  return v;
}

} // namespace

TEST_CASE("current-current bracket: commutator and level scalar")
{
  for (const std::string& spec : {"sl(4)", "sl(2|4)", "osp(5|2)", "spo(4|2)"}) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    for (const VecQ& a : A.gnat_basis)
      for (const VecQ& b : A.gnat_basis) {
        JJBracket jj = ope_JJ(A, a, b);
        CHECK(jj.commutator == A.bracket(a, b));
        PolyK want = PolyK::linear(A.mg.h_vee / 2).scaled(A.ip(a, b)) -
                     PolyK::constant(kappa0(A, a, b) / 4);
        CHECK(jj.lambda_scalar == want);
      }
  }
}

TEST_CASE("quadratic scalar extracted from the odd brackets matches the catalog")
{
  for (const std::string& spec : {"sl(3)", "sl(4)", "sl(3|1)", "sl(2|4)", "psl(3|3)",
                                  "osp(5|2)", "spo(4|2)", "spo(2|1)", "sp(4)", "so(7)",
                                  "D(2,1;2)"}) {
    CAPTURE(spec);
    AlgebraId id = AlgebraId::parse(spec);
    SuperMatrixAlgebra A = realize(id);
    PkResult pk = extract_pk(A);
    CHECK(pk.p == table_pk(id));
    CHECK(pk.p.degree() == 2);
    CHECK(pk.p.leading() == 1);
    CHECK(!pk.witnesses.empty());
  }
}

TEST_CASE("odd-odd bracket collapses to its quadratic closed form")
{
  for (const std::string& spec : {"sl(4)", "sl(2|4)", "psl(3|3)", "osp(5|2)", "spo(4|2)",
                                  "spo(2|1)", "osp(8|0)", "spo(6|0)", "D(2,1;2)",
                                  "D(2,1;3)"}) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    BracketSimplificationReport r = verify_bracket_simplification(A);
    CHECK(r.ki_divides);
    CHECK(r.lambda_identity);
    CHECK(r.full_agreement);
    CHECK(r.p == table_pk(A.id));
  }
}

TEST_CASE("lambda^2 scalar is a super-symmetric invariant form on g_{-1/2}")
{
  for (const std::string& spec : {"sl(4)", "sl(2|4)", "osp(5|2)", "spo(4|2)", "spo(2|3)"}) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    const auto& mh = A.g_mhalf;

    // Symmetry of the bilinear form with the parity sign of the bracket of
    // two odd generators.
    for (size_t ii = 0; ii < mh.size(); ++ii)
      for (size_t jj = 0; jj < mh.size(); ++jj) {
        size_t i = mh[ii], j = mh[jj];
        PolyK a = ope_GG_full(A, unit(A.dim, i), unit(A.dim, j)).lambda2_scalar;
        PolyK b = ope_GG_full(A, unit(A.dim, j), unit(A.dim, i)).lambda2_scalar;
        Rat sg = (A.parity[i] && A.parity[j]) ? Rat(1) : Rat(-1);
        CHECK(a == b.scaled(sg));
      }

    // Invariance under the centralizer action, with the super sign when the
    // acting element and the first argument are both odd.
    for (const VecQ& a : A.gnat_basis) {
      bool a_odd = A.is_odd_elem(a);
      for (size_t ii = 0; ii < mh.size(); ++ii)
        for (size_t jj = 0; jj < mh.size(); ++jj) {
          size_t i = mh[ii], j = mh[jj];
          VecQ u = unit(A.dim, i), v = unit(A.dim, j);
          PolyK t1 = ope_GG_full(A, A.bracket(a, u), v).lambda2_scalar;
          PolyK t2 = ope_GG_full(A, u, A.bracket(a, v)).lambda2_scalar;
          Rat sg = (a_odd && A.parity[i]) ? Rat(-1) : Rat(1);
          CHECK((t1 + t2.scaled(sg)).is_zero());
        }
    }
  }
}

TEST_CASE("lambda^2 normalization against the neutral pairing")
{
  // 2 * lambda2(u, v) = 4 (e_theta|[u, v]) p(k) across all basis pairs of
  // g_{-1/2}; this is the relation extract_pk inverts.
  for (const std::string& spec : {"sl(4)", "osp(5|2)", "spo(2|1)"}) {
    CAPTURE(spec);
    SuperMatrixAlgebra A = realize(AlgebraId::parse(spec));
    PolyK p = table_pk(A.id);
    for (size_t i : A.g_mhalf)
      for (size_t j : A.g_mhalf) {
        PolyK l2 = ope_GG_full(A, unit(A.dim, i), unit(A.dim, j)).lambda2_scalar;
        Rat pair = A.ip(A.e_theta, A.brk[i][j]);
        CHECK(l2.scaled(Rat(2)) == p.scaled(4 * pair));
      }
  }
}
