#include "doctest.h"

#include "wmin/realize.hpp"

using namespace wmin;

TEST_CASE("Sugawara eigenvalue on the like-sign fermion squares")
{
  SugawaraEigenReport r4 = verify_sugawara_eigenvalue(4);
  CHECK(r4.eigenvalue == rat(8, 3));
  CHECK(r4.eigenvalue == r4.expected);
  CHECK(!r4.degenerate);

  SugawaraEigenReport r5 = verify_sugawara_eigenvalue(5);
  CHECK(r5.eigenvalue == Rat(3)); // collides with the conformal weight 3
  CHECK(r5.degenerate);
  CHECK(!r5.note.empty());

  CHECK(verify_sugawara_eigenvalue(6).eigenvalue == rat(16, 5));
  CHECK(verify_sugawara_eigenvalue(7).eigenvalue == rat(10, 3));
}

TEST_CASE("the degenerate case n = 5 is rejected with a diagnostic")
{
  CHECK_THROWS_WITH_AS(
      bk_ope_table(5),
      "n = 5: Sugawara eigenvalue 4(n-2)/(n-1) equals conformal weight 3",
      UnsupportedN);
  CHECK_THROWS_AS(bk_ope_table(3), UnsupportedN);
}

TEST_CASE("OPE table structure at n = 4")
{
  OpeTable t = bk_ope_table(4);
  CHECK(t.n == 4);
  CHECK(t.k == rat(3, 2)); // (n-1)/2
  CHECK(t.gp_idx.size() == 4);
  CHECK(t.gm_idx.size() == 4);

  // Like-sign fermion pairs never appear in pm/mp; the stored modes close on
  // scalar + gl(n) current with the symmetry mp[j][i] determined by pm[i][j].
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      const GGModes& a = t.pm[i][j];
      const GGModes& b = t.mp[j][i];
      // mode 2 is scalar only, and symmetric under swapping the pair
      CHECK(is_zero(a.m2.current));
      CHECK(is_zero(b.m2.current));
      CHECK(a.m2.scalar == b.m2.scalar);
      if (i != j) {
        CHECK(a.m2.scalar == 0);
        CHECK(a.m1.scalar == 0);
      }
    }

  // The charge generator pairs to +-1 with the fermion weights.
  ChargeReport cr = charge_decomposition(t);
  CHECK(cr.checks == 47);
}

TEST_CASE("embedding of sl(n+1) at level -(n+1)/2, smallest case")
{
  RealizationReport r = verify_realization(4);
  CHECK(r.n == 4);
  CHECK(r.sug.eigenvalue == rat(8, 3));
  CHECK(r.tensor_checks == 88);
  CHECK(r.charge_checks == 47);
  CHECK(r.pairs == 576); // (n+1)^2 - 1 = 24 generators, all ordered pairs
}
