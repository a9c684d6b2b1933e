#include "doctest.h"

#include "wmin/report.hpp"

#include "json.hpp"

using namespace wmin;

namespace {

LevelClassification classify_str(const std::string& s)
{
  return classify(AlgebraId::parse(s));
}

} // namespace

TEST_CASE("classification of sl(6)")
{
  LevelClassification lc = classify_str("sl(6)");
  CHECK(lc.p_of_k == PolyK::linear(Rat(1)) * PolyK::linear(Rat(3)));
  CHECK(lc.collapsing == std::set<Rat>{Rat(-1), Rat(-3)});
  CHECK(lc.trivial.empty());
  CHECK(trivial_levels(lc).empty());
  CHECK(lc.conformal_noncollapsing == std::set<Rat>{Rat(-4), rat(-5, 2)});
  CHECK(lc.excluded.empty());

  CentralChargeCriterionReport rep = check_central_charge_criterion(lc);
  CHECK(rep.match);
  CHECK(rep.solutions == std::set<Rat>{Rat(-1), Rat(-4), rat(-5, 2), Rat(-3)});

  CollapseTargetResult ct = collapse_target(lc, Rat(-3));
  REQUIRE(ct.factors.size() == 1);
  CHECK(ct.factors[0].tag == "sl(4)");
  CHECK(ct.factors[0].level == Rat(-2));
}

TEST_CASE("classification spot checks across families")
{
  LevelClassification sl3 = classify_str("sl(3)");
  CHECK(sl3.collapsing == std::set<Rat>{rat(-3, 2), Rat(-1)});
  CHECK(sl3.trivial == std::set<Rat>{rat(-3, 2)});
  CHECK(sl3.conformal_noncollapsing.empty());
  REQUIRE(sl3.excluded.size() == 1);
  CHECK(sl3.excluded[0].k == Rat(-1));
  CHECK(sl3.excluded[0].tag == ExclusionTag::Collapsing);

  LevelClassification spo21 = classify_str("spo(2|1)");
  CHECK(spo21.trivial == std::set<Rat>{rat(-1, 2), rat(-5, 4)});
  CHECK(spo21.collapsing == spo21.trivial);
  CHECK(spo21.conformal_noncollapsing.empty());
  CHECK(check_central_charge_criterion(spo21).match);

  LevelClassification so8 = classify_str("osp(8|0)");
  CHECK(so8.trivial == std::set<Rat>{Rat(-2)});
  CHECK(check_central_charge_criterion(so8).match);

  LevelClassification psl33 = classify_str("psl(3|3)");
  CHECK(psl33.collapsing == std::set<Rat>{Rat(-1)}); // k = -h_vee = 0 is critical
  CHECK(check_central_charge_criterion(psl33).match);

  LevelClassification spo42 = classify_str("spo(4|2)");
  CHECK(spo42.collapsing == std::set<Rat>{rat(-3, 2), rat(-1, 2)});
  CHECK(spo42.trivial == std::set<Rat>{rat(-1, 2)});
  CHECK(spo42.conformal_noncollapsing == std::set<Rat>{rat(-4, 3)});

  LevelClassification osp72 = classify_str("osp(7|2)");
  CHECK(osp72.conformal_noncollapsing.empty());
  REQUIRE(osp72.excluded.size() == 2);
  CHECK(osp72.excluded[0].k == Rat(-2));
  CHECK(osp72.excluded[0].tag == ExclusionTag::Collapsing);
  CHECK(osp72.excluded[1].k == Rat(-1));
  CHECK(osp72.excluded[1].tag == ExclusionTag::SugawaraPole);

  LevelClassification d21 = classify_str("D(2,1;-1/2)");
  CHECK(d21.trivial == std::set<Rat>{rat(-1, 2)});
  CHECK(d21.conformal_noncollapsing.empty());
  REQUIRE(d21.excluded.size() == 2);
  CHECK(d21.excluded[0].k == Rat(0));
  CHECK(d21.excluded[0].tag == ExclusionTag::Critical);
  CHECK(d21.excluded[1].k == rat(1, 2));
  CHECK(d21.excluded[1].tag == ExclusionTag::SugawaraPole);

  LevelClassification d21h = classify_str("D(2,1;1/2)");
  CHECK(d21h.collapsing == std::set<Rat>{rat(1, 2), rat(-3, 2)});
  CHECK(check_central_charge_criterion(d21h).match);

  LevelClassification sl54 = classify_str("sl(5|4)");
  CHECK(sl54.collapsing == std::set<Rat>{rat(-1, 2)});
  CHECK(sl54.conformal_noncollapsing == std::set<Rat>{rat(-2, 3)});
  REQUIRE(sl54.excluded.size() == 1);
  CHECK(sl54.excluded[0].k == Rat(0));
  CHECK(sl54.excluded[0].tag == ExclusionTag::SugawaraPole);
}

TEST_CASE("central charge closed form and criterion on exceptional entries")
{
  RatFunK c6 = central_charge(Rat(35), Rat(6)); // sl(6)
  CHECK(c6.eval(Rat(-1)) == Rat(1));
  CHECK(!c6.defined_at(Rat(-6)));

  for (const std::string& s : {"G(3):sl2", "G(3):G2", "F(4):sl2", "F(4):D212", "G2",
                               "F4", "E6", "E7", "E8"}) {
    CAPTURE(s);
    LevelClassification lc = classify_str(s);
    CHECK(check_central_charge_criterion(lc).match);
  }
}

TEST_CASE("iterated collapse chains")
{
  CollapseChain sl8 = collapse_chain(AlgebraId::parse("sl(8)"), Rat(-4));
  CHECK(sl8.end == ChainEnd::Virasoro);
  CHECK(sl8.virasoro_c == Rat(1));
  REQUIRE(sl8.steps.size() == 4);
  CHECK(sl8.steps[1].id == AlgebraId::parse("sl(6)"));
  CHECK(sl8.steps[1].level == Rat(-3));
  CHECK(sl8.steps[3].id == AlgebraId::parse("sl(2)"));

  CollapseChain so6 = collapse_chain(AlgebraId::parse("osp(6|0)"), Rat(-1));
  CHECK(so6.end == ChainEnd::Heisenberg);

  CollapseChain sp6 = collapse_chain(AlgebraId::parse("spo(6|0)"), rat(-5, 2));
  CHECK(sp6.end == ChainEnd::Virasoro);
  CHECK(sp6.virasoro_c == Rat(-2));

  CollapseChain so10 = collapse_chain(AlgebraId::parse("osp(10|0)"), Rat(-2));
  REQUIRE(so10.steps.size() == 2);
  CHECK(so10.steps[1].id == AlgebraId::parse("sl(2)"));
  CHECK(so10.steps[1].level == Rat(1));

  CollapseChain so14 = collapse_chain(AlgebraId::parse("osp(14|0)"), Rat(-2));
  REQUIRE(so14.steps.size() == 2);
  CHECK(so14.steps[1].level == Rat(3));

  CHECK_THROWS_AS(collapse_chain(AlgebraId::parse("sl(6)"), Rat(0)), NotCollapsing);
}

TEST_CASE("classify rejects entries without a clean centralizer decomposition")
{
  CHECK_THROWS_AS(classify_str("sl(3|1)"), ExcludedAlgebra);
}

TEST_CASE("report rendering and golden file naming")
{
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK_THROWS_AS(parse_format("yaml"), ParseError);

  CHECK(golden_filename(AlgebraId::parse("sl(6)")) == "sl_6.json");
  CHECK(golden_filename(AlgebraId::parse("osp(7|2)")) == "osp_7_2.json");
  CHECK(golden_filename(AlgebraId::parse("D(2,1;-1/2)")) == "d_2_1_m1d2.json");
  CHECK(golden_filename(AlgebraId::parse("F(4):sl2")) == "f_4_sl2.json");

  LevelClassification lc = classify_str("sl(6)");
  nlohmann::json rec = nlohmann::json::parse(render_classification(lc, Format::Json));
  CHECK(rec["algebra"] == "sl(6)");
  CHECK(rec["h_vee"] == "6");
  CHECK(rec["collapsing"].size() == 2);

  nlohmann::json doc = nlohmann::json::parse(golden_document(lc));
  CHECK(doc["format_version"] == 1);
  CHECK(doc["record"]["algebra"] == "sl(6)");
  CHECK(golden_document(lc).back() == '\n');

  std::vector<AlgebraId> ids = {AlgebraId::parse("sl(6)"), AlgebraId::parse("G2")};
  std::string csv = render_catalog(ids, Format::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3); // header + 2 rows

  CHECK(default_catalog().size() == 104);
}
