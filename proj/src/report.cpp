#include "wmin/report.hpp"

#include "json.hpp"

#include <sstream>

namespace wmin {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json poly_json(const PolyK& p)
{
  ordered_json a = ordered_json::array();
  for (const Rat& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

ordered_json ratfun_json(const RatFunK& f)
{
  ordered_json o;
  o["num"] = poly_json(f.num());
  o["den"] = poly_json(f.den());
  return o;
}

ordered_json rat_set_json(const std::set<Rat>& s)
{
  ordered_json a = ordered_json::array();
  for (const Rat& r : s) a.push_back(to_string(r));
  return a;
}

std::string join_rats(const std::set<Rat>& s, const char* sep = " ")
{
  std::string out;
  for (const Rat& r : s) {
    if (!out.empty()) out += sep;
    out += to_string(r);
  }
  return out;
}

ordered_json classification_json(const LevelClassification& lc)
{
  ordered_json o;
  o["algebra"] = lc.id.str();
  o["h_vee"] = to_string(lc.mg.h_vee);
  o["sdim"] = {{"g", to_string(lc.mg.sdims.g)},
               {"g0", to_string(lc.mg.sdims.g0)},
               {"ghalf", to_string(lc.mg.sdims.ghalf)}};
  ordered_json comps = ordered_json::array();
  for (const GnatComponent& c : lc.mg.comps) {
    ordered_json cj;
    cj["tag"] = c.tag;
    cj["is_center"] = c.is_center;
    cj["rank"] = c.rank;
    cj["sdim"] = to_string(c.sdim);
    cj["h0"] = to_string(c.h0);
    cj["ki"] = poly_json(c.ki);
    comps.push_back(cj);
  }
  o["components"] = comps;
  o["p"] = poly_json(lc.p_of_k);
  o["collapsing"] = rat_set_json(lc.collapsing);
  o["trivial"] = rat_set_json(lc.trivial);
  o["conformal_noncollapsing"] = rat_set_json(lc.conformal_noncollapsing);
  ordered_json exc = ordered_json::array();
  for (const ExcludedCandidate& e : lc.excluded) {
    ordered_json ej;
    ej["k"] = to_string(e.k);
    ej["reason"] = exclusion_tag_name(e.tag);
    ej["detail"] = e.detail;
    exc.push_back(ej);
  }
  o["excluded"] = exc;
  o["c_w"] = ratfun_json(lc.c_g);
  o["c_sugawara"] = ratfun_json(lc.c_sug);
  return o;
}

std::string dump(const ordered_json& o) { return o.dump(2) + "\n"; }

// minimal CSV quoting: wrap fields containing separators or quotes
std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields)
{
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

} // namespace

Format parse_format(const std::string& s)
{
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown") return Format::Markdown;
  throw ParseError("unknown output format \"" + s + "\" (want json, csv or markdown)");
}

std::vector<AlgebraId> default_catalog()
{
  std::vector<AlgebraId> out;
  auto push = [&](AlgebraId id) {
    try {
      id.validate();
    } catch (const std::exception&) {
      return;
    }
    // the classification engine additionally rejects sl(n+2|n)
    if (id.fam == AlgebraId::Fam::SL && id.n >= 1 && id.m == id.n + 2) return;
    out.push_back(id);
  };
  auto mk = [](AlgebraId::Fam f, int m = 0, int n = 0, Rat a = Rat(0)) {
    AlgebraId id;
    id.fam = f;
    id.m = m;
    id.n = n;
    id.a = a;
    return id;
  };
  using F = AlgebraId::Fam;
  for (int m = 3; m <= 9; ++m) push(mk(F::SL, m));
  for (int m = 2; m <= 8; ++m)
    for (int n = 1; m + n <= 9; ++n)
      if (m != n) push(mk(F::SL, m, n));
  for (int m = 3; m <= 4; ++m) push(mk(F::PSL, m, m));
  for (int m = 4; m <= 12; ++m)
    for (int n = 0; m + n <= 12; n += 2) push(mk(F::OSP, m, n));
  for (int n = 2; n <= 12; n += 2)
    for (int m = 0; n + m <= 12; ++m) push(mk(F::SPO, m, n));
  for (const Rat& a : {rat(1, 2), rat(-1, 2), rat(-3, 2), Rat(2), Rat(3)})
    push(mk(F::D21A, 0, 0, a));
  for (F f : {F::F4_SL2, F::F4_D212, F::G3_SL2, F::G3_G2, F::G2, F::F4, F::E6, F::E7, F::E8})
    push(mk(f));
  return out;
}

std::string render_classification(const LevelClassification& lc, Format f)
{
  switch (f) {
    case Format::Json:
      return dump(classification_json(lc));
    case Format::Csv: {
      std::string out = csv_line({"algebra", "h_vee", "sdim_g", "p_coeffs", "collapsing",
                                  "trivial", "conformal_noncollapsing", "excluded"});
      std::string pc;
      for (const Rat& c : lc.p_of_k.coeffs()) {
        if (!pc.empty()) pc += " ";
        pc += to_string(c);
      }
      std::string exc;
      for (const ExcludedCandidate& e : lc.excluded) {
        if (!exc.empty()) exc += "; ";
        exc += to_string(e.k) + ":" + exclusion_tag_name(e.tag);
      }
      out += csv_line({lc.id.str(), to_string(lc.mg.h_vee), to_string(lc.mg.sdims.g), pc,
                       join_rats(lc.collapsing), join_rats(lc.trivial),
                       join_rats(lc.conformal_noncollapsing), exc});
      return out;
    }
    case Format::Markdown: {
      std::ostringstream os;
      os << "# " << lc.id.str() << "\n\n";
      os << "- dual Coxeter number: " << to_string(lc.mg.h_vee) << "\n";
      os << "- sdim g = " << to_string(lc.mg.sdims.g)
         << ", sdim g_0 = " << to_string(lc.mg.sdims.g0)
         << ", sdim g_{1/2} = " << to_string(lc.mg.sdims.ghalf) << "\n";
      os << "- p(k) = " << lc.p_of_k.str() << "\n";
      os << "- collapsing levels: {" << join_rats(lc.collapsing, ", ") << "}\n";
      os << "- trivial levels: {" << join_rats(lc.trivial, ", ") << "}\n";
      os << "- conformal non-collapsing levels: {"
         << join_rats(lc.conformal_noncollapsing, ", ") << "}\n";
      os << "- central charge of W^k: " << lc.c_g.str() << "\n";
      os << "- Sugawara charge (generic branch): " << lc.c_sug.str() << "\n";
      if (!lc.excluded.empty()) {
        os << "\n## Discarded conformal candidates\n\n";
        os << "| k | reason | detail |\n|---|---|---|\n";
        for (const ExcludedCandidate& e : lc.excluded)
          os << "| " << to_string(e.k) << " | " << exclusion_tag_name(e.tag) << " | "
             << e.detail << " |\n";
      }
      return os.str();
    }
  }
  return {};
}

std::string render_catalog(const std::vector<AlgebraId>& ids, Format f)
{
  struct Row {
    std::string name, h_vee, sdim, p;
  };
  std::vector<Row> rows;
  for (const AlgebraId& id : ids) {
    MinimalGradingData mg = minimal_grading_data(id);
    rows.push_back({id.str(), to_string(mg.h_vee), to_string(mg.sdims.g), table_pk(id).str()});
  }
  switch (f) {
    case Format::Json: {
      ordered_json a = ordered_json::array();
      for (const Row& r : rows)
        a.push_back({{"algebra", r.name}, {"h_vee", r.h_vee}, {"sdim_g", r.sdim}, {"p", r.p}});
      return dump(a);
    }
    case Format::Csv: {
      std::string out = csv_line({"algebra", "h_vee", "sdim_g", "p"});
      for (const Row& r : rows) out += csv_line({r.name, r.h_vee, r.sdim, r.p});
      return out;
    }
    case Format::Markdown: {
      std::ostringstream os;
      os << "| algebra | h_vee | sdim g | p(k) |\n|---|---|---|---|\n";
      for (const Row& r : rows)
        os << "| " << r.name << " | " << r.h_vee << " | " << r.sdim << " | " << r.p << " |\n";
      return os.str();
    }
  }
  return {};
}

std::string render_chain(const CollapseChain& ch, Format f)
{
  switch (f) {
    case Format::Json: {
      ordered_json o;
      ordered_json steps = ordered_json::array();
      for (const ChainStep& s : ch.steps)
        steps.push_back({{"algebra", s.id.str()}, {"level", to_string(s.level)}});
      o["steps"] = steps;
      o["end"] = chain_end_name(ch.end);
      if (ch.end == ChainEnd::Virasoro) o["virasoro_c"] = to_string(ch.virasoro_c);
      return dump(o);
    }
    case Format::Csv: {
      std::string out = csv_line({"step", "algebra", "level", "end", "virasoro_c"});
      for (size_t i = 0; i < ch.steps.size(); ++i) {
        bool last = i + 1 == ch.steps.size();
        out += csv_line({std::to_string(i), ch.steps[i].id.str(), to_string(ch.steps[i].level),
                         last ? chain_end_name(ch.end) : "",
                         last && ch.end == ChainEnd::Virasoro ? to_string(ch.virasoro_c) : ""});
      }
      return out;
    }
    case Format::Markdown: {
      std::ostringstream os;
      for (size_t i = 0; i < ch.steps.size(); ++i) {
        if (i) os << " -> ";
        os << ch.steps[i].id.str() << " at k = " << to_string(ch.steps[i].level);
      }
      os << " -> " << chain_end_name(ch.end);
      if (ch.end == ChainEnd::Virasoro) os << " (c = " << to_string(ch.virasoro_c) << ")";
      os << "\n";
      return os.str();
    }
  }
  return {};
}

std::string render_realization(const RealizationReport& r, Format f)
{
  switch (f) {
    case Format::Json: {
      ordered_json o;
      o["n"] = r.n;
      o["level"] = to_string(rat(r.n - 1, 2));
      o["sugawara_eigenvalue"] = to_string(r.sug.eigenvalue);
      o["degenerate"] = r.sug.degenerate;
      o["tensor_checks"] = r.tensor_checks;
      o["charge_checks"] = r.charge_checks;
      o["bracket_pairs"] = r.pairs;
      return dump(o);
    }
    case Format::Csv: {
      std::string out = csv_line(
          {"n", "level", "sugawara_eigenvalue", "tensor_checks", "charge_checks", "bracket_pairs"});
      out += csv_line({std::to_string(r.n), to_string(rat(r.n - 1, 2)),
                       to_string(r.sug.eigenvalue), std::to_string(r.tensor_checks),
                       std::to_string(r.charge_checks), std::to_string(r.pairs)});
      return out;
    }
    case Format::Markdown: {
      std::ostringstream os;
      os << "# Realization check, n = " << r.n << "\n\n";
      os << "- level of the host algebra: " << to_string(rat(r.n - 1, 2)) << "\n";
      os << "- embedded affine sl(" << r.n + 1 << ") level: " << to_string(rat(-(r.n + 1), 2))
         << "\n";
      os << "- Sugawara eigenvalue on the squares: " << to_string(r.sug.eigenvalue) << "\n";
      os << "- tensor-product identities verified: " << r.tensor_checks << "\n";
      os << "- charge-grading checks: " << r.charge_checks << "\n";
      os << "- bracket pairs verified: " << r.pairs << "\n";
      return os.str();
    }
  }
  return {};
}

std::string golden_filename(const AlgebraId& id)
{
  std::string out;
  for (char c : id.str()) {
    if (std::isalnum((unsigned char)c)) {
      out += (char)std::tolower((unsigned char)c);
    } else if (c == '|' || c == ',' || c == ';' || c == ':' || c == '(') {
      out += '_';
    } else if (c == '-') {
      out += 'm';
    } else if (c == '/') {
      out += 'd';
    }
    // ')' and anything else: dropped
  }
  return out + ".json";
}

std::string golden_document(const LevelClassification& lc)
{
  ordered_json o;
  o["generator"] = "wmin classify --regenerate-goldens";
  o["format_version"] = 1;
  o["record"] = classification_json(lc);
  return dump(o);
}

} // namespace wmin
