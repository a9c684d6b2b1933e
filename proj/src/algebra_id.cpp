#include "wmin/algebra_id.hpp"

#include <algorithm>
#include <vector>

namespace wmin {

std::string AlgebraId::str() const
{
  using F = Fam;
  switch (fam) {
    case F::SL:
      if (n == 0) return "sl(" + std::to_string(m) + ")";
      return "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case F::PSL:
      return "psl(" + std::to_string(m) + "|" + std::to_string(m) + ")";
    case F::OSP:
      if (n == 0) return "so(" + std::to_string(m) + ")";
      return "osp(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    case F::SPO:
      if (m == 0) return "sp(" + std::to_string(n) + ")";
      return "spo(" + std::to_string(n) + "|" + std::to_string(m) + ")";
    case F::D21A:
      return "D(2,1;" + to_string(a) + ")";
    case F::F4_SL2: return "F(4):sl2";
    case F::F4_D212: return "F(4):D212";
    case F::G3_SL2: return "G(3):sl2";
    case F::G3_G2: return "G(3):G2";
    case F::G2: return "G2";
    case F::F4: return "F4";
    case F::E6: return "E6";
    case F::E7: return "E7";
    case F::E8: return "E8";
  }
  return "?";
}

namespace {

// "name(m)" or "name(m|n)"; returns {m, n} with n = -1 when absent.
std::pair<int, int> parse_args(const std::string& spec, size_t open)
{
  if (spec.back() != ')')
    throw ParseError("expected ')' at end of \"" + spec + "\"");
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  size_t bar = inner.find('|');
  auto to_int = [&](const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad integer token \"" + tok + "\" in \"" + spec + "\"");
    return std::stoi(tok);
  };
  if (bar == std::string::npos) return {to_int(inner), -1};
  return {to_int(inner.substr(0, bar)), to_int(inner.substr(bar + 1))};
}

} // namespace

AlgebraId AlgebraId::parse(const std::string& raw)
{
  std::string spec;
  for (char c : raw)
    if (c != ' ') spec += c;
  if (spec.empty()) throw ParseError("empty algebra specification");

  AlgebraId id;
  if (spec == "G2") { id.fam = Fam::G2; return id; }
  if (spec == "F4") { id.fam = Fam::F4; return id; }
  if (spec == "E6") { id.fam = Fam::E6; return id; }
  if (spec == "E7") { id.fam = Fam::E7; return id; }
  if (spec == "E8") { id.fam = Fam::E8; return id; }
  if (spec == "F(4):sl2") { id.fam = Fam::F4_SL2; return id; }
  if (spec == "F(4):D212") { id.fam = Fam::F4_D212; return id; }
  if (spec == "G(3):sl2") { id.fam = Fam::G3_SL2; return id; }
  if (spec == "G(3):G2") { id.fam = Fam::G3_G2; return id; }
  if (spec.rfind("F(4)", 0) == 0 || spec.rfind("G(3)", 0) == 0)
    throw ParseError("unknown theta tag in \"" + spec + "\" (want :sl2, :D212 or :G2)");

  if (spec.rfind("D(", 0) == 0) {
    if (spec.rfind("D(2,1;", 0) != 0 || spec.back() != ')')
      throw ParseError("bad D(2,1;a) specification \"" + spec + "\"");
    id.fam = Fam::D21A;
    id.a = parse_rat(spec.substr(6, spec.size() - 7));
    return id;
  }

  size_t open = spec.find('(');
  if (open == std::string::npos)
    throw ParseError("unknown algebra \"" + spec + "\"");
  std::string name = spec.substr(0, open);
  auto [p, q] = parse_args(spec, open);

  if (name == "sl") {
    id.fam = Fam::SL;
    id.m = p;
    id.n = (q < 0) ? 0 : q;
    if (id.m == id.n)
      throw ParseError("sl(" + std::to_string(p) + "|" + std::to_string(p) +
                       ") has no invariant form; use psl");
    return id;
  }
  if (name == "psl") {
    if (q != p)
      throw ParseError("psl requires equal arguments, got \"" + spec + "\"");
    id.fam = Fam::PSL;
    id.m = id.n = p;
    return id;
  }
  if (name == "osp") {
    if (q < 0) throw ParseError("osp needs two arguments, got \"" + spec + "\"");
    id.fam = Fam::OSP;
    id.m = p;
    id.n = q;
    return id;
  }
  if (name == "spo") {
    if (q < 0) throw ParseError("spo needs two arguments, got \"" + spec + "\"");
    id.fam = Fam::SPO;
    id.n = p;
    id.m = q;
    return id;
  }
  if (name == "so") {
    if (q >= 0) throw ParseError("so takes one argument, got \"" + spec + "\"");
    id.fam = Fam::OSP;
    id.m = p;
    id.n = 0;
    return id;
  }
  if (name == "sp") {
    if (q >= 0) throw ParseError("sp takes one argument, got \"" + spec + "\"");
    id.fam = Fam::SPO;
    id.n = p;
    id.m = 0;
    return id;
  }
  throw ParseError("unknown algebra family \"" + name + "\"");
}

void AlgebraId::validate() const
{
  switch (fam) {
    case Fam::SL:
      if (m < 2) throw InvalidParameter("sl: first argument must be >= 2 in " + str());
      if (n < 0) throw InvalidParameter("sl: negative argument in " + str());
      if (m == 2 && n == 0)
        throw ExcludedAlgebra("sl(2): the minimal W-algebra degenerates to Virasoro; excluded");
      if (m == n + 2 && n >= 2)
        throw ExcludedAlgebra(str() + ": centralizer of the grading triple is not a direct sum of minimal ideals; excluded");
      break;
    case Fam::PSL:
      if (m < 2) throw InvalidParameter("psl(m|m) needs m >= 2 in " + str());
      break;
    case Fam::OSP:
      if (n % 2 != 0 || n < 0)
        throw InvalidParameter("osp(m|n) needs n even and nonnegative in " + str());
      if (m < 4)
        throw InvalidParameter(str() + ": highest root of so(m) with m < 4 does not give a minimal grading (use the spo convention)");
      if (m == 4 && n == 0)
        throw ExcludedAlgebra("so(4) is not simple");
      break;
    case Fam::SPO:
      if (n % 2 != 0 || n < 2)
        throw InvalidParameter("spo(n|m) needs n even and >= 2 in " + str());
      if (m < 0) throw InvalidParameter("spo: negative argument in " + str());
      if (n == 2 && m == 0)
        throw ExcludedAlgebra("sp(2) = sl(2): excluded");
      break;
    case Fam::D21A:
      if (a == 0 || a == -1)
        throw InvalidParameter("D(2,1;a) requires a outside {0,-1}, got a = " + to_string(a));
      break;
    default:
      break;
  }
}

bool AlgebraId::is_lie_algebra() const
{
  switch (fam) {
    case Fam::SL: return n == 0;
    case Fam::OSP: return n == 0;
    case Fam::SPO: return m == 0;
    case Fam::G2:
    case Fam::F4:
    case Fam::E6:
    case Fam::E7:
    case Fam::E8: return true;
    default: return false;
  }
}

bool AlgebraId::has_matrix_realization() const
{
  switch (fam) {
    case Fam::SL:
    case Fam::PSL:
    case Fam::OSP:
    case Fam::SPO:
    case Fam::D21A: return true;
    default: return false;
  }
}

Rat AlgebraId::d21a_canonical(const Rat& a)
{
  std::vector<Rat> orbit{a};
  for (size_t i = 0; i < orbit.size() && orbit.size() < 6; ++i) {
    Rat x = orbit[i];
    for (const Rat& y : {Rat(Rat(1) / x), Rat(Rat(-1) - x)})
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
  }
  return *std::max_element(orbit.begin(), orbit.end());
}

} // namespace wmin
