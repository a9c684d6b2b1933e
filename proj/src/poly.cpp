#include "wmin/poly.hpp"

#include <algorithm>

namespace wmin {

void PolyK::trim()
{
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat PolyK::eval(const Rat& x) const
{
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyK PolyK::operator+(const PolyK& o) const
{
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return PolyK(std::move(r));
}

PolyK PolyK::operator-(const PolyK& o) const { return *this + (-o); }

PolyK PolyK::operator-() const
{
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  return PolyK(std::move(r));
}

PolyK PolyK::operator*(const PolyK& o) const
{
  if (is_zero() || o.is_zero()) return PolyK();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return PolyK(std::move(r));
}

PolyK PolyK::scaled(const Rat& s) const
{
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= s;
  return PolyK(std::move(r));
}

std::pair<PolyK, PolyK> PolyK::divmod(const PolyK& d) const
{
  if (d.is_zero()) throw std::invalid_argument("PolyK::divmod: zero divisor");
  std::vector<Rat> rem(c_);
  if ((int)rem.size() - 1 < d.degree()) return {PolyK(), *this};
  std::vector<Rat> quot(rem.size() - d.c_.size() + 1, Rat(0));
  for (int i = (int)quot.size() - 1; i >= 0; --i) {
    Rat q = rem[i + d.degree()] / d.leading();
    quot[i] = q;
    if (q != 0)
      for (size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= q * d.c_[j];
  }
  return {PolyK(std::move(quot)), PolyK(std::move(rem))};
}

PolyK PolyK::monic() const
{
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

std::string PolyK::str() const
{
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    Rat a = c_[i];
    if (a == 0) continue;
    if (!s.empty()) {
      s += (a > 0) ? " + " : " - ";
      if (a < 0) a = -a;
    } else if (a < 0) {
      s += "-";
      a = -a;
    }
    bool unit = (a == 1 && i > 0);
    if (!unit) s += to_string(a);
    if (i > 0) {
      if (!unit) s += "*";
      s += "k";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

PolyK gcd(PolyK a, PolyK b)
{
  while (!b.is_zero()) {
    PolyK r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.monic();
}

bool poly_divides(const PolyK& d, const PolyK& p)
{
  if (d.is_zero()) throw std::invalid_argument("poly_divides: zero divisor");
  return p.divmod(d).second.is_zero();
}

namespace {

// Divisors of |n| (n != 0), by trial division; inputs here are tiny.
std::vector<mpz_class> divisors(mpz_class n)
{
  n = abs(n);
  std::vector<mpz_class> divs{1};
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    size_t base = divs.size();
    mpz_class pe = 1;
    while (n % p == 0) {
      n /= p;
      pe *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
    }
  }
  if (n > 1) {
    size_t base = divs.size();
    for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * n);
  }
  return divs;
}

// Candidate rational roots of an integer polynomial (primitive not required).
std::vector<Rat> root_candidates(const PolyK& p)
{
  // scale to integer coefficients
  mpz_class lcm = 1;
  for (const Rat& a : p.coeffs()) lcm = lcm / gcd(lcm, a.get_den()) * a.get_den();
  std::vector<mpz_class> ic;
  for (const Rat& a : p.coeffs()) {
    Rat s = a * Rat(lcm);
    ic.push_back(s.get_num());
  }
  // strip leading zeros already handled; constant term may be zero — caller deflates first
  std::vector<Rat> cands;
  for (const auto& a0d : divisors(ic.front()))
    for (const auto& and_ : divisors(ic.back())) {
      Rat r(a0d, and_);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  return cands;
}

} // namespace

RootExtraction rational_roots(const PolyK& p)
{
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  RootExtraction out;
  PolyK q = p;
  // factor out k^m
  while (q.degree() >= 1 && q.coeff(0) == 0) {
    out.roots.insert(Rat(0));
    q = q.divmod(PolyK::k()).first;
  }
  while (q.degree() >= 1) {
    if (q.degree() == 1) {
      out.roots.insert(-q.coeff(0) / q.coeff(1));
      q = PolyK::constant(q.leading());
      break;
    }
    bool found = false;
    for (const Rat& r : root_candidates(q)) {
      if (q.eval(r) == 0) {
        out.roots.insert(r);
        PolyK lin({-r, Rat(1)});
        do { q = q.divmod(lin).first; } while (!q.is_zero() && q.eval(r) == 0);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  out.residual = q;
  out.splits = (q.degree() <= 0);
  return out;
}

RatFunK::RatFunK(PolyK num, PolyK den)
{
  if (den.is_zero()) throw std::invalid_argument("RatFunK: zero denominator");
  PolyK g = gcd(num, den);
  if (g.degree() >= 1) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  Rat lead = den.leading();
  num_ = num.scaled(Rat(1) / lead);
  den_ = den.scaled(Rat(1) / lead);
}

Rat RatFunK::eval(const Rat& x) const
{
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("RatFunK::eval at pole");
  return num_.eval(x) / d;
}

RatFunK RatFunK::operator+(const RatFunK& o) const
{
  return RatFunK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunK RatFunK::operator-(const RatFunK& o) const
{
  return RatFunK(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunK RatFunK::operator*(const RatFunK& o) const
{
  return RatFunK(num_ * o.num_, den_ * o.den_);
}

std::string RatFunK::str() const
{
  if (den_ == PolyK::constant(Rat(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

EqualSolutions ratfun_equal_solutions(const RatFunK& lhs, const RatFunK& rhs,
                                      const std::set<Rat>& excluded_poles)
{
  EqualSolutions out;
  if (lhs == rhs) {
    out.all_k = true;
    return out;
  }
  PolyK cleared = lhs.num() * rhs.den() - rhs.num() * lhs.den();
  RootExtraction re = rational_roots(cleared);
  if (!re.splits) throw IrrationalSolutions(re.residual);
  for (const Rat& r : re.roots) {
    if (excluded_poles.count(r)) continue;
    if (!lhs.defined_at(r) || !rhs.defined_at(r)) continue;
    out.roots.insert(r);
  }
  return out;
}

} // namespace wmin
