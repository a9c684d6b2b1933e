#ifndef WMIN_POLY_HPP
#define WMIN_POLY_HPP

#include "wmin/rational.hpp"

#include <set>
#include <utility>
#include <vector>

namespace wmin {

/// Univariate polynomial in the level variable k, coefficients lowest degree
/// first, no trailing zeros (the zero polynomial is the empty list).
class PolyK {
public:
  PolyK() = default;
  explicit PolyK(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static PolyK constant(const Rat& r) { return PolyK({r}); }
  /// The monomial k + a.
  static PolyK linear(const Rat& a) { return PolyK({a, Rat(1)}); }
  static PolyK k() { return PolyK({Rat(0), Rat(1)}); }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; } // -1 for zero
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& x) const;

  PolyK operator+(const PolyK& o) const;
  PolyK operator-(const PolyK& o) const;
  PolyK operator*(const PolyK& o) const;
  PolyK operator-() const;
  PolyK scaled(const Rat& s) const;
  bool operator==(const PolyK& o) const { return c_ == o.c_; }
  bool operator!=(const PolyK& o) const { return c_ != o.c_; }
  bool operator<(const PolyK& o) const { return c_ < o.c_; } // container order

  /// Exact division with remainder; divisor must be nonzero.
  std::pair<PolyK, PolyK> divmod(const PolyK& d) const;
  PolyK monic() const;
  std::string str() const; // e.g. "k^2 + 3/2k + 1/2"

private:
  void trim();
  std::vector<Rat> c_;
};

PolyK gcd(PolyK a, PolyK b); // monic gcd

struct RootExtraction {
  std::set<Rat> roots;    // distinct rational roots
  bool splits;            // true iff the polynomial is a product of linear factors over Q
  PolyK residual;         // what is left after removing all rational roots (constant iff splits)
};

/// Rational roots via the rational-root theorem with deflation.
/// Throws std::invalid_argument on the zero polynomial.
RootExtraction rational_roots(const PolyK& p);

/// True iff p is exactly divisible by d. Throws on d = 0.
bool poly_divides(const PolyK& d, const PolyK& p);

/// Reduced rational function in k: gcd(num, den) = 1, den monic.
class RatFunK {
public:
  RatFunK() : num_(), den_(PolyK::constant(Rat(1))) {}
  RatFunK(PolyK num, PolyK den);
  static RatFunK from_poly(const PolyK& p) { return RatFunK(p, PolyK::constant(Rat(1))); }
  static RatFunK constant(const Rat& r) { return from_poly(PolyK::constant(r)); }

  const PolyK& num() const { return num_; }
  const PolyK& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool defined_at(const Rat& x) const { return den_.eval(x) != 0; }
  Rat eval(const Rat& x) const;

  RatFunK operator+(const RatFunK& o) const;
  RatFunK operator-(const RatFunK& o) const;
  RatFunK operator*(const RatFunK& o) const;
  bool operator==(const RatFunK& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunK& o) const { return !(*this == o); }
  std::string str() const;

private:
  PolyK num_, den_;
};

struct IrrationalSolutions : std::runtime_error {
  PolyK residual;
  explicit IrrationalSolutions(const PolyK& r)
      : std::runtime_error("equation has non-rational solutions; residual factor " + r.str()),
        residual(r) {}
};

struct EqualSolutions {
  bool all_k = false;     // lhs and rhs identical as rational functions
  std::set<Rat> roots;    // otherwise: all rational k with lhs(k) = rhs(k), both defined
};

/// Solves lhs(k) = rhs(k) by clearing denominators; k must not be an
/// excluded pole and both sides must be defined at it. Throws
/// IrrationalSolutions if the cleared polynomial does not split over Q.
EqualSolutions ratfun_equal_solutions(const RatFunK& lhs, const RatFunK& rhs,
                                      const std::set<Rat>& excluded_poles = {});

} // namespace wmin

#endif
