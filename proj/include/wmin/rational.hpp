#ifndef WMIN_RATIONAL_HPP
#define WMIN_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace wmin {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator), which is all we need; helpers below add parsing
/// and rendering in the "p/q" format used across reports and golden files.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p/q" (optional surrounding spaces). Decimal points are
/// rejected on purpose: everything in this library is exact.
Rat parse_rat(const std::string& s);

/// Renders as "p" or "p/q", never a decimal.
std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace wmin

#endif
