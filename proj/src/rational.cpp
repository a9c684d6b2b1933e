#include "wmin/rational.hpp"

namespace wmin {

Rat parse_rat(const std::string& s)
{
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos)
    throw std::invalid_argument("parse_rat: empty string");
  std::string t = s.substr(b, e - b + 1);
  if (t.find('.') != std::string::npos)
    throw std::invalid_argument("parse_rat: decimal notation rejected: " + t);
  try {
    Rat r(t);
    if (r.get_den() == 0)
      throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: bad rational: " + t);
  }
}

std::string to_string(const Rat& r)
{
  return r.get_str();
}

} // namespace wmin
