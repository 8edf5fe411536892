#include "qsd/rational.hpp"

#include <limits>

#include "qsd/error.hpp"

namespace qsd {

Rational make_rational(std::int64_t value) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 data model expected");
  return Rational(static_cast<long>(value));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw UndefinedValue("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw InvalidParameters("value " + to_string(q) + " is not an integer");
  const Integer& n = q.get_num();
  if (!n.fits_slong_p()) throw InvalidParameters("value " + to_string(q) + " exceeds 64 bits");
  return n.get_si();
}

int sign(const Rational& q) {
  const int s = sgn(q);
  return (s > 0) - (s < 0);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw InvalidParameters("malformed rational '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace qsd
