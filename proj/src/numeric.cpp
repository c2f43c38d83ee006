#include "einz/numeric.hpp"

#include <stdexcept>

namespace einz {

double to_double(const Rational& value) { return value.get_d(); }

std::string to_fixed(const Rational& value, int places) {
  if (places < 0) throw std::invalid_argument("negative precision");
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;

  const bool negative = sgn(value) < 0;
  Rational magnitude = abs(value);
  // floor(|x| * 10^k + 1/2)
  Rational shifted = magnitude * scale + Rational(1, 2);
  mpz_class digits = shifted.get_num() / shifted.get_den();

  mpz_class whole = digits / scale;
  mpz_class frac = digits % scale;
  std::string out = negative && digits != 0 ? "-" : "";
  out += whole.get_str();
  if (places > 0) {
    std::string f = frac.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

std::string to_fraction(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace einz
