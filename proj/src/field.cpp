#include "ssb/field.hpp"

namespace ssb {

Rat Rat::parse(const std::string& s) {
  try {
    Rat r;
    r.q = mpq_class(s);
    r.q.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ConfigError("cannot parse rational: '" + s + "'");
  }
}

std::string Rat::str() const {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

uint64_t Fp::p = 0;

void Fp::set_modulus(uint64_t m) {
  if (m < 2) throw ConfigError("field modulus must be a prime >= 2");
  if (m >= (1u << 31)) throw ConfigError("field modulus too large");
  for (uint64_t d = 2; d * d <= m; d++)
    if (m % d == 0) throw ConfigError("field modulus is not prime");
  p = m;
}

Fp Fp::inv() const {
  if (v == 0) throw InternalError("division by zero in Fp");
  // extended Euclid
  int64_t a = (int64_t)v, b = (int64_t)p, x0 = 1, x1 = 0;
  while (b != 0) {
    int64_t q = a / b;
    int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  int64_t x = x0 % (int64_t)p;
  if (x < 0) x += (int64_t)p;
  Fp r;
  r.v = (uint64_t)x;
  return r;
}

}  // namespace ssb
