#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ssb/errors.hpp"

namespace ssb {

// Exact rational scalar.  Thin value wrapper over mpq_class so that the
// gmpxx expression templates never leak into generic code.
struct Rat {
  mpq_class q;

  Rat() : q(0) {}
  Rat(long n) : q(n) {}
  explicit Rat(const mpz_class& n) : q(n) {}
  explicit Rat(const mpq_class& v) : q(v) { q.canonicalize(); }
  static Rat parse(const std::string& s);

  bool is_zero() const { return q == 0; }
  Rat operator+(const Rat& o) const { return wrap(q + o.q); }
  Rat operator-(const Rat& o) const { return wrap(q - o.q); }
  Rat operator*(const Rat& o) const { return wrap(q * o.q); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw InternalError("division by zero in Q");
    return wrap(q / o.q);
  }
  Rat operator-() const { return wrap(-q); }
  Rat& operator+=(const Rat& o) { q += o.q; return *this; }
  Rat& operator-=(const Rat& o) { q -= o.q; return *this; }
  Rat& operator*=(const Rat& o) { q *= o.q; return *this; }
  bool operator==(const Rat& o) const { return q == o.q; }
  bool operator!=(const Rat& o) const { return q != o.q; }
  Rat inv() const { return Rat(1) / *this; }

  std::string str() const;

  static constexpr bool char_zero = true;
  static std::string field_name() { return "Q"; }

 private:
  static Rat wrap(const mpq_class& v) {
    Rat r;
    r.q = v;
    return r;
  }
};

// Prime field F_p with a process-global modulus, set once before use.
// Fine for the desk-scale smoke runs this library targets; switching the
// modulus while field values are alive is the caller's bug.
struct Fp {
  uint64_t v = 0;

  Fp() = default;
  Fp(long n) {
    long m = n % (long)p;
    if (m < 0) m += (long)p;
    v = (uint64_t)m;
  }

  static uint64_t p;
  static void set_modulus(uint64_t m);

  bool is_zero() const { return v == 0; }
  Fp operator+(const Fp& o) const { return from(v + o.v >= p ? v + o.v - p : v + o.v); }
  Fp operator-(const Fp& o) const { return from(v >= o.v ? v - o.v : v + p - o.v); }
  Fp operator*(const Fp& o) const { return from((v * o.v) % p); }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp operator-() const { return from(v == 0 ? 0 : p - v); }
  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }
  bool operator==(const Fp& o) const { return v == o.v; }
  bool operator!=(const Fp& o) const { return v != o.v; }
  Fp inv() const;

  std::string str() const { return std::to_string(v); }

  static constexpr bool char_zero = false;
  static std::string field_name() { return "Fp:" + std::to_string(p); }

 private:
  static Fp from(uint64_t x) {
    Fp r;
    r.v = x;
    return r;
  }
};

}  // namespace ssb
