#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace triodyn {

// Arbitrary-precision rational; always kept in canonical (lowest terms) form.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace triodyn
