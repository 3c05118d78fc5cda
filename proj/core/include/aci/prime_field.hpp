// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace aci {

// Arithmetic in the prime field GF(p) for an odd prime 2 < p < 2^15.
// Elements are uint32_t values in [0, p).  The upper bound keeps products of
// two elements below 2^30, which the elimination kernel relies on for its
// 64-bit accumulation strategy.
struct PrimeField {
  uint32_t p;

  explicit PrimeField(uint32_t prime) : p(prime) { validate(prime); }

  static void validate(uint32_t prime) {
    if (prime < 3 || prime >= 32768)
      throw std::invalid_argument("prime must satisfy 2 < p < 2^15, got " + std::to_string(prime));
    if (prime % 2 == 0)
      throw std::invalid_argument("prime must be odd, got " + std::to_string(prime));
    for (uint32_t d = 3; d * d <= prime; d += 2)
      if (prime % d == 0)
        throw std::invalid_argument(std::to_string(prime) + " is not prime (divisible by " +
                                    std::to_string(d) + ")");
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p;
    uint32_t base = a % p;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    a %= p;
    if (a == 0) throw std::domain_error("attempt to invert 0 in GF(p)");
    return pow(a, p - 2);
  }
  // Lift a signed integer into [0, p).
  uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
  }
};

// The coefficient prime used when none is specified: reads the environment
// variable ACI_DEFAULT_PRIME if set (must parse to a valid prime, otherwise an
// exception is thrown); defaults to 32003.
inline uint32_t default_prime() {
  const char* env = std::getenv("ACI_DEFAULT_PRIME");
  if (!env || !*env) return 32003;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (!end || *end != '\0')
    throw std::invalid_argument(std::string("ACI_DEFAULT_PRIME is not a number: ") + env);
  PrimeField::validate(static_cast<uint32_t>(v));
  return static_cast<uint32_t>(v);
}

inline PrimeField default_field() { return PrimeField(default_prime()); }

}  // namespace aci
