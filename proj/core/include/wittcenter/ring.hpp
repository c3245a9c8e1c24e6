#pragma once

// Exact integer arithmetic and the truncated rings Z/p^k.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "wittcenter/error.hpp"

namespace wittcenter {

using BigInt = mpz_class;

// Largest prime accepted as a characteristic.
inline constexpr unsigned kMaxPrime = 97;

bool is_small_prime(unsigned p) noexcept;

// Throws RangeError unless p is a prime <= kMaxPrime.
void require_prime(unsigned p);

// p^k as a 64-bit integer; throws RangeError if p^k >= 2^62.
std::uint64_t checked_prime_power(unsigned p, unsigned k);

// Multiplicative inverse of a unit modulo q.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q);

// p-adic valuation of a nonzero value (cap if value == 0).
unsigned valuation(std::uint64_t value, unsigned p, unsigned cap);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t q) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t q) noexcept {
  std::uint64_t s = a + b;
  return s >= q ? s - q : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t q) noexcept {
  return a >= b ? a - b : a + (q - b);
}

// Canonical representative of a signed integer modulo q.
std::uint64_t residue(std::int64_t value, std::uint64_t q) noexcept;
std::uint64_t residue(const BigInt& value, std::uint64_t q);

// Element of Z/p^k. The pair (p, k) travels with every value so that mixing
// levels is caught at the point of the mistake.
class ModInt {
 public:
  ModInt(unsigned p, unsigned k, std::int64_t value = 0);
  ModInt(unsigned p, unsigned k, const BigInt& value);

  unsigned prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return k_; }
  std::uint64_t modulus() const noexcept { return q_; }
  std::uint64_t value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % p_ != 0; }
  // Largest j with p^j | value (k for zero).
  unsigned valuation() const noexcept;
  ModInt inverse() const;

  friend ModInt operator+(const ModInt& a, const ModInt& b);
  friend ModInt operator-(const ModInt& a, const ModInt& b);
  friend ModInt operator*(const ModInt& a, const ModInt& b);
  ModInt operator-() const;
  ModInt& operator+=(const ModInt& b) { return *this = *this + b; }
  ModInt& operator-=(const ModInt& b) { return *this = *this - b; }
  ModInt& operator*=(const ModInt& b) { return *this = *this * b; }

  friend bool operator==(const ModInt& a, const ModInt& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.value_ == b.value_;
  }

  std::string to_string() const { return std::to_string(value_); }

 private:
  struct Raw {};
  ModInt(Raw, unsigned p, unsigned k, std::uint64_t q, std::uint64_t v) noexcept
      : p_(p), k_(k), q_(q), value_(v) {}

  void check_compatible(const ModInt& other) const;

  unsigned p_;
  unsigned k_;
  std::uint64_t q_;
  std::uint64_t value_;

  friend ModInt pdiv(const ModInt& a, unsigned j);
  friend ModInt reduce(const ModInt& a, unsigned k);
};

// Exact division by p^j: Z/p^k -> Z/p^(k-j). Requires p^j | a.value().
ModInt pdiv(const ModInt& a, unsigned j);

// Reduction Z/p^k -> Z/p^k'.
ModInt reduce(const ModInt& a, unsigned k);

// Exact binomial coefficient; zero when k > n or k < 0.
BigInt binomial(const BigInt& n, const BigInt& k);

BigInt pow(const BigInt& base, unsigned long exponent);

}  // namespace wittcenter
