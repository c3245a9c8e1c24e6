#include "wittcenter/ring.hpp"

#include <limits>

namespace wittcenter {

bool is_small_prime(unsigned p) noexcept {
  if (p < 2 || p > kMaxPrime) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(unsigned p) {
  if (!is_small_prime(p)) {
    throw RangeError("p = " + std::to_string(p) +
                     " is not a prime <= " + std::to_string(kMaxPrime));
  }
}

std::uint64_t checked_prime_power(unsigned p, unsigned k) {
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > limit / p) {
      throw RangeError(std::to_string(p) + "^" + std::to_string(k) +
                       " exceeds the supported modulus range");
    }
    q *= p;
  }
  return q;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t q) {
  __int128 old_r = static_cast<__int128>(a % q), r = q;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 quot = old_r / r;
    __int128 t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DivisibilityError("value is not a unit");
  __int128 res = old_s % static_cast<__int128>(q);
  if (res < 0) res += q;
  return static_cast<std::uint64_t>(res);
}

unsigned valuation(std::uint64_t value, unsigned p, unsigned cap) {
  if (value == 0) return cap;
  unsigned v = 0;
  while (value % p == 0 && v < cap) {
    value /= p;
    ++v;
  }
  return v;
}

std::uint64_t residue(std::int64_t value, std::uint64_t q) noexcept {
  __int128 r = static_cast<__int128>(value) % static_cast<__int128>(q);
  if (r < 0) r += q;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t residue(const BigInt& value, std::uint64_t q) {
  mpz_class m;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(q), 0, 0, &q);
  mpz_fdiv_r(m.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return count == 0 ? 0 : out;
}

ModInt::ModInt(unsigned p, unsigned k, std::int64_t value) : p_(p), k_(k) {
  require_prime(p);
  if (k == 0) throw RangeError("truncation exponent must be >= 1");
  q_ = checked_prime_power(p, k);
  value_ = residue(value, q_);
}

ModInt::ModInt(unsigned p, unsigned k, const BigInt& value) : p_(p), k_(k) {
  require_prime(p);
  if (k == 0) throw RangeError("truncation exponent must be >= 1");
  q_ = checked_prime_power(p, k);
  value_ = residue(value, q_);
}

void ModInt::check_compatible(const ModInt& other) const {
  if (p_ != other.p_ || k_ != other.k_) {
    throw StructuralError("mixed moduli: Z/" + std::to_string(p_) + "^" +
                          std::to_string(k_) + " vs Z/" +
                          std::to_string(other.p_) + "^" +
                          std::to_string(other.k_));
  }
}

unsigned ModInt::valuation() const noexcept {
  return wittcenter::valuation(value_, p_, k_);
}

ModInt ModInt::inverse() const {
  return ModInt(Raw{}, p_, k_, q_, inverse_mod(value_, q_));
}

ModInt operator+(const ModInt& a, const ModInt& b) {
  a.check_compatible(b);
  return ModInt(ModInt::Raw{}, a.p_, a.k_, a.q_, add_mod(a.value_, b.value_, a.q_));
}

ModInt operator-(const ModInt& a, const ModInt& b) {
  a.check_compatible(b);
  return ModInt(ModInt::Raw{}, a.p_, a.k_, a.q_, sub_mod(a.value_, b.value_, a.q_));
}

ModInt operator*(const ModInt& a, const ModInt& b) {
  a.check_compatible(b);
  return ModInt(ModInt::Raw{}, a.p_, a.k_, a.q_, mul_mod(a.value_, b.value_, a.q_));
}

ModInt ModInt::operator-() const {
  return ModInt(Raw{}, p_, k_, q_, value_ == 0 ? 0 : q_ - value_);
}

ModInt pdiv(const ModInt& a, unsigned j) {
  if (j > a.k_) {
    throw RangeError("pdiv by p^" + std::to_string(j) + " exceeds Z/" +
                     std::to_string(a.p_) + "^" + std::to_string(a.k_));
  }
  std::uint64_t pj = checked_prime_power(a.p_, j);
  if (a.value_ % pj != 0) {
    throw DivisibilityError(std::to_string(a.value_) + " is not divisible by " +
                            std::to_string(a.p_) + "^" + std::to_string(j));
  }
  if (j == a.k_) {
    throw RangeError("pdiv would leave the zero ring Z/p^0");
  }
  std::uint64_t q = a.q_ / pj;
  return ModInt(ModInt::Raw{}, a.p_, a.k_ - j, q, a.value_ / pj);
}

ModInt reduce(const ModInt& a, unsigned k) {
  if (k == 0 || k > a.k_) {
    throw RangeError("cannot reduce Z/p^" + std::to_string(a.k_) + " to Z/p^" +
                     std::to_string(k));
  }
  std::uint64_t q = checked_prime_power(a.p_, k);
  return ModInt(ModInt::Raw{}, a.p_, k, q, a.value_ % q);
}

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (!k.fits_ulong_p()) throw RangeError("binomial lower index too large");
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace wittcenter
