#pragma once

// Number-theoretic primitives and exact arithmetic types used everywhere else:
// factorization (single-value and sieved bulk), the classical multiplicative
// functions, Gaussian binomials, modular helpers, and decimal rendering of
// exact rationals.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyc/errors.hpp"

namespace cyc {

using Integer = mpz_class;  // arbitrary-precision integer
using Rational = mpq_class; // arbitrary-precision reduced fraction

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted by prime ascending, exponents >= 1; empty for n = 1.
using Factorization = std::vector<PrimePower>;

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Trial division for small inputs, Brent's rho (deterministic parameter
// sequence) for large ones. n >= 1.
Factorization factorize(std::uint64_t n);

std::uint64_t eval_factorization(const Factorization& f);

// All tau(n) divisors, ascending. n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t tau(std::uint64_t n);
Integer sigma(std::uint64_t n); // divisor sum; Integer to dodge overflow
int moebius(std::uint64_t n);   // in {-1, 0, 1}

// phi/tau/sigma/moebius from an existing factorization (bulk paths).
std::uint64_t euler_phi(const Factorization& f);
std::uint64_t tau(const Factorization& f);
Integer sigma(const Factorization& f);
int moebius(const Factorization& f);

// b^e mod m via 128-bit products; m >= 1 (m = 1 gives 0).
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Inverse of a mod m; requires gcd(a, m) = 1, m >= 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// base^exp as an exact Integer.
Integer pow_int(std::uint64_t base, unsigned long exp);

// Gaussian (q-)binomial [k choose j]_p = prod_{i=1..j} (p^{k-j+i}-1)/(p^i-1),
// computed by the ascending telescoping product (every prefix is itself a
// q-binomial, so each division is exact). Requires 0 <= j <= k, p >= 2.
Integer gaussian_binomial(unsigned k, unsigned j, std::uint64_t p);

// Smallest-prime-factor table for bulk factorization, immutable once built.
class SpfSieve {
  public:
    // limit >= 2; memory guard rejects tables past `cap` entries.
    explicit SpfSieve(std::uint64_t limit, std::uint64_t cap = 100'000'000);

    std::uint64_t limit() const { return limit_; }

    // Smallest prime factor of n, 2 <= n <= limit.
    std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }

    Factorization factorize(std::uint64_t n) const; // 1 <= n <= limit

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

// num/den as a canonical Rational; den != 0.
Rational make_ratio(const Integer& num, const Integer& den);

// "n/d", or just "n" when d = 1.
std::string format_ratio(const Rational& q);

// Fixed-point decimal with `frac_digits` fractional digits, round-half-even.
std::string decimal_string(const Rational& q, int frac_digits);

// Fixed-point decimal truncated toward zero (no rounding).
std::string decimal_trunc_string(const Rational& q, int frac_digits);

// Exact mpf -> Rational conversion (mpq_set_f is exact).
Rational to_rational(const mpf_class& v);

} // namespace cyc
