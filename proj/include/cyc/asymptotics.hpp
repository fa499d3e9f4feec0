#pragma once
// The mean value of n -> cdeg(Z_n x Z_n). The function f(n) = cdeg(Z_n x Z_n)
// is multiplicative with a closed form at prime powers; its mean value
//   M = lim (1/x) sum_{n<=x} f(n) = prod_p (1 - 1/p) sum_{a>=0} f(p^a)/p^a
// exists (Delange), and sum_{n<=x} f(n) = M x + O(log^3 x). This module
// evaluates f and g = mu * f exactly, partial sums exactly or in 256-bit
// floats, and the Euler product truncated at a prime bound.

#include <cstdint>
#include <vector>

#include "cyc/arith.hpp"

namespace cyc {

// f(p^a) = (p^{a+2} - p^a - 2p + 2) / (p^{a+2} + p^{a+1} - (2a+3)p + (2a+1));
// f(1) = 1, extended multiplicatively. Equals cdeg(Z_{p^a} x Z_{p^a}).
Rational f_at_prime_power(std::uint64_t p, unsigned a);
Rational f_at(const Factorization& fac);
Rational f_at(std::uint64_t n);

// g = mu * f (Dirichlet convolution), so f(n) = sum_{d|n} g(d);
// g(p^a) = f(p^a) - f(p^{a-1}), also multiplicative.
Rational g_at_prime_power(std::uint64_t p, unsigned a);
Rational g_at(const Factorization& fac);
Rational g_at(std::uint64_t n);

// Working precision for the float-mode sums and the Euler product. Note
// that assigning to an mpf_class keeps the target's precision, so every
// float member below is constructed at this precision up front.
inline constexpr unsigned kFloatPrecision = 320;

// --- partial sums S(x) = sum_{n <= x} f(n) ---------------------------------

// Up to this x the sum is accumulated in exact rationals; beyond it the
// common denominator explodes and 320-bit floats take over (absolute error
// below x * 2^-300, far under the 1e-6 the consumers need).
inline constexpr std::uint64_t kExactPartialSumThreshold = 20'000;

enum class SumMode { Auto, Exact, Float };

struct PartialSum {
    std::uint64_t x = 0;
    bool is_exact = false;
    Rational exact;                            // populated iff is_exact
    mpf_class approx{0, kFloatPrecision};      // always populated
};

PartialSum partial_sum_f(std::uint64_t x, SumMode mode = SumMode::Auto);

// --- the mean value M --------------------------------------------------------

struct MeanValue {
    mpf_class value{0, kFloatPrecision}; // Euler product over primes <= prime_bound
    std::uint64_t prime_bound = 0;
    unsigned series_depth = 0;
    Rational tail_bound; // declared bound for the prime truncation: 1/P
};

// series_depth caps the per-prime series sum_{a<=A} f(p^a)/p^a; terms are
// also cut once p^a exceeds 2^300 (below the float resolution).
MeanValue mean_value(std::uint64_t prime_bound, unsigned series_depth = 64);

// --- error profile -----------------------------------------------------------

struct ProfileRow {
    std::uint64_t x = 0;
    mpf_class partial_sum{0, kFloatPrecision};
    mpf_class residual{0, kFloatPrecision};           // S(x) - M x
    bool log3_defined = false;                        // false at x = 1, log^3 x = 0
    mpf_class residual_over_log3{0, kFloatPrecision}; // residual / ln(x)^3
};

std::vector<ProfileRow> error_profile(const std::vector<std::uint64_t>& xs, const MeanValue& mv);

} // namespace cyc
