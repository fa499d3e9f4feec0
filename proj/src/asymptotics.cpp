#include "cyc/asymptotics.hpp"

#include <cmath>
#include <unordered_map>

#include "cyc/errors.hpp"

namespace cyc {

namespace {

Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// numerator and denominator of f(p^a) for a >= 1, with pa = p^a passed in
void f_polynomials(const Integer& pa, std::uint64_t p, unsigned a, Integer& num, Integer& den) {
    const Integer P = from_u64(p);
    num = pa * P * P - pa - 2 * P + 2;
    den = pa * P * P + pa * P - from_u64(2 * a + 3) * P + from_u64(2 * a + 1);
}

} // namespace

Rational f_at_prime_power(std::uint64_t p, unsigned a) {
    if (!is_prime(p)) throw parameter_error("f_at_prime_power: p must be prime");
    if (a == 0) return Rational(1);
    Integer num, den;
    f_polynomials(pow_int(p, a), p, a, num, den);
    return make_ratio(num, den);
}

Rational f_at(const Factorization& fac) {
    Rational result(1);
    for (const PrimePower& pp : fac) result *= f_at_prime_power(pp.prime, pp.exponent);
    return result;
}

Rational f_at(std::uint64_t n) {
    if (n == 0) throw parameter_error("f_at: n must be >= 1");
    return f_at(factorize(n));
}

Rational g_at_prime_power(std::uint64_t p, unsigned a) {
    if (a == 0) return Rational(1);
    return f_at_prime_power(p, a) - f_at_prime_power(p, a - 1);
}

Rational g_at(const Factorization& fac) {
    Rational result(1);
    for (const PrimePower& pp : fac) result *= g_at_prime_power(pp.prime, pp.exponent);
    return result;
}

Rational g_at(std::uint64_t n) {
    if (n == 0) throw parameter_error("g_at: n must be >= 1");
    return g_at(factorize(n));
}

// --- partial sums -------------------------------------------------------------

PartialSum partial_sum_f(std::uint64_t x, SumMode mode) {
    if (x == 0) throw parameter_error("partial_sum_f: x must be >= 1");
    const bool exact = mode == SumMode::Exact ||
                       (mode == SumMode::Auto && x <= kExactPartialSumThreshold);
    SpfSieve sieve(x);

    PartialSum result;
    result.x = x;
    result.is_exact = exact;
    
    if (exact) {
        std::unordered_map<std::uint64_t, Rational> memo; // keyed by p^a
        Rational sum(0);
        for (std::uint64_t n = 1; n <= x; ++n) {
            Rational fn(1);
            for (const PrimePower& pp : sieve.factorize(n)) {
                std::uint64_t key = eval_factorization({pp});
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, f_at_prime_power(pp.prime, pp.exponent)).first;
                fn *= it->second;
            }
            sum += fn;
        }
        result.exact = sum;
        result.approx = mpf_class(sum, kFloatPrecision);
        return result;
    }

    std::unordered_map<std::uint64_t, mpf_class> memo;
    mpf_class sum(0, kFloatPrecision), fn(0, kFloatPrecision);
    for (std::uint64_t n = 1; n <= x; ++n) {
        fn = 1;
        for (const PrimePower& pp : sieve.factorize(n)) {
            std::uint64_t key = eval_factorization({pp});
            auto it = memo.find(key);
            if (it == memo.end()) {
                mpf_class v(f_at_prime_power(pp.prime, pp.exponent), kFloatPrecision);
                it = memo.emplace(key, std::move(v)).first;
            }
            fn *= it->second;
        }
        sum += fn;
    }
    result.approx = sum;
    return result;
}

// --- the mean value -------------------------------------------------------------

MeanValue mean_value(std::uint64_t prime_bound, unsigned series_depth) {
    if (prime_bound < 2) throw parameter_error("mean_value: prime bound must be >= 2");
    if (prime_bound > 100'000'000)
        throw resource_error("mean_value: prime bound capped at 1e8");
    if (series_depth < 2) throw parameter_error("mean_value: series depth must be >= 2");

    // plain sieve of Eratosthenes for the primes up to the bound
    std::vector<bool> composite(prime_bound + 1, false);
    mpf_class product(1, kFloatPrecision), series(0, kFloatPrecision), term(0, kFloatPrecision);
    Integer pa, num, den;
    for (std::uint64_t p = 2; p <= prime_bound; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= prime_bound; q += p)
            composite[q] = true;

        series = 1; // a = 0 term
        pa = 1;
        for (unsigned a = 1; a <= series_depth; ++a) {
            pa *= from_u64(p);
            if (mpz_sizeinbase(pa.get_mpz_t(), 2) > 300) break; // below float resolution
            f_polynomials(pa, p, a, num, den);
            term = mpf_class(num, kFloatPrecision);
            term /= mpf_class(den * pa, kFloatPrecision);
            series += term;
        }
        series *= from_u64(p - 1);
        series /= from_u64(p);
        product *= series;
    }

    MeanValue mv;
    mv.value = product;
    mv.prime_bound = prime_bound;
    mv.series_depth = series_depth;
    mv.tail_bound = make_ratio(Integer(1), from_u64(prime_bound));
    return mv;
}

// --- error profile ----------------------------------------------------------------

std::vector<ProfileRow> error_profile(const std::vector<std::uint64_t>& xs, const MeanValue& mv) {
    std::vector<ProfileRow> rows;
    rows.reserve(xs.size());
    for (std::uint64_t x : xs) {
        ProfileRow row;
        row.x = x;
        row.partial_sum = partial_sum_f(x).approx;
        row.residual = mpf_class(row.partial_sum - mv.value * from_u64(x), kFloatPrecision);
        row.log3_defined = x > 1;
        if (row.log3_defined) {
            double l = std::log(static_cast<double>(x));
            row.residual_over_log3 = mpf_class(row.residual / mpf_class(l * l * l, kFloatPrecision), kFloatPrecision);
        } else {
            row.residual_over_log3 = mpf_class(0, kFloatPrecision);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cyc
