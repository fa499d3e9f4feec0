#include "cyc/arith.hpp"

#include <algorithm>
#include <numeric>

namespace cyc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod_u64(u64 b, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

// One strong-pseudoprime round; n odd, n-1 = d*2^s.
bool sprp(u64 n, u64 a, u64 d, int s) {
    u64 x = pow_mod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent-cycle rho with a deterministic parameter sequence; n odd composite,
// not a prime power of a found factor yet. Returns a nontrivial factor.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = f(y);
            ++lam;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        // cycle collapsed onto n itself: retry with the next increment
    }
}

void factor_into(u64 n, std::vector<u64>& primes) {
    while (n % 2 == 0) {
        primes.push_back(2);
        n /= 2;
    }
    for (u64 p = 3; p * p <= n && p < 100'000; p += 2) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // This base set is a proven deterministic witness set for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!sprp(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw parameter_error("factorize requires n >= 1");
    Factorization out;
    if (n == 1) return out;
    std::vector<u64> primes;
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return out;
}

u64 eval_factorization(const Factorization& f) {
    u64 n = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) n *= p;
    return n;
}

std::vector<u64> divisors(u64 n) {
    Factorization f = factorize(n);
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 euler_phi(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f) {
        r *= p - 1;
        for (unsigned i = 1; i < e; ++i) r *= p;
    }
    return r;
}

u64 tau(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f) r *= e + 1;
    return r;
}

Integer sigma(const Factorization& f) {
    Integer r = 1;
    for (const auto& [p, e] : f) {
        // 1 + p + ... + p^e = (p^(e+1) - 1) / (p - 1)
        Integer t = pow_int(p, e + 1) - 1;
        r *= t / Integer(p - 1);
    }
    return r;
}

int moebius(const Factorization& f) {
    for (const auto& pp : f)
        if (pp.exponent > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }
u64 tau(u64 n) { return tau(factorize(n)); }
Integer sigma(u64 n) { return sigma(factorize(n)); }
int moebius(u64 n) { return moebius(factorize(n)); }

u64 pow_mod(u64 b, u64 e, u64 m) {
    if (m == 0) throw parameter_error("pow_mod requires modulus >= 1");
    return pow_mod_u64(b, e, m);
}

u64 inv_mod(u64 a, u64 m) {
    if (m == 0) throw parameter_error("inv_mod requires modulus >= 1");
    if (m == 1) return 0;
    // extended Euclid on signed 128-bit to keep the Bezout coefficient exact
    __int128 r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 r2 = r0 - q * r1;
        __int128 s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw parameter_error("inv_mod requires gcd(a, m) = 1");
    __int128 inv = s0 % __int128(m);
    if (inv < 0) inv += m;
    return static_cast<u64>(inv);
}

Integer pow_int(u64 base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Integer gaussian_binomial(unsigned k, unsigned j, u64 p) {
    if (j > k) throw parameter_error("gaussian_binomial requires j <= k");
    if (p < 2) throw parameter_error("gaussian_binomial requires p >= 2");
    if (j > k - j) j = k - j; // symmetry [k,j] = [k,k-j]
    Integer r = 1;
    for (unsigned i = 1; i <= j; ++i) {
        r *= pow_int(p, k - j + i) - 1;
        Integer d = pow_int(p, i) - 1;
        // every prefix is the q-binomial [k-j+i choose i]_p, so this is exact
        if (!mpz_divisible_p(r.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("gaussian_binomial: inexact intermediate division");
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

SpfSieve::SpfSieve(u64 limit, u64 cap) : limit_(std::max<u64>(limit, 1)) {
    if (limit_ + 1 > cap)
        throw resource_error("spf_sieve limit " + std::to_string(limit_) +
                             " exceeds memory cap " + std::to_string(cap));
    spf_.assign(limit_ + 1, 0);
    for (u64 i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            for (u64 j = i * i; j <= limit_; j += i)
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

Factorization SpfSieve::factorize(u64 n) const {
    if (n == 0 || n > limit_) throw parameter_error("spf factorize requires 1 <= n <= limit");
    Factorization out;
    while (n > 1) {
        u64 p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

Rational make_ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw parameter_error("make_ratio requires a nonzero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_ratio(const Rational& q) {
    return q.get_str(); // "n/d", or "n" when the denominator is 1
}

namespace {

// Common fixed-point machinery: value = num/den (den > 0), emit
// `frac_digits` fractional digits. Rounding mode: 0 = truncate toward zero,
// 1 = round-half-even.
std::string fixed_point(const Rational& q, int frac_digits, int mode) {
    if (frac_digits < 0) throw parameter_error("decimal rendering requires frac_digits >= 0");
    Integer num = q.get_num(), den = q.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    Integer scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_digits);
    Integer shifted = num * scale, quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());
    if (mode == 1) {
        Integer twice = rem * 2;
        int cmp = mpz_cmp(twice.get_mpz_t(), den.get_mpz_t());
        if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot.get_mpz_t()))) quot += 1;
    }
    std::string digits = quot.get_str();
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, frac_digits + 1 - digits.size(), '0');
    std::string out;
    if (neg && quot != 0) out += '-';
    if (frac_digits == 0) {
        out += digits;
    } else {
        out += digits.substr(0, digits.size() - frac_digits);
        out += '.';
        out += digits.substr(digits.size() - frac_digits);
    }
    return out;
}

} // namespace

std::string decimal_string(const Rational& q, int frac_digits) {
    return fixed_point(q, frac_digits, 1);
}

std::string decimal_trunc_string(const Rational& q, int frac_digits) {
    return fixed_point(q, frac_digits, 0);
}

Rational to_rational(const mpf_class& v) {
    Rational q;
    mpq_set_f(q.get_mpq_t(), v.get_mpf_t());
    return q;
}

} // namespace cyc
