#include "cyc/cayley.hpp"

#include <cstdlib>
#include <random>

#include "cyc/arith.hpp"

namespace cyc {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

std::string power_name(const std::string& gen, u64 e) {
    if (e == 0) return "";
    if (e == 1) return gen;
    return gen + "^" + std::to_string(e);
}

// Name for a two-generator normal form x^i y^j ("e" when both are 0).
std::string two_gen_name(const std::string& x, const std::string& y, u64 i, u64 j) {
    std::string s = power_name(x, i);
    std::string t = power_name(y, j);
    if (s.empty() && t.empty()) return "e";
    if (s.empty()) return t;
    if (t.empty()) return s;
    return s + " " + t;
}

CayleyGroup build_cyclic(u64 n) {
    CayleyGroup g;
    g.order = static_cast<u32>(n);
    g.table.resize(n * n);
    for (u64 i = 0; i < n; ++i)
        for (u64 j = 0; j < n; ++j) g.table[i * n + j] = static_cast<u32>((i + j) % n);
    g.element_names.reserve(n);
    for (u64 i = 0; i < n; ++i) g.element_names.push_back(i == 0 ? "e" : power_name("g", i));
    return g;
}

// Groups with normal form x^i y^j (0 <= i < m, 0 <= j < n) where
//   y x y^-1 = x^t   and   y^n = x^w,
// so (x^i y^j)(x^i' y^j') = x^(i + i' t^j + w*((j+j') div n)) y^((j+j') mod n).
// Covers dihedral (t = -1, w = 0), semidihedral (t = 2^(k-2)-1, w = 0),
// modular (t = p^(k-2)+1, w = 0), generalized quaternion (t = -1,
// w = 2^(k-2)) and ZM groups (t = r^-1 mod m, w = 0).
CayleyGroup build_two_gen(u64 m, u64 n, u64 t, u64 w, const std::string& xg,
                          const std::string& yg) {
    u64 order = m * n;
    CayleyGroup g;
    g.order = static_cast<u32>(order);
    g.table.resize(order * order);
    std::vector<u64> tpow(n);
    tpow[0] = 1 % m;
    for (u64 j = 1; j < n; ++j) tpow[j] = static_cast<u64>((static_cast<unsigned __int128>(tpow[j - 1]) * t) % m);
    for (u64 j = 0; j < n; ++j) {
        for (u64 i = 0; i < m; ++i) {
            u64 a = j * m + i;
            for (u64 j2 = 0; j2 < n; ++j2) {
                for (u64 i2 = 0; i2 < m; ++i2) {
                    u64 jj = j + j2;
                    u64 ii = (i + i2 * tpow[j] % m + w * (jj / n)) % m;
                    g.table[a * order + (j2 * m + i2)] = static_cast<u32>((jj % n) * m + ii);
                }
            }
        }
    }
    // names laid out i-fastest, matching index j*m + i
    g.element_names.reserve(order);
    for (u64 j = 0; j < n; ++j)
        for (u64 i = 0; i < m; ++i) g.element_names.push_back(two_gen_name(xg, yg, i, j));
    return g;
}

CayleyGroup build_product(const std::vector<CayleyGroup>& parts) {
    u64 order = 1;
    for (const auto& p : parts) order *= p.order;
    CayleyGroup g;
    g.order = static_cast<u32>(order);
    g.table.resize(order * order);
    std::size_t k = parts.size();
    std::vector<u64> stride(k);
    u64 s = 1;
    for (std::size_t c = 0; c < k; ++c) {
        stride[c] = s;
        s *= parts[c].order;
    }
    std::vector<u32> ca(k), cb(k);
    for (u64 a = 0; a < order; ++a) {
        u64 ra = a;
        for (std::size_t c = 0; c < k; ++c) {
            ca[c] = static_cast<u32>(ra % parts[c].order);
            ra /= parts[c].order;
        }
        for (u64 b = 0; b < order; ++b) {
            u64 rb = b;
            u64 prod = 0;
            for (std::size_t c = 0; c < k; ++c) {
                cb[c] = static_cast<u32>(rb % parts[c].order);
                rb /= parts[c].order;
                prod += stride[c] * parts[c].mul(ca[c], cb[c]);
            }
            g.table[a * order + b] = static_cast<u32>(prod);
        }
    }
    g.element_names.reserve(order);
    for (u64 a = 0; a < order; ++a) {
        u64 ra = a;
        std::string nm = "(";
        for (std::size_t c = 0; c < k; ++c) {
            if (c) nm += ",";
            nm += parts[c].element_names[ra % parts[c].order];
            ra /= parts[c].order;
        }
        nm += ")";
        g.element_names.push_back(nm);
    }
    return g;
}

CayleyGroup build_table(const GroupSpec& spec) {
    const auto& p = spec.params();
    switch (spec.kind()) {
    case GroupSpec::Kind::Cyclic: return build_cyclic(p[0]);
    case GroupSpec::Kind::ElementaryAbelian: {
        std::vector<CayleyGroup> parts(p[1], build_cyclic(p[0]));
        return build_product(parts);
    }
    case GroupSpec::Kind::AbelianProduct: {
        std::vector<CayleyGroup> parts;
        for (u64 n : p) parts.push_back(build_cyclic(n));
        return build_product(parts);
    }
    case GroupSpec::Kind::Dihedral:
        // r^m = s^2 = 1, s r s^-1 = r^-1
        return build_two_gen(p[0], 2, p[0] - 1, 0, "r", "s");
    case GroupSpec::Kind::GeneralizedQuaternion: {
        // x^(2^(n-1)) = 1, y^2 = x^(2^(n-2)), y x y^-1 = x^-1
        u64 half = u64(1) << (p[0] - 1);
        return build_two_gen(half, 2, half - 1, half / 2, "x", "y");
    }
    case GroupSpec::Kind::Semidihedral: {
        // x^(2^(n-1)) = y^2 = 1, y x y^-1 = x^(2^(n-2)-1)
        u64 half = u64(1) << (p[0] - 1);
        return build_two_gen(half, 2, half / 2 - 1, 0, "x", "y");
    }
    case GroupSpec::Kind::ModularM: {
        // x^(p^(n-1)) = y^p = 1, y x y^-1 = x^(p^(n-2)+1)
        u64 m = 1;
        for (u64 i = 0; i + 1 < p[1]; ++i) m *= p[0];
        return build_two_gen(m, p[0], m / p[0] + 1, 0, "x", "y");
    }
    case GroupSpec::Kind::ZM: {
        // a^m = b^n = 1, b^-1 a b = a^r; normal form needs b a b^-1 = a^t
        // with t = r^-1 (mod m)
        u64 m = p[0], r = p[2];
        u64 t = m == 1 ? 0 : inv_mod(r, m);
        return build_two_gen(m, p[1], t, 0, "a", "b");
    }
    case GroupSpec::Kind::Product: {
        std::vector<CayleyGroup> parts;
        for (const auto& f : spec.factors()) parts.push_back(build_table(f));
        return build_product(parts);
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace

OracleLimits OracleLimits::from_env() {
    OracleLimits lim;
    if (const char* env = std::getenv("CYC_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) lim.max_order = v;
    }
    return lim;
}

CayleyGroup build_group(const GroupSpec& spec, const OracleLimits& limits) {
    u64 order = spec.order();
    if (order > limits.max_order)
        throw resource_error("group order " + std::to_string(order) + " exceeds cap " +
                             std::to_string(limits.max_order));
    if (order > 20000)
        throw resource_error("group order " + std::to_string(order) +
                             " is above the explicit-table maximum (20000)");
    CayleyGroup g = build_table(spec);
    g.name = spec.name();

    // identity: the unique e with e*x = x for all x
    bool found = false;
    for (u32 e = 0; e < g.order && !found; ++e) {
        bool ok = true;
        for (u32 x = 0; x < g.order && ok; ++x) ok = g.mul(e, x) == x;
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw std::logic_error("constructed table has no identity");

    g.inverse.assign(g.order, 0);
    for (u32 a = 0; a < g.order; ++a) {
        bool got = false;
        for (u32 b = 0; b < g.order; ++b) {
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inverse[a] = b;
                got = true;
                break;
            }
        }
        if (!got) throw std::logic_error("constructed table has a non-invertible element");
    }

    g.abelian = true;
    for (u32 a = 0; a < g.order && g.abelian; ++a)
        for (u32 b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) {
                g.abelian = false;
                break;
            }

    verify_multiplication_table(g);
    return g;
}

void verify_multiplication_table(const CayleyGroup& g) {
    const u32 n = g.order;
    if (n == 0 || g.table.size() != static_cast<std::size_t>(n) * n)
        throw std::logic_error("multiplication table has the wrong size");

    std::vector<bool> seen(n);
    for (u32 a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), false);
        for (u32 b = 0; b < n; ++b) {
            u32 v = g.mul(a, b);
            if (v >= n || seen[v]) throw std::logic_error("row is not a permutation");
            seen[v] = true;
        }
    }
    for (u32 b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), false);
        for (u32 a = 0; a < n; ++a) {
            u32 v = g.mul(a, b);
            if (seen[v]) throw std::logic_error("column is not a permutation");
            seen[v] = true;
        }
    }
    for (u32 x = 0; x < n; ++x) {
        if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x)
            throw std::logic_error("identity law fails");
        if (g.mul(x, g.inverse[x]) != g.identity || g.mul(g.inverse[x], x) != g.identity)
            throw std::logic_error("inverse law fails");
    }

    auto check_assoc = [&](u32 a, u32 b, u32 c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw std::logic_error("associativity fails");
    };
    if (n <= 200) {
        for (u32 a = 0; a < n; ++a)
            for (u32 b = 0; b < n; ++b)
                for (u32 c = 0; c < n; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937_64 rng(0x5eedcafeULL);
        for (int i = 0; i < 100'000; ++i)
            check_assoc(rng() % n, rng() % n, rng() % n);
    }
}

} // namespace cyc
