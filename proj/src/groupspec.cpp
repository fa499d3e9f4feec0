#include "cyc/groupspec.hpp"

#include <numeric>

#include "cyc/arith.hpp"

namespace cyc {

namespace {

using u64 = std::uint64_t;

u64 checked_mul(u64 a, u64 b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > static_cast<unsigned __int128>(UINT64_MAX))
        throw parameter_error("group order exceeds 64 bits");
    return static_cast<u64>(p);
}

u64 checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

} // namespace

GroupSpec GroupSpec::cyclic(u64 n) {
    if (n == 0) throw parameter_error("cyclic group requires n >= 1");
    return GroupSpec(Kind::Cyclic, {n});
}

GroupSpec GroupSpec::elementary_abelian(u64 p, unsigned k) {
    if (!is_prime(p)) throw parameter_error("elementary abelian group requires p prime");
    if (k == 0) throw parameter_error("elementary abelian group requires k >= 1");
    checked_pow(p, k);
    return GroupSpec(Kind::ElementaryAbelian, {p, k});
}

GroupSpec GroupSpec::abelian(std::vector<u64> ns) {
    if (ns.empty()) throw parameter_error("abelian product requires at least one factor");
    u64 order = 1;
    for (u64 n : ns) {
        if (n == 0) throw parameter_error("abelian product requires every n_i >= 1");
        order = checked_mul(order, n);
    }
    return GroupSpec(Kind::AbelianProduct, std::move(ns));
}

GroupSpec GroupSpec::dihedral(u64 m) {
    if (m == 0) throw parameter_error("dihedral group requires m >= 1");
    checked_mul(2, m);
    return GroupSpec(Kind::Dihedral, {m});
}

GroupSpec GroupSpec::generalized_quaternion(unsigned n) {
    if (n < 3) throw parameter_error("generalized quaternion group requires n >= 3");
    if (n >= 64) throw parameter_error("group order exceeds 64 bits");
    return GroupSpec(Kind::GeneralizedQuaternion, {n});
}

GroupSpec GroupSpec::semidihedral(unsigned n) {
    if (n < 4) throw parameter_error("semidihedral group requires n >= 4");
    if (n >= 64) throw parameter_error("group order exceeds 64 bits");
    return GroupSpec(Kind::Semidihedral, {n});
}

GroupSpec GroupSpec::modular_m(u64 p, unsigned n) {
    if (!is_prime(p)) throw parameter_error("modular group M(p^n) requires p prime");
    if (p == 2 ? n < 4 : n < 3)
        throw parameter_error("modular group M(p^n) requires n >= 3 for odd p, n >= 4 for p = 2");
    checked_pow(p, n);
    return GroupSpec(Kind::ModularM, {p, n});
}

GroupSpec GroupSpec::zm(u64 m, u64 n, u64 r) {
    if (m == 0 || n == 0) throw parameter_error("ZM group requires m >= 1 and n >= 1");
    checked_mul(m, n);
    r = m == 1 ? 0 : r % m;
    if (std::gcd(m, n) != 1) throw parameter_error("ZM group requires gcd(m, n) = 1");
    // gcd(m, r-1) computed mod m so r = 0 (only possible when m = 1) is safe
    if (std::gcd(m, (r + m - 1) % m) != 1)
        throw parameter_error("ZM group requires gcd(m, r - 1) = 1");
    if (pow_mod(r, n, m) != 1 % m)
        throw parameter_error("ZM group requires r^n = 1 (mod m)");
    return GroupSpec(Kind::ZM, {m, n, r});
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw parameter_error("direct product requires at least one factor");
    u64 order = 1;
    for (const auto& f : factors) order = checked_mul(order, f.order());
    if (factors.size() == 1) return factors.front();
    return GroupSpec(Kind::Product, {}, std::move(factors));
}

std::uint64_t GroupSpec::order() const {
    switch (kind_) {
    case Kind::Cyclic: return params_[0];
    case Kind::ElementaryAbelian: return checked_pow(params_[0], static_cast<unsigned>(params_[1]));
    case Kind::AbelianProduct: {
        u64 o = 1;
        for (u64 n : params_) o = checked_mul(o, n);
        return o;
    }
    case Kind::Dihedral: return checked_mul(2, params_[0]);
    case Kind::GeneralizedQuaternion:
    case Kind::Semidihedral: return u64(1) << params_[0];
    case Kind::ModularM: return checked_pow(params_[0], static_cast<unsigned>(params_[1]));
    case Kind::ZM: return checked_mul(params_[0], params_[1]);
    case Kind::Product: {
        u64 o = 1;
        for (const auto& f : factors_) o = checked_mul(o, f.order());
        return o;
    }
    }
    throw std::logic_error("unreachable");
}

std::string GroupSpec::name() const {
    switch (kind_) {
    case Kind::Cyclic: return "Z" + std::to_string(params_[0]);
    case Kind::ElementaryAbelian:
        return "Z" + std::to_string(params_[0]) + "^" + std::to_string(params_[1]);
    case Kind::AbelianProduct: {
        std::string s;
        for (std::size_t i = 0; i < params_.size(); ++i) {
            if (i) s += "x";
            s += "Z" + std::to_string(params_[i]);
        }
        return s;
    }
    case Kind::Dihedral: return "D" + std::to_string(2 * params_[0]);
    case Kind::GeneralizedQuaternion: return "Q" + std::to_string(u64(1) << params_[0]);
    case Kind::Semidihedral: return "SD" + std::to_string(u64(1) << params_[0]);
    case Kind::ModularM:
        return "M(" + std::to_string(params_[0]) + "," + std::to_string(params_[1]) + ")";
    case Kind::ZM:
        return "ZM(" + std::to_string(params_[0]) + "," + std::to_string(params_[1]) + "," +
               std::to_string(params_[2]) + ")";
    case Kind::Product: {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "x";
            s += factors_[i].name();
        }
        return s;
    }
    }
    throw std::logic_error("unreachable");
}

std::string GroupSpec::family() const {
    switch (kind_) {
    case Kind::Cyclic: return "cyclic";
    case Kind::ElementaryAbelian: return "elem-abelian";
    case Kind::AbelianProduct: return "abelian";
    case Kind::Dihedral: return "dihedral";
    case Kind::GeneralizedQuaternion: return "quaternion2n";
    case Kind::Semidihedral: return "semidihedral2n";
    case Kind::ModularM: return "modM";
    case Kind::ZM: return "zm";
    case Kind::Product: return "product";
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> GroupSpec::param_strings() const {
    std::vector<std::string> out;
    if (kind_ == Kind::Product) {
        for (const auto& f : factors_) out.push_back(f.name());
    } else {
        for (u64 p : params_) out.push_back(std::to_string(p));
    }
    return out;
}

bool GroupSpec::is_abelian() const {
    switch (kind_) {
    case Kind::Cyclic:
    case Kind::ElementaryAbelian:
    case Kind::AbelianProduct: return true;
    case Kind::Dihedral: return params_[0] <= 2;
    case Kind::GeneralizedQuaternion:
    case Kind::Semidihedral:
    case Kind::ModularM: return false;
    case Kind::ZM: return params_[2] % params_[0] == 1 % params_[0];
    case Kind::Product: {
        for (const auto& f : factors_)
            if (!f.is_abelian()) return false;
        return true;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace cyc
