#pragma once

// Symbolic group description: family tag + integer parameters. The common
// currency between the closed-form side, the brute-force oracle, and the CLI.
// Factories validate eagerly and throw parameter_error naming the violated
// condition, so an invalid spec never exists.

#include <cstdint>
#include <string>
#include <vector>

#include "cyc/errors.hpp"

namespace cyc {

class GroupSpec {
  public:
    enum class Kind {
        Cyclic,               // Z_n
        ElementaryAbelian,    // Z_p^k
        AbelianProduct,       // Z_{n_1} x ... x Z_{n_k}
        Dihedral,             // D_{2m}, order 2m, all m >= 1
        GeneralizedQuaternion,// Q_{2^n}, n >= 3
        Semidihedral,         // S_{2^n}, n >= 4
        ModularM,             // M(p^n): p odd, n >= 3, or p = 2, n >= 4
        ZM,                   // <a,b | a^m = b^n = 1, b^-1 a b = a^r>
        Product,              // direct product of sub-specs
    };

    static GroupSpec cyclic(std::uint64_t n);
    static GroupSpec elementary_abelian(std::uint64_t p, unsigned k);
    static GroupSpec abelian(std::vector<std::uint64_t> ns);
    static GroupSpec dihedral(std::uint64_t m);
    static GroupSpec generalized_quaternion(unsigned n);
    static GroupSpec semidihedral(unsigned n);
    static GroupSpec modular_m(std::uint64_t p, unsigned n);
    static GroupSpec zm(std::uint64_t m, std::uint64_t n, std::uint64_t r);
    static GroupSpec product(std::vector<GroupSpec> factors);

    Kind kind() const { return kind_; }
    const std::vector<std::uint64_t>& params() const { return params_; }
    const std::vector<GroupSpec>& factors() const { return factors_; }

    std::uint64_t order() const;

    // Display name in the CLI mini-language ("Z6", "D8", "ZM(7,3,2)", ...).
    std::string name() const;

    // Family tag for output records ("cyclic", "dihedral", "product", ...).
    std::string family() const;

    // Parameters as decimal strings; for Product, the component names.
    std::vector<std::string> param_strings() const;

    bool is_abelian() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  private:
    GroupSpec(Kind kind, std::vector<std::uint64_t> params, std::vector<GroupSpec> factors = {})
        : kind_(kind), params_(std::move(params)), factors_(std::move(factors)) {}

    Kind kind_;
    std::vector<std::uint64_t> params_;
    std::vector<GroupSpec> factors_;
};

} // namespace cyc
