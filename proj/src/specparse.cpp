#include "cyc/specparse.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "cyc/errors.hpp"

namespace cyc {

namespace {

using u64 = std::uint64_t;

u64 parse_u64(const std::string& text, const std::string& what) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
        throw parameter_error(what + ": expected a number, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw parameter_error(what + ": number out of range: '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string::npos) return parts;
        start = pos + 1;
    }
}

// "(a,b,c)" -> {a, b, c}, requiring exactly `arity` entries.
std::vector<u64> parse_args(const std::string& atom, std::size_t open, std::size_t arity) {
    if (atom.back() != ')')
        throw parameter_error("group atom '" + atom + "': missing closing parenthesis");
    std::vector<std::string> raw = split(atom.substr(open + 1, atom.size() - open - 2), ',');
    if (raw.size() != arity)
        throw parameter_error("group atom '" + atom + "': expected " + std::to_string(arity) +
                              " arguments");
    std::vector<u64> args;
    for (const std::string& part : raw) args.push_back(parse_u64(part, "group atom '" + atom + "'"));
    return args;
}

// Exponent n for a literal 2^n >= least, else error.
unsigned log2_exact(u64 value, u64 least, const std::string& atom) {
    if (value < least || !std::has_single_bit(value))
        throw parameter_error("group atom '" + atom + "': order must be a power of two >= " +
                              std::to_string(least));
    return static_cast<unsigned>(std::countr_zero(value));
}

GroupSpec parse_atom(const std::string& atom) {
    if (atom.empty()) throw parameter_error("empty group atom");
    if (atom == "S3") return GroupSpec::dihedral(3);
    if (atom.starts_with("ZM(")) {
        std::vector<u64> a = parse_args(atom, 2, 3);
        return GroupSpec::zm(a[0], a[1], a[2]);
    }
    if (atom.starts_with("M(")) {
        std::vector<u64> a = parse_args(atom, 1, 2);
        return GroupSpec::modular_m(a[0], static_cast<unsigned>(a[1]));
    }
    if (atom.starts_with("E(")) {
        std::vector<u64> a = parse_args(atom, 1, 2);
        return GroupSpec::elementary_abelian(a[0], static_cast<unsigned>(a[1]));
    }
    if (atom.starts_with("SD"))
        return GroupSpec::semidihedral(log2_exact(parse_u64(atom.substr(2), atom), 16, atom));
    if (atom.starts_with("Q"))
        return GroupSpec::generalized_quaternion(log2_exact(parse_u64(atom.substr(1), atom), 8, atom));
    if (atom.starts_with("D")) {
        u64 order = parse_u64(atom.substr(1), atom);
        if (order % 2 != 0)
            throw parameter_error("group atom '" + atom + "': dihedral order must be even");
        return GroupSpec::dihedral(order / 2);
    }
    if (atom.starts_with("C") || atom.starts_with("Z")) {
        std::string body = atom.substr(1);
        if (std::size_t caret = body.find('^'); caret != std::string::npos) {
            u64 p = parse_u64(body.substr(0, caret), atom);
            u64 k = parse_u64(body.substr(caret + 1), atom);
            return GroupSpec::elementary_abelian(p, static_cast<unsigned>(k));
        }
        return GroupSpec::cyclic(parse_u64(body, atom));
    }
    throw parameter_error("unrecognized group atom '" + atom + "'");
}

} // namespace

GroupSpec parse_group(const std::string& text) {
    std::string clean;
    for (unsigned char c : text)
        if (!std::isspace(c)) clean.push_back(static_cast<char>(std::toupper(c)));
    if (clean.empty()) throw parameter_error("empty group spec");

    std::vector<GroupSpec> factors;
    for (const std::string& atom : split(clean, 'X')) factors.push_back(parse_atom(atom));
    if (factors.size() == 1) return factors.front();
    return GroupSpec::product(std::move(factors));
}

RangeMap parse_params_range(const std::string& text) {
    std::string clean;
    for (unsigned char c : text)
        if (!std::isspace(c)) clean.push_back(static_cast<char>(c));
    if (clean.empty()) throw parameter_error("empty --params-range");

    RangeMap ranges;
    std::vector<std::string> pending; // bare names awaiting the next bound
    auto bind = [&](const std::string& var, ParamRange range) {
        if (var.empty() || !std::isalpha(static_cast<unsigned char>(var[0])))
            throw parameter_error("--params-range: bad variable name '" + var + "'");
        if (!ranges.emplace(var, range).second)
            throw parameter_error("--params-range: variable '" + var + "' bounded twice");
    };
    for (const std::string& clause : split(clean, ',')) {
        std::size_t le = clause.find("<=");
        std::size_t eq = clause.find('=');
        ParamRange range;
        std::string var;
        if (le != std::string::npos) {
            var = clause.substr(0, le);
            range = {0, parse_u64(clause.substr(le + 2), "--params-range")};
        } else if (eq != std::string::npos) {
            var = clause.substr(0, eq);
            std::string rest = clause.substr(eq + 1);
            std::size_t dots = rest.find("..");
            if (dots == std::string::npos) {
                u64 v = parse_u64(rest, "--params-range");
                range = {v, v};
            } else {
                range = {parse_u64(rest.substr(0, dots), "--params-range"),
                         parse_u64(rest.substr(dots + 2), "--params-range")};
            }
            if (range.lo > range.hi)
                throw parameter_error("--params-range: empty range in '" + clause + "'");
        } else {
            pending.push_back(clause); // bare name, shares the next bound
            continue;
        }
        bind(var, range);
        for (const std::string& shared : pending) bind(shared, range);
        pending.clear();
    }
    if (!pending.empty())
        throw parameter_error("--params-range: variable '" + pending.front() + "' has no bound");
    return ranges;
}

Rational parse_ratio(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(Integer(static_cast<unsigned long>(parse_u64(text, "ratio"))));
    Integer num(static_cast<unsigned long>(parse_u64(text.substr(0, slash), "ratio")));
    Integer den(static_cast<unsigned long>(parse_u64(text.substr(slash + 1), "ratio")));
    if (den == 0) throw parameter_error("ratio: zero denominator in '" + text + "'");
    return make_ratio(num, den);
}

} // namespace cyc
