#pragma once
// Text front ends: the group mini-language used by `oracle`, the
// --params-range grammar used by `verify`, and exact "a/b" ratios.

#include <string>

#include "cyc/arith.hpp"
#include "cyc/groupspec.hpp"
#include "cyc/verify.hpp"

namespace cyc {

// Grammar (case-insensitive, spaces ignored):
//   C<n> | Z<n>   cyclic of order n
//   D<2m>         dihedral of order 2m (the literal is the group order)
//   Q<2^n>        generalized quaternion, literal a power of two >= 8
//   SD<2^n>       semidihedral, literal a power of two >= 16
//   M(p,n)        modular maximal-cyclic of order p^n
//   ZM(m,n,r)     split metacyclic <a,b | a^m, b^n, b a b^-1 = a^r>
//   E(p,k)        elementary abelian of order p^k
//   S3            alias for D6
// and `x`-separated products of the above, e.g. "S3xC2", "Q8 x Z2 x Z2".
// Throws parameter_error on anything else.
GroupSpec parse_group(const std::string& text);

// Comma-separated clauses bounding the family parameters:
//   var=lo..hi    closed range
//   var=v         single value
//   var<=hi       upper bound
// A bare name shares the next clause's bound, so "m,n<=30" bounds both m
// and n by 30.  Throws parameter_error on malformed input.
RangeMap parse_params_range(const std::string& text);

// "a/b" or "a" as an exact rational.  Throws parameter_error on junk or a
// zero denominator.
Rational parse_ratio(const std::string& text);

} // namespace cyc
