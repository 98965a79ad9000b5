#pragma once

#include <cstdint>
#include <vector>

#include "hyperfuzz/family.hpp"
#include "hyperfuzz/ifs.hpp"
#include "hyperfuzz/report.hpp"
#include "hyperfuzz/structures.hpp"

namespace hyperfuzz {

// Total map between the carriers of two spaces over one scalar hyperfield.
// Linearity is a separate audit (check_linear); the map itself only promises
// totality.
struct LinearMap {
    const HypervectorSpace* source = nullptr;
    const HypervectorSpace* target = nullptr;
    std::vector<int> map;  // indexed by source vectors, values target vectors

    int at(int x) const { return map.at(static_cast<std::size_t>(x)); }
};

// Structural equality of scalar fields / spaces (same names and tables).
bool same_field(const Hyperfield& a, const Hyperfield& b);
bool same_space(const HypervectorSpace& a, const HypervectorSpace& b);

// Linearity audit: T(x#y) within T(x)#'T(y) as DEF4.1.i, T(a*x) within
// a*'T(x) as DEF4.1.ii, T(theta)=theta' as DEF4.1.iii.
Report check_linear(const LinearMap& t, int cap = 100);

// Preimage overlay: mu(x) = muB(T(x)), nu(x) = nuB(T(x)).
Ifs preimage_ifs(const LinearMap& t, const Ifs& b);

// Composition T(S(x)); S.target and T.source must agree structurally.
LinearMap compose(const LinearMap& t, const LinearMap& s);

// Preimage-closure verdict: audits preimage_ifs(T, B) against the source
// space.  Preconditions (T linear, A an IF hyperfield, (W,A,B) an IF
// hypervector space) are reported as PreconditionFailed.
TheoremVerdict theorem_4_2_oracle(const LinearMap& t, const Ifs& a, const Ifs& b);

// All linear maps from V to W in lexicographic table order.  Throws
// std::length_error if |W|^|V| exceeds the bound.
std::vector<LinearMap> enumerate_linear_maps(const HypervectorSpace& v, const HypervectorSpace& w,
                                             std::uint64_t bound = 1000000);

}  // namespace hyperfuzz
