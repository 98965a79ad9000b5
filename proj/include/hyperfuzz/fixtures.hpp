#pragma once

#include "hyperfuzz/ifs.hpp"
#include "hyperfuzz/structures.hpp"

namespace hyperfuzz::fixtures {

// Krasner hyperfield on {0,1}: 0#x = x#0 = {x}, 1#1 = {0,1}, ordinary
// multiplication.  The smallest genuinely multivalued hyperfield.
Hyperfield krasner();

// Singleton lift of the prime field GF(p), p in {2,3,5}.
Hyperfield gf(int p);

// A field viewed as a hypervector space over itself (a*x = {a.x}).
HypervectorSpace field_over_itself(const Hyperfield& f);

// Krasner hyperfield as a hypervector space over itself.
HypervectorSpace k_over_k();

// GF(2)^2 with componentwise addition over GF(2); elements 00, 01, 10, 11.
HypervectorSpace gf2_plane();

// Worked field overlay over the Krasner carrier: mu=(1, 1/2), nu=(0, 1/4).
Ifs worked_field_overlay();

// Worked vector overlay over k_over_k: mu=(1/2, 1/3), nu=(1/4, 1/2).
Ifs worked_vector_overlay();

// Same values with mu swapped: mu=(1/3, 1/2); fails DEF3.3.i at x=y=1.
Ifs swapped_vector_overlay();

}  // namespace hyperfuzz::fixtures
