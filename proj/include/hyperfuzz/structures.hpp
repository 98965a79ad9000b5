#pragma once

#include <optional>
#include <vector>

#include "hyperfuzz/carrier.hpp"
#include "hyperfuzz/hyperops.hpp"
#include "hyperfuzz/report.hpp"

namespace hyperfuzz {

// Validated hypergroup: multivalued addition with set associativity, a zero
// whose negatives are unique, and reversibility.  zero/neg are derived by the
// checker, never trusted from input.
struct Hypergroup {
    Carrier carrier;
    HyperOp add;
    int zero = 0;
    std::vector<int> neg;

    bool commutative() const {
        for (int a = 0; a < add.size(); ++a)
            for (int b = a + 1; b < add.size(); ++b)
                if (add.at(a, b) != add.at(b, a)) return false;
        return true;
    }
};

struct HypergroupResult {
    Report report;
    std::optional<Hypergroup> group;  // engaged iff report.ok()
};

// Validated hyperfield on top of a commutative hypergroup: single-valued
// commutative associative multiplication, two-sided distributivity over the
// hyperaddition, absorbing zero, identity, inverses for nonzero elements.
struct Hyperfield {
    Carrier carrier;
    HyperOp add;
    BinOp mul;
    int zero = 0;
    int one = 0;
    std::vector<int> neg;
    std::vector<int> inv;  // inv[zero] == -1

    Hypergroup additive_group() const { return Hypergroup{carrier, add, zero, neg}; }
};

struct HyperfieldResult {
    Report report;
    std::optional<Hyperfield> field;
};

// Validated hypervector space: commutative vector hypergroup plus a
// multivalued scalar action satisfying the five compatibility conditions.
struct HypervectorSpace {
    Hyperfield field;
    Carrier vcarrier;
    HyperOp vadd;
    ScalarAction action;
    int theta = 0;
    std::vector<int> vneg;

    Hypergroup vector_group() const { return Hypergroup{vcarrier, vadd, theta, vneg}; }
};

struct HvsResult {
    Report report;
    std::optional<HypervectorSpace> space;
};

// Axiom audit of (X, #): associativity DEF2.3.i, zero and unique negatives
// DEF2.3.ii, reversibility DEF2.3.iii.  Derives zero and the negation map.
HypergroupResult check_hypergroup(const Carrier& carrier, const HyperOp& add, int cap = 100);

// Derived facts for a validated hypergroup: PROP2.4.i always, PROP2.4.ii and
// PROP2.4.iii only when the addition is commutative (tested internally).
Report check_prop_2_4(const Hypergroup& g, int cap = 100);

// Hyperring audit: commutative hypergroup (commutativity as DEF2.5.i),
// multiplication associativity DEF2.5.ii, distributivity DEF2.5.iii/iv,
// absorbing zero DEF2.5.v.  `zero` is the declared zero; a mismatch with the
// derived zero is reported as DECL.zero.
Report check_hyperring(const Carrier& carrier, const HyperOp& add, const BinOp& mul, int zero,
                       int cap = 100);

// Hyperfield audit: hyperring axioms plus identity existence DEF2.6.ii,
// nonzero inverses DEF2.6.iii, multiplicative commutativity DEF2.6.iv.
// Derives zero, one, neg and inv.
HyperfieldResult check_hyperfield(const Carrier& carrier, const HyperOp& add, const BinOp& mul,
                                  int cap = 100);

// Hypervector space audit: the vector addition must be a commutative
// hypergroup (commutativity as DEF2.7.comm) and the action must satisfy
// DEF2.7.i through DEF2.7.v.  The scalar field is taken as validated.
HvsResult check_hypervector_space(const Hyperfield& field, const Carrier& vcarrier,
                                  const HyperOp& vadd, const ScalarAction& action, int cap = 100);

// All zero candidates of (X, #): elements z such that every a has a unique b
// with z in a#b and z in b#a.
std::vector<int> zero_candidates(const HyperOp& add);

}  // namespace hyperfuzz
