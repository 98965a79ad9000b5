#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperfuzz/ifcheck.hpp"
#include "hyperfuzz/ifs.hpp"
#include "hyperfuzz/structures.hpp"

namespace hyperfuzz {

enum class FamilyOp { Intersect, Union };

// nu-combinator convention.  Paper combines nu with the same lattice
// operation as mu (intersect: min/min, union: max/max); Standard dualizes nu
// (intersect: min/max, union: max/min).
enum class Convention { Paper, Standard };

const char* to_string(FamilyOp op);
const char* to_string(Convention c);

// Nonempty family of vector overlays over one space and one field overlay.
struct OverlayFamily {
    const HypervectorSpace* space = nullptr;
    Ifs field_overlay;
    std::vector<Ifs> members;
};

// Pointwise combination result.  `values` always holds the raw combined
// table; `ifs` engages only when mu+nu <= 1 everywhere, otherwise
// `constraint` carries DEF2.9 violations naming the offending elements.
struct CombineResult {
    OverlayValues values;
    std::optional<Ifs> ifs;
    Report constraint{100};
};

CombineResult combine_values(const Carrier& carrier, const std::vector<const Ifs*>& members,
                             FamilyOp op, Convention conv);
CombineResult combine_family(const OverlayFamily& family, FamilyOp op, Convention conv);

// Instance-level closure verdict.  Verified carries the number of axiom
// instances evaluated on the combined overlay; Counterexample carries the
// combined overlay values and the violations (DEF2.9 when the combination is
// not even an IFS, DEF3.3.* otherwise).
struct TheoremVerdict {
    enum class Status { Verified, Counterexample, PreconditionFailed };
    Status status = Status::PreconditionFailed;
    long instances = 0;
    OverlayValues counterexample;
    Report failure{100};
    FamilyOp op = FamilyOp::Intersect;
    Convention convention = Convention::Paper;

    bool verified() const { return status == Status::Verified; }
};

// Combines the family and re-audits the result with check_if_hvs.
// Preconditions (field overlay an IF hyperfield, every member an IF
// hypervector space) are checked first and reported as PreconditionFailed.
TheoremVerdict closure_oracle(const OverlayFamily& family, FamilyOp op, Convention conv);

// Monotone shift: mu' = max(0, mu - c), nu' = min(1, nu + c).  Preserves the
// pure hyperaddition conditions of a valid overlay (monotone transforms
// commute with min/max) but not necessarily the mixed scalar conditions,
// whose field-side degrees are not shifted.  Chain families that must stay
// valid are built by repeated standard intersection instead.
Ifs shift_overlay(const Ifs& b, const Degree& c);

}  // namespace hyperfuzz
