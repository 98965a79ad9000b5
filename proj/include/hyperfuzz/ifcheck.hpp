#pragma once

#include "hyperfuzz/ifs.hpp"
#include "hyperfuzz/report.hpp"
#include "hyperfuzz/structures.hpp"

namespace hyperfuzz {

// Eight-condition audit of a field overlay A against a validated hyperfield:
// DEF3.1.i through DEF3.1.viii.
Report check_if_hyperfield(const Hyperfield& f, const Ifs& a, int cap = 100);

// Derived inequalities for a passing field overlay: RES3.2.i through vi.
// (ii) and (v) restrict to nonzero elements.
Report check_result_3_2(const Hyperfield& f, const Ifs& a, int cap = 100);

// Eight-condition audit of a vector overlay B against a validated space and a
// field overlay A: DEF3.3.i through DEF3.3.viii.  A is assumed to have passed
// check_if_hyperfield; B is audited here.
Report check_if_hvs(const HypervectorSpace& v, const Ifs& a, const Ifs& b, int cap = 100);

// Derived inequalities for a passing vector overlay: RES3.4.i through vi.
Report check_result_3_4(const HypervectorSpace& v, const Ifs& a, const Ifs& b, int cap = 100);

// Four-condition characterization audit: THM3.5.i through iv, with the
// composite set a*x # b*y computed by union-over-pairs extension.
Report check_characterization(const HypervectorSpace& v, const Ifs& a, const Ifs& b, int cap = 100);

// Agreement record between the eight-condition and four-condition audits.
// agree == (eight passed <=> four passed); a false value is a refutation of
// the characterization and carries both reports.
struct EquivalenceRecord {
    bool eight = false;
    bool four = false;
    bool agree = false;
    Report eight_report{0};
    Report four_report{0};
};

// Runs both audits.  Precondition: (F, A) passes check_if_hyperfield; throws
// std::invalid_argument otherwise.
EquivalenceRecord equivalence_oracle(const HypervectorSpace& v, const Ifs& a, const Ifs& b,
                                     int cap = 100);

}  // namespace hyperfuzz
