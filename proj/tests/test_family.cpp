#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hyperfuzz/family.hpp"
#include "hyperfuzz/fixtures.hpp"
#include "hyperfuzz/ifcheck.hpp"
#include "hyperfuzz/modelfind.hpp"

using namespace hyperfuzz;

namespace {

Degree d(long long n, long long m) { return Degree(n, m); }

CombineResult combine2(const Carrier& c, const Ifs& a, const Ifs& b, FamilyOp op, Convention cv) {
    return combine_values(c, {&a, &b}, op, cv);
}

}  // namespace

TEST_CASE("pointwise combination of constants, all four op/convention pairs") {
    const Carrier c({"0", "1"});
    const Ifs o1 = Ifs::constant(2, d(1, 2), d(1, 4));
    const Ifs o2 = Ifs::constant(2, d(1, 3), d(1, 3));

    auto values = [&](FamilyOp op, Convention cv) {
        const CombineResult r = combine2(c, o1, o2, op, cv);
        REQUIRE(r.ifs.has_value());
        return std::pair{r.ifs->mu(0), r.ifs->nu(0)};
    };

    CHECK(values(FamilyOp::Intersect, Convention::Paper) == std::pair{d(1, 3), d(1, 4)});
    CHECK(values(FamilyOp::Intersect, Convention::Standard) == std::pair{d(1, 3), d(1, 3)});
    CHECK(values(FamilyOp::Union, Convention::Paper) == std::pair{d(1, 2), d(1, 3)});
    CHECK(values(FamilyOp::Union, Convention::Standard) == std::pair{d(1, 2), d(1, 4)});
}

TEST_CASE("paper-convention union can overdraw the membership bound") {
    const Carrier c({"0", "1"});
    const Ifs o1 = Ifs::constant(2, d(3, 4), d(1, 4));
    const Ifs o2 = Ifs::constant(2, d(1, 4), d(3, 4));

    const CombineResult r = combine2(c, o1, o2, FamilyOp::Union, Convention::Paper);
    CHECK_FALSE(r.ifs.has_value());
    REQUIRE_FALSE(r.constraint.ok());
    CHECK(r.constraint.violations().size() == 2);
    const Violation& v = r.constraint.violations().front();
    CHECK(v.axiom == "DEF2.9");
    CHECK(v.witness_names == "x=0");
    CHECK(v.lhs == "3/2");
    CHECK(v.rhs == "1");
    CHECK(r.values.mu[0] == d(3, 4));
    CHECK(r.values.nu[0] == d(3, 4));

    // The standard convention dualizes nu and stays inside the bound.
    CHECK(combine2(c, o1, o2, FamilyOp::Union, Convention::Standard).ifs.has_value());
    CHECK(combine2(c, o1, o2, FamilyOp::Intersect, Convention::Paper).ifs.has_value());
}

TEST_CASE("combination is idempotent, commutative, and fold-associative") {
    const Carrier c({"0", "1"});
    const Ifs o1({d(1, 4), d(1, 2)}, {d(1, 4), d(1, 4)});
    const Ifs o2({d(1, 3), d(0, 1)}, {d(1, 2), d(1, 5)});
    const Ifs o3({d(2, 3), d(1, 6)}, {d(0, 1), d(1, 3)});

    for (FamilyOp op : {FamilyOp::Intersect, FamilyOp::Union})
        for (Convention cv : {Convention::Paper, Convention::Standard}) {
            const CombineResult same = combine_values(c, {&o1, &o1}, op, cv);
            REQUIRE(same.ifs.has_value());
            CHECK(*same.ifs == o1);

            const CombineResult ab = combine2(c, o1, o2, op, cv);
            const CombineResult ba = combine2(c, o2, o1, op, cv);
            CHECK(ab.values.mu == ba.values.mu);
            CHECK(ab.values.nu == ba.values.nu);

            const CombineResult abc = combine_values(c, {&o1, &o2, &o3}, op, cv);
            REQUIRE(ab.ifs.has_value());
            const CombineResult fold = combine2(c, *ab.ifs, o3, op, cv);
            CHECK(abc.values.mu == fold.values.mu);
            CHECK(abc.values.nu == fold.values.nu);
        }
}

TEST_CASE("intersect-mu never rises and union-mu never falls when the family grows") {
    const Carrier c({"0", "1"});
    const Ifs o1({d(1, 4), d(1, 2)}, {d(1, 4), d(1, 4)});
    const Ifs o2({d(1, 3), d(0, 1)}, {d(1, 2), d(1, 5)});
    const Ifs o3({d(2, 3), d(1, 6)}, {d(0, 1), d(1, 3)});

    const CombineResult small_i = combine2(c, o1, o2, FamilyOp::Intersect, Convention::Standard);
    const CombineResult big_i = combine_values(c, {&o1, &o2, &o3}, FamilyOp::Intersect,
                                               Convention::Standard);
    const CombineResult small_u = combine2(c, o1, o2, FamilyOp::Union, Convention::Standard);
    const CombineResult big_u = combine_values(c, {&o1, &o2, &o3}, FamilyOp::Union,
                                               Convention::Standard);
    for (int x = 0; x < 2; ++x) {
        CHECK(big_i.values.mu[x] <= small_i.values.mu[x]);
        CHECK(big_u.values.mu[x] >= small_u.values.mu[x]);
    }
}

TEST_CASE("empty or mismatched families are rejected") {
    const Carrier c({"0", "1"});
    const Ifs o1 = Ifs::constant(2, d(1, 2), d(1, 4));
    const Ifs o3 = Ifs::constant(3, d(1, 2), d(1, 4));
    CHECK_THROWS_AS(combine_values(c, {}, FamilyOp::Union, Convention::Paper),
                    std::invalid_argument);
    CHECK_THROWS_AS(combine2(c, o1, o3, FamilyOp::Union, Convention::Paper),
                    std::invalid_argument);
}

TEST_CASE("closure verdicts over the worked field overlay: frozen two-member family") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    // Both members are valid: mu <= 1/2 everywhere with mu(0) >= mu(1), and
    // nu(0) >= 1/4 with nu(0) <= nu(1).
    const Ifs b1({d(1, 2), d(1, 2)}, {d(1, 4), d(1, 2)});
    const Ifs b2({d(1, 2), d(0, 1)}, {d(1, 4), d(1, 1)});
    REQUIRE(check_if_hvs(kk, a, b1).ok());
    REQUIRE(check_if_hvs(kk, a, b2).ok());
    const OverlayFamily family{&kk, a, {b1, b2}};

    SUBCASE("paper union overdraws at the vector 1") {
        const TheoremVerdict v = closure_oracle(family, FamilyOp::Union, Convention::Paper);
        CHECK(v.status == TheoremVerdict::Status::Counterexample);
        REQUIRE(v.failure.has_axiom("DEF2.9"));
        const Violation* viol = v.failure.find_axiom("DEF2.9");
        CHECK(viol->witness_names == "x=1");
        CHECK(viol->lhs == "3/2");
        CHECK(v.counterexample.mu[1] == d(1, 2));
        CHECK(v.counterexample.nu[1] == Degree::one());
    }
    SUBCASE("standard union stays valid here") {
        const TheoremVerdict v = closure_oracle(family, FamilyOp::Union, Convention::Standard);
        CHECK(v.status == TheoremVerdict::Status::Verified);
        CHECK(v.instances > 0);
    }
    SUBCASE("both intersections verify") {
        CHECK(closure_oracle(family, FamilyOp::Intersect, Convention::Standard).verified());
        CHECK(closure_oracle(family, FamilyOp::Intersect, Convention::Paper).verified());
    }
}

TEST_CASE("counterexamples replay: combined values reproduce the recorded violation") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b1({d(1, 2), d(1, 2)}, {d(1, 4), d(1, 2)});
    const Ifs b2({d(1, 2), d(0, 1)}, {d(1, 4), d(1, 1)});
    const OverlayFamily family{&kk, a, {b1, b2}};

    const TheoremVerdict v = closure_oracle(family, FamilyOp::Union, Convention::Paper);
    REQUIRE(v.status == TheoremVerdict::Status::Counterexample);
    const CombineResult replay = combine_family(family, FamilyOp::Union, Convention::Paper);
    CHECK_FALSE(replay.ifs.has_value());
    REQUIRE_FALSE(replay.constraint.ok());
    CHECK(replay.constraint.violations().front().str() == v.failure.violations().front().str());
    CHECK(replay.values.mu == v.counterexample.mu);
    CHECK(replay.values.nu == v.counterexample.nu);
}

TEST_CASE("precondition failures are reported before combining") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();

    SUBCASE("invalid member") {
        const OverlayFamily family{&kk, a, {fixtures::swapped_vector_overlay()}};
        const TheoremVerdict v = closure_oracle(family, FamilyOp::Intersect, Convention::Standard);
        CHECK(v.status == TheoremVerdict::Status::PreconditionFailed);
        CHECK(v.failure.has_axiom("DEF3.3.i"));
    }
    SUBCASE("invalid field overlay") {
        const Ifs bad_a({d(1, 4), d(1, 2)}, {Degree::zero(), Degree::zero()});
        const OverlayFamily family{&kk, bad_a, {fixtures::worked_vector_overlay()}};
        const TheoremVerdict v = closure_oracle(family, FamilyOp::Intersect, Convention::Standard);
        CHECK(v.status == TheoremVerdict::Status::PreconditionFailed);
        CHECK(v.failure.has_axiom("DEF3.1.i"));
    }
}

TEST_CASE("single-member families combine to the member itself and verify") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b = fixtures::worked_vector_overlay();
    const OverlayFamily family{&kk, a, {b}};
    for (FamilyOp op : {FamilyOp::Intersect, FamilyOp::Union})
        for (Convention cv : {Convention::Paper, Convention::Standard}) {
            const CombineResult r = combine_family(family, op, cv);
            REQUIRE(r.ifs.has_value());
            CHECK(*r.ifs == b);
            CHECK(closure_oracle(family, op, cv).verified());
        }
}

TEST_CASE("standard intersection chains keep validity and their union is the top member") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();

    std::vector<Ifs> chain{fixtures::worked_vector_overlay()};
    for (int i = 0; i < 3; ++i) {
        const Ifs fresh = random_overlay(kk, a, 8, 9000 + static_cast<std::uint64_t>(i));
        const CombineResult next =
            combine_values(kk.vcarrier, {&chain.back(), &fresh}, FamilyOp::Intersect,
                           Convention::Standard);
        REQUIRE(next.ifs.has_value());
        REQUIRE(check_if_hvs(kk, a, *next.ifs).ok());
        chain.push_back(*next.ifs);
    }
    // mu decreases and nu increases along the chain.
    for (std::size_t i = 1; i < chain.size(); ++i)
        for (int x = 0; x < 2; ++x) {
            CHECK(chain[i].mu(x) <= chain[i - 1].mu(x));
            CHECK(chain[i].nu(x) >= chain[i - 1].nu(x));
        }

    const OverlayFamily family{&kk, a, chain};
    const CombineResult top = combine_family(family, FamilyOp::Union, Convention::Standard);
    REQUIRE(top.ifs.has_value());
    CHECK(*top.ifs == chain.front());
    CHECK(closure_oracle(family, FamilyOp::Union, Convention::Standard).verified());
}

TEST_CASE("closure oracle is deterministic on identical input") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b1({d(1, 2), d(1, 2)}, {d(1, 4), d(1, 2)});
    const Ifs b2({d(1, 2), d(0, 1)}, {d(1, 4), d(1, 1)});
    const OverlayFamily family{&kk, a, {b1, b2}};
    const TheoremVerdict v1 = closure_oracle(family, FamilyOp::Union, Convention::Paper);
    const TheoremVerdict v2 = closure_oracle(family, FamilyOp::Union, Convention::Paper);
    CHECK(v1.status == v2.status);
    CHECK(v1.instances == v2.instances);
    CHECK(v1.failure.str() == v2.failure.str());
    CHECK(v1.counterexample.mu == v2.counterexample.mu);
}

TEST_CASE("shift keeps the stated value formula and validity on the fixture") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b = fixtures::worked_vector_overlay();

    const Ifs s = shift_overlay(b, d(1, 4));
    CHECK(s.mu(0) == d(1, 4));
    CHECK(s.mu(1) == d(1, 12));
    CHECK(s.nu(0) == d(1, 2));
    CHECK(s.nu(1) == d(3, 4));
    CHECK(check_if_hvs(kk, a, s).ok());

    CHECK(shift_overlay(b, Degree::zero()) == b);
    const Ifs full = shift_overlay(b, Degree::one());
    CHECK(full.mu(0) == Degree::zero());
    CHECK(full.nu(0) == Degree::one());

    CHECK_THROWS_AS(shift_overlay(b, d(5, 4)), std::invalid_argument);
}
