#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hyperfuzz/fixtures.hpp"
#include "hyperfuzz/ifcheck.hpp"
#include "hyperfuzz/ifs.hpp"

using namespace hyperfuzz;

namespace {

Degree d(long long n, long long m) { return Degree(n, m); }

}  // namespace

TEST_CASE("worked field overlay passes the eight-condition field audit") {
    const Hyperfield k = fixtures::krasner();
    const Ifs a = fixtures::worked_field_overlay();
    const Report r = check_if_hyperfield(k, a);
    CHECK(r.ok());
    CHECK(r.violations().empty());
}

TEST_CASE("raising mu on 1 above mu on 0 breaks the additive min bound") {
    // In the Krasner table 0 lands in 1#1, so mu(0) < mu(1) must fail the
    // first additive condition at a = b = 1 with a frozen witness.
    const Hyperfield k = fixtures::krasner();
    const Ifs bad({d(1, 4), d(1, 2)}, {Degree::zero(), Degree::zero()});
    const Report r = check_if_hyperfield(k, bad);
    REQUIRE_FALSE(r.ok());
    const Violation* v = r.find_axiom("DEF3.1.i");
    REQUIRE(v != nullptr);
    CHECK(v->lhs == "1/4");
    CHECK(v->rhs == "1/2");
    REQUIRE(v->witness.size() == 2);
    CHECK(v->witness[0].second == 1);
    CHECK(v->witness[1].second == 1);
}

TEST_CASE("derived field inequalities hold for the worked overlay") {
    const Hyperfield k = fixtures::krasner();
    const Ifs a = fixtures::worked_field_overlay();
    const Report r = check_result_3_2(k, a);
    CHECK(r.ok());
}

TEST_CASE("worked vector overlay passes the eight-condition space audit") {
    const HypervectorSpace v = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b = fixtures::worked_vector_overlay();
    CHECK(check_if_hvs(v, a, b).ok());
    CHECK(check_result_3_4(v, a, b).ok());
    CHECK(check_characterization(v, a, b).ok());
}

TEST_CASE("swapped vector overlay fails the vector min bound with frozen witness") {
    const HypervectorSpace sp = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b = fixtures::swapped_vector_overlay();
    const Report r = check_if_hvs(sp, a, b);
    REQUIRE_FALSE(r.ok());
    const Violation* v = r.find_axiom("DEF3.3.i");
    REQUIRE(v != nullptr);
    // 1#1 = {0,1}: min(mu(0), mu(1)) = 1/3 against min(mu(1), mu(1)) = 1/2.
    CHECK(v->lhs == "1/3");
    CHECK(v->rhs == "1/2");
    REQUIRE(v->witness.size() == 2);
    CHECK(v->witness[0].second == 1);
    CHECK(v->witness[1].second == 1);
}

TEST_CASE("equivalence record agrees when both audits pass") {
    const HypervectorSpace sp = fixtures::k_over_k();
    const EquivalenceRecord eq =
        equivalence_oracle(sp, fixtures::worked_field_overlay(), fixtures::worked_vector_overlay());
    CHECK(eq.eight);
    CHECK(eq.four);
    CHECK(eq.agree);
}

TEST_CASE("equivalence record agrees when both audits fail") {
    const HypervectorSpace sp = fixtures::k_over_k();
    const EquivalenceRecord eq =
        equivalence_oracle(sp, fixtures::worked_field_overlay(), fixtures::swapped_vector_overlay());
    CHECK_FALSE(eq.eight);
    CHECK_FALSE(eq.four);
    CHECK(eq.agree);
    CHECK(eq.eight_report.has_axiom("DEF3.3.i"));
}

TEST_CASE("four conditions do not imply the eight: concrete refutation") {
    // Field overlay identically zero; vector overlay grades the vector 1
    // strictly above theta on mu.  Every composite-set condition collapses to
    // a trivial bound, but the plain additive min condition fails at 1 # 1.
    const HypervectorSpace sp = fixtures::k_over_k();
    const Ifs a(std::vector<Degree>{Degree::zero(), Degree::zero()},
                std::vector<Degree>{Degree::zero(), Degree::zero()});
    REQUIRE(check_if_hyperfield(sp.field, a).ok());
    const Ifs b(std::vector<Degree>{Degree::zero(), d(1, 2)},
                std::vector<Degree>{Degree::zero(), Degree::zero()});

    const EquivalenceRecord eq = equivalence_oracle(sp, a, b);
    CHECK_FALSE(eq.eight);
    CHECK(eq.eight_report.has_axiom("DEF3.3.i"));
    CHECK(eq.four);
    CHECK(eq.four_report.ok());
    CHECK_FALSE(eq.agree);
}

TEST_CASE("equivalence oracle rejects an invalid field overlay") {
    const HypervectorSpace sp = fixtures::k_over_k();
    const Ifs bad_a({d(1, 4), d(1, 2)}, {Degree::zero(), Degree::zero()});
    CHECK_THROWS_AS(equivalence_oracle(sp, bad_a, fixtures::worked_vector_overlay()),
                    std::invalid_argument);
}

TEST_CASE("membership constraint rejects overdrawn degree pairs at construction") {
    CHECK_THROWS_AS(Ifs(std::vector<Degree>{d(3, 4), Degree::zero()},
                        std::vector<Degree>{d(1, 2), Degree::zero()}),
                    std::invalid_argument);
    CHECK_NOTHROW(Ifs(std::vector<Degree>{d(3, 4), Degree::zero()},
                      std::vector<Degree>{d(1, 4), Degree::zero()}));
}

TEST_CASE("constant overlays audit cleanly on both fixture spaces") {
    for (const HypervectorSpace& sp : {fixtures::k_over_k(), fixtures::gf2_plane()}) {
        const Ifs a = Ifs::constant(sp.field.carrier.size(), d(1, 3), d(1, 3));
        const Ifs b = Ifs::constant(sp.vcarrier.size(), d(1, 4), d(1, 2));
        CHECK(check_if_hyperfield(sp.field, a).ok());
        CHECK(check_if_hvs(sp, a, b).ok());
        const EquivalenceRecord eq = equivalence_oracle(sp, a, b);
        CHECK(eq.agree);
        CHECK(eq.eight);
    }
}
