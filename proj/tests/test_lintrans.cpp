#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hyperfuzz/fixtures.hpp"
#include "hyperfuzz/ifcheck.hpp"
#include "hyperfuzz/lintrans.hpp"
#include "hyperfuzz/modelfind.hpp"

using namespace hyperfuzz;

namespace {

Degree d(long long n, long long m) { return Degree(n, m); }

}  // namespace

TEST_CASE("identity and zero maps are linear; the swap map is not") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const LinearMap identity{&kk, &kk, {0, 1}};
    const LinearMap zero{&kk, &kk, {0, 0}};
    const LinearMap swap{&kk, &kk, {1, 0}};

    CHECK(check_linear(identity).ok());
    CHECK(check_linear(zero).ok());

    const Report r = check_linear(swap);
    REQUIRE_FALSE(r.ok());
    CHECK(r.has_axiom("DEF4.1.iii"));
}

TEST_CASE("structural field and space equality distinguishes the fixtures") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const HypervectorSpace plane = fixtures::gf2_plane();
    CHECK(same_field(kk.field, kk.field));
    CHECK_FALSE(same_field(kk.field, plane.field));
    CHECK(same_space(plane, fixtures::gf2_plane()));
    CHECK_FALSE(same_space(kk, plane));
    CHECK_THROWS_AS(enumerate_linear_maps(kk, plane), std::invalid_argument);
}

TEST_CASE("preimage pulls degrees back along the map") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs b = fixtures::worked_vector_overlay();

    const LinearMap identity{&kk, &kk, {0, 1}};
    CHECK(preimage_ifs(identity, b) == b);

    const LinearMap zero{&kk, &kk, {0, 0}};
    const Ifs pre = preimage_ifs(zero, b);
    CHECK(pre.mu(0) == b.mu(0));
    CHECK(pre.mu(1) == b.mu(0));
    CHECK(pre.nu(1) == b.nu(0));
}

TEST_CASE("preimage composes contravariantly") {
    const HypervectorSpace plane = fixtures::gf2_plane();
    // s swaps the two coordinates; t projects onto the first coordinate.
    // Vector order is 00, 01, 10, 11.
    const LinearMap s{&plane, &plane, {0, 2, 1, 3}};
    const LinearMap t{&plane, &plane, {0, 0, 2, 2}};
    REQUIRE(check_linear(s).ok());
    REQUIRE(check_linear(t).ok());

    const LinearMap ts = compose(t, s);
    const Ifs b({d(1, 2), d(1, 3), d(1, 4), d(1, 5)}, {d(0, 1), d(1, 3), d(1, 4), d(1, 5)});
    CHECK(preimage_ifs(ts, b) == preimage_ifs(s, preimage_ifs(t, b)));
}

TEST_CASE("all linear maps between the tiny fixture are the zero and identity maps") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const std::vector<LinearMap> maps = enumerate_linear_maps(kk, kk);
    REQUIRE(maps.size() == 2);
    CHECK(maps[0].map == std::vector<int>{0, 0});
    CHECK(maps[1].map == std::vector<int>{0, 1});
}

TEST_CASE("the plane admits exactly the sixteen additive maps") {
    const HypervectorSpace plane = fixtures::gf2_plane();
    const std::vector<LinearMap> maps = enumerate_linear_maps(plane, plane);
    CHECK(maps.size() == 16);
    bool has_identity = false;
    for (const LinearMap& m : maps) {
        CHECK(check_linear(m).ok());
        if (m.map == std::vector<int>{0, 1, 2, 3}) has_identity = true;
    }
    CHECK(has_identity);
}

TEST_CASE("enumeration refuses candidate spaces beyond the bound") {
    const HypervectorSpace plane = fixtures::gf2_plane();
    CHECK_THROWS_AS(enumerate_linear_maps(plane, plane, 10), std::length_error);
}

TEST_CASE("preimage closure verdict on worked data") {
    const HypervectorSpace kk = fixtures::k_over_k();
    const Ifs a = fixtures::worked_field_overlay();
    const Ifs b = fixtures::worked_vector_overlay();
    const LinearMap identity{&kk, &kk, {0, 1}};
    const LinearMap zero{&kk, &kk, {0, 0}};

    CHECK(theorem_4_2_oracle(identity, a, b).verified());
    CHECK(theorem_4_2_oracle(zero, a, b).verified());

    const TheoremVerdict v = theorem_4_2_oracle(identity, a, fixtures::swapped_vector_overlay());
    CHECK(v.status == TheoremVerdict::Status::PreconditionFailed);
}

TEST_CASE("preimage closure across every plane endomorphism with seeded overlays") {
    const HypervectorSpace plane = fixtures::gf2_plane();
    for (const LinearMap& m : enumerate_linear_maps(plane, plane)) {
        const Ifs a = random_overlay(plane.field, 8, 411);
        const Ifs b = random_overlay(plane, a, 8, 412);
        CHECK(theorem_4_2_oracle(m, a, b).verified());
    }
}
