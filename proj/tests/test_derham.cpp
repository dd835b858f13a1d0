#include "motfilt/derham.hpp"

#include <catch2/catch_amalgamated.hpp>

using derham::lambda_power;
using derham::lambda_power_complex;
using derham::lomega_two_term;
using homalg::FinAbGroup;
using homalg::Int;
using motfilt::HodgeDiamond;
using numring::NumberRing;

namespace {

NumberRing gauss() { return NumberRing::make({Int(1), Int(0), Int(1)}, "Q(i)"); }
NumberRing sqrt2() { return NumberRing::make({Int(-2), Int(0), Int(1)}); }
NumberRing ring_z() { return NumberRing::make({Int(0), Int(1)}); }

} // namespace

TEST_CASE("exterior powers of the cotangent complex", "[derham]") {
    auto r = gauss();
    auto l0 = lambda_power(r, 0);
    CHECK(l0.homological_degree == 0);
    CHECK(l0.group == FinAbGroup::free_of_rank(2));

    // For i >= 1 the power collapses to O/(f') placed in degree i-1; its
    // order is the absolute discriminant regardless of i.
    for (long i = 1; i <= 4; ++i) {
        auto li = lambda_power(r, i);
        CHECK(li.exterior_degree == i);
        CHECK(li.homological_degree == i - 1);
        CHECK(li.group.order() == 4);
        CHECK(li.group.invariant_factors() == std::vector<Int>{Int(2), Int(2)});
    }
    CHECK(lambda_power(sqrt2(), 1).group.invariant_factors() ==
          std::vector<Int>{Int(2), Int(4)});
    CHECK(lambda_power(ring_z(), 1).group.is_trivial()); // f' = 1 is a unit
    CHECK_THROWS_AS(lambda_power(r, -1), std::invalid_argument);
}

TEST_CASE("exterior power complexes realize the same cohomology", "[derham]") {
    auto r = sqrt2();
    CHECK(lambda_power_complex(r, 0) == homalg::ZComplex::concentrated(0, 2));
    for (long i = 1; i <= 3; ++i) {
        auto c = lambda_power_complex(r, i);
        CHECK(c.lo() == -i);
        CHECK(c.hi() == 1 - i);
        CHECK(c.rank(static_cast<int>(-i)) == 2);
        // Cohomological degree 1-i carries O/(f'), i.e. homological i-1.
        CHECK(homalg::cohomology(c, static_cast<int>(1 - i)) == lambda_power(r, i).group);
        CHECK(homalg::cohomology(c, static_cast<int>(-i)).is_trivial());
    }
}

TEST_CASE("two-term de Rham complex of the Gaussian integers", "[derham]") {
    auto c = lomega_two_term(gauss());
    CHECK(c.rank(0) == 4);
    CHECK(c.rank(1) == 2);
    CHECK(homalg::euler_rank(c) == 2);

    // The differential is [D | M_{2t}] = [[0,1,0,-2],[0,0,2,0]]; its 2x2
    // minors are {0, 2, 4, ...}, so the cokernel presentation has
    // determinantal gcds d1 = 1, d2 = 2: H^1 = Z/2, and the kernel is free
    // of rank 2.
    CHECK(homalg::cohomology(c, 0) == FinAbGroup::free_of_rank(2));
    CHECK(homalg::cohomology(c, 1) == FinAbGroup::cyclic(Int(2)));

    auto c2 = lomega_two_term(sqrt2());
    CHECK(homalg::cohomology(c2, 0) == FinAbGroup::free_of_rank(2));
    CHECK(homalg::cohomology(c2, 1) == FinAbGroup::cyclic(Int(2)));

    // Base case: for Z the complex is [Z --0--> Z... ] with d = [0 | 1].
    auto cz = lomega_two_term(ring_z());
    CHECK(homalg::cohomology(cz, 0) == FinAbGroup::free_of_rank(1));
    CHECK(homalg::cohomology(cz, 1).is_trivial());
    CHECK(homalg::euler_rank(cz) == 1);
}

TEST_CASE("truncated de Rham Euler orders over prime fields", "[derham]") {
    CHECK(derham::fp_lomega_euler(Int(5), 1) == 5);
    CHECK(derham::fp_lomega_euler(Int(2), 3) == 8);
    CHECK(derham::fp_lomega_euler(Int(7), 0) == 1);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 47L})
        for (long n = 0; n <= 10; ++n)
            CHECK(derham::fp_lomega_euler(Int(p), n) == homalg::ipow(Int(p), n));
    CHECK_THROWS_AS(derham::fp_lomega_euler(Int(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(derham::fp_lomega_euler(Int(5), -1), std::invalid_argument);
}

TEST_CASE("truncation-level summaries", "[derham]") {
    auto r = gauss();

    auto s0 = derham::lomega_summary(r, 0);
    CHECK(s0.h0_rank == 0);
    CHECK(s0.h1.has_value());
    CHECK(s0.h1->is_trivial());

    auto s1 = derham::lomega_summary(r, 1);
    CHECK(s1.h0_rank == 2);
    CHECK(s1.h1->is_trivial());

    auto s2 = derham::lomega_summary(r, 2);
    CHECK(s2.h0_rank == 2);
    CHECK(*s2.h1 == FinAbGroup::cyclic(Int(2)));

    // Beyond n = 2 only the graded orders are determined: one factor of
    // |disc| per Hodge level 1..n-1.
    auto s4 = derham::lomega_summary(r, 4);
    CHECK_FALSE(s4.h1.has_value());
    CHECK(s4.graded_orders == std::vector<Int>{Int(4), Int(4), Int(4)});

    auto j = s2.to_json();
    CHECK(j["n"] == 2);
    CHECK(j["h0_rank"] == 2);
    auto j4 = s4.to_json();
    CHECK(j4.contains("graded_orders"));
}

TEST_CASE("diamond-level truncated de Rham ranks", "[derham]") {
    auto pt = HodgeDiamond::number_ring_point(2);
    CHECK(derham::lomega_rank(pt, 0) == 0);
    CHECK(derham::lomega_rank(pt, -3) == 0);
    for (long k = 1; k <= 5; ++k) CHECK(derham::lomega_rank(pt, k) == 2);

    // P^1 over Q: row i = 0 contributes 1, row i = 1 contributes -(-1) = 1.
    auto p1 = HodgeDiamond::generic_fiber(1, {{1, 0}, {0, 1}});
    CHECK(derham::lomega_rank(p1, 1) == 1);
    CHECK(derham::lomega_rank(p1, 2) == 2);
    CHECK(derham::lomega_rank(p1, 5) == 2);

    auto ell = HodgeDiamond::generic_fiber(1, {{1, 1}, {1, 1}});
    CHECK(derham::lomega_rank(ell, 1) == 0);
    CHECK(derham::lomega_rank(ell, 2) == 0);
}
