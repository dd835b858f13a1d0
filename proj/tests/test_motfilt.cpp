#include "motfilt/motfilt.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using homalg::FinAbGroup;
using homalg::Int;
using homalg::Rat;
using motfilt::HodgeDiamond;
using motfilt::Theory;
using numring::NumberRing;

namespace {

NumberRing ring_z() { return NumberRing::make({Int(0), Int(1)}); }
NumberRing gauss() { return NumberRing::make({Int(1), Int(0), Int(1)}, "Q(i)"); }

} // namespace

TEST_CASE("homotopy of THH over the integers", "[motfilt]") {
    CHECK(motfilt::thh_z_homotopy(0) == FinAbGroup::free_of_rank(1));
    CHECK(motfilt::thh_z_homotopy(3) == FinAbGroup::cyclic(Int(2)));
    CHECK(motfilt::thh_z_homotopy(1).is_trivial()); // 2n-1 = 1 gives Z/1
    for (long i = -5; i <= 41; ++i) {
        // Independent table: Z at 0, Z/n exactly at odd i = 2n-1 > 0.
        FinAbGroup expect;
        if (i == 0)
            expect = FinAbGroup::free_of_rank(1);
        else if (i > 0 && i % 2 == 1)
            expect = FinAbGroup::cyclic(Int((i + 1) / 2));
        CHECK(motfilt::thh_z_homotopy(i) == expect);
    }
}

TEST_CASE("homotopy of THH over number rings", "[motfilt]") {
    auto z = ring_z();
    for (long i = 0; i <= 40; ++i) {
        auto g = motfilt::thh_of_homotopy(z, i);
        CHECK(g.group == motfilt::thh_z_homotopy(i));
    }

    auto r = gauss();
    CHECK(motfilt::thh_of_homotopy(r, 0).group == FinAbGroup::free_of_rank(2));
    auto p1 = motfilt::thh_of_homotopy(r, 1);
    CHECK(p1.order.has_value());
    CHECK(*p1.order == 4); // |disc| * 1^2
    CHECK(p1.group.invariant_factors() == std::vector<Int>{Int(2), Int(2)});
    CHECK(motfilt::thh_of_homotopy(r, 6).group.is_trivial());
    CHECK(motfilt::thh_of_homotopy(r, -2).group.is_trivial());

    // pi_{2j-1} order = |disc| j^deg = the fractional index, for both rings.
    for (long j = 1; j <= 8; ++j) {
        auto g = motfilt::thh_of_homotopy(r, 2 * j - 1);
        CHECK(*g.order == numring::fractional_index(r, Int(j)));
    }
}

TEST_CASE("theory names round trip", "[motfilt]") {
    for (auto t : {Theory::THH, Theory::TP, Theory::TCminus, Theory::TCplus})
        CHECK(motfilt::theory_from_name(motfilt::theory_name(t)) == t);
    CHECK(motfilt::theory_from_name("TC-") == Theory::TCminus);
    CHECK(motfilt::theory_from_name("TC+") == Theory::TCplus);
    CHECK_THROWS_AS(motfilt::theory_from_name("K"), std::invalid_argument);
}

TEST_CASE("graded piece descriptors", "[motfilt]") {
    auto a = motfilt::graded_piece(Theory::THH, 3, 0);
    CHECK(a.expression == "LLambda^3 L [3]");
    CHECK(a.epsilon == 0);
    CHECK(a.shift == 3);

    auto b = motfilt::graded_piece(Theory::TCplus, 5, 2);
    CHECK(b.expression == "LOmega^{<3} (x) Z/2 [9]");
    CHECK(b.epsilon == 1);

    auto c = motfilt::graded_piece(Theory::TP, 3, 0);
    CHECK(c.expression == "LOmega^hat [6]");

    auto d = motfilt::graded_piece(Theory::TCminus, 4, 1);
    CHECK(d.expression == "LOmega^hat^{>=3} (x) Z/1 [7]");
    CHECK(d.sub_index == 3);

    CHECK_THROWS_AS(motfilt::graded_piece(Theory::THH, 2, -1), std::invalid_argument);
}

TEST_CASE("evaluated THH pieces match the homotopy ring structure", "[motfilt]") {
    auto z = ring_z();
    // The (n, n) piece is Z/n placed in degree 2n-1, matching pi_{2n-1}THH(Z).
    for (long n = 2; n <= 8; ++n) {
        auto groups = motfilt::evaluate_thh_piece(z, n, n);
        REQUIRE(groups.count(2 * n - 1) == 1);
        CHECK(groups.at(2 * n - 1) == motfilt::thh_z_homotopy(2 * n - 1));
        for (const auto& [deg, g] : groups)
            if (deg != 2 * n - 1) CHECK(g.is_trivial());
    }

    // Vanishing outside 0 <= j <= n.
    CHECK(motfilt::evaluate_thh_piece(z, 1, 3).empty());

    // j = 0 piece of weight n over O: the free exterior power itself.
    auto r = gauss();
    auto free_piece = motfilt::evaluate_thh_piece(r, 0, 0);
    REQUIRE(free_piece.count(0) == 1);
    CHECK(free_piece.at(0) == FinAbGroup::free_of_rank(2));

    // (n, n) over O: (Z/n)^deg in degree 2n-1.
    auto gn = motfilt::evaluate_thh_piece(r, 3, 3);
    REQUIRE(gn.count(5) == 1);
    CHECK(gn.at(5) == FinAbGroup::from_diagonal({Int(3), Int(3)}));
}

TEST_CASE("archimedean correcting factor", "[motfilt]") {
    auto spec_z = HodgeDiamond::number_ring_point(1);
    CHECK(motfilt::c_infinity(spec_z, 3) == Rat(2));
    CHECK(motfilt::c_infinity(spec_z, 1) == Rat(1));
    CHECK(motfilt::c_infinity(spec_z, 0) == Rat(1));
    CHECK(motfilt::c_infinity(spec_z, -4) == Rat(1));

    // Point of degree c and n >= 2: ((n-1)!)^c.
    for (long c = 1; c <= 3; ++c)
        for (long n = 2; n <= 7; ++n)
            CHECK(motfilt::c_infinity(HodgeDiamond::number_ring_point(c), n) ==
                  Rat(homalg::ipow(homalg::factorial(n - 1), static_cast<unsigned long>(c))));

    auto ell = HodgeDiamond::generic_fiber(1, {{1, 1}, {1, 1}});
    CHECK(motfilt::c_infinity(ell, 2) == Rat(1));

    // P^1: the h00 and h11 corners contribute (n-1)! and (n-2)!.
    auto p1 = HodgeDiamond::generic_fiber(1, {{1, 0}, {0, 1}});
    CHECK(motfilt::c_infinity(p1, 3) == Rat(2));  // 2! * 1!
    CHECK(motfilt::c_infinity(p1, 4) == Rat(12)); // 3! * 2!

    CHECK_THROWS_AS(motfilt::c_infinity(HodgeDiamond::point_over_fq(Int(5)), 2),
                    std::invalid_argument);
}

TEST_CASE("finite-field correcting exponent", "[motfilt]") {
    auto pt = HodgeDiamond::point_over_fq(Int(5));
    for (long n = 0; n <= 10; ++n) CHECK(motfilt::milne_exponent(pt, n) == n);
    CHECK(motfilt::milne_exponent(pt, -3) == 0);

    auto p1 = HodgeDiamond::curve_over_fq(0, Int(5));
    CHECK(motfilt::milne_exponent(p1, 1) == 1);
    auto ell = HodgeDiamond::curve_over_fq(1, Int(5));
    CHECK(motfilt::milne_exponent(ell, 1) == 0);

    CHECK_THROWS_AS(motfilt::milne_exponent(HodgeDiamond::number_ring_point(1), 2),
                    std::invalid_argument);
}

TEST_CASE("fiber-sequence product equals the inverse archimedean factor", "[motfilt]") {
    auto spec_z = HodgeDiamond::number_ring_point(1);
    auto r3 = motfilt::verify_cinf_fiber_seq(spec_z, 3);
    CHECK(r3.equal);
    CHECK(r3.product_side == Rat(1, 2));
    CHECK(r3.closed_form == Rat(1, 2));

    auto gauss_pt = HodgeDiamond::number_ring_point(2);
    auto r4 = motfilt::verify_cinf_fiber_seq(gauss_pt, 4);
    CHECK(r4.equal);
    CHECK(r4.product_side == Rat(1, 36));

    auto r1 = motfilt::verify_cinf_fiber_seq(gauss_pt, 1);
    CHECK(r1.product_side == Rat(1));
    CHECK(r1.closed_form == Rat(1));

    CHECK_THROWS_AS(motfilt::verify_cinf_fiber_seq(spec_z, -1), std::invalid_argument);

    // The identity is purely combinatorial in the Hodge numbers: stress it
    // on random diamonds of dimension <= 2 with entries <= 5.
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> dim(0, 2), entry(0, 5);
    for (int t = 0; t < 100; ++t) {
        const long d = dim(rng);
        std::vector<std::vector<long>> h(static_cast<std::size_t>(d) + 1,
                                         std::vector<long>(static_cast<std::size_t>(d) + 1));
        for (auto& row : h)
            for (auto& x : row) x = entry(rng);
        auto hd = HodgeDiamond::generic_fiber(d, h);
        for (long n = 0; n <= 8; ++n) {
            auto rep = motfilt::verify_cinf_fiber_seq(hd, n);
            CHECK(rep.equal);
            CHECK(rep.product_side == rep.closed_form);
        }
    }
}

TEST_CASE("Hodge diamond validation and serialization", "[motfilt]") {
    CHECK_THROWS_AS(HodgeDiamond::generic_fiber(1, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(HodgeDiamond::generic_fiber(0, {{-1}}), std::invalid_argument);
    CHECK_THROWS_AS(HodgeDiamond::over_fq(0, {{1}}, Int(6)), std::invalid_argument);
    CHECK_THROWS_AS(HodgeDiamond::over_fq(0, {{1}}, Int(1)), std::invalid_argument);
    CHECK(HodgeDiamond::over_fq(0, {{1}}, Int(9)).q() == 9); // prime power is fine

    auto ell = HodgeDiamond::curve_over_fq(1, Int(5));
    CHECK(ell.serre_symmetric());
    CHECK(ell.euler_ell() == 0);
    CHECK(HodgeDiamond::curve_over_fq(2, Int(3)).euler_ell() == -2);

    auto j = ell.to_json();
    auto back = HodgeDiamond::from_json(j);
    CHECK(back.to_json() == j);
    // q is rejected in the generic context and required over F_q.
    auto gj = HodgeDiamond::number_ring_point(2).to_json();
    CHECK_FALSE(gj.contains("q"));
    gj["q"] = 5;
    CHECK_THROWS_AS(HodgeDiamond::from_json(gj), std::invalid_argument);
    j.erase("q");
    CHECK_THROWS_AS(HodgeDiamond::from_json(j), std::invalid_argument);
}
