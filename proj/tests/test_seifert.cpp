#include <doctest.h>

#include "convexcalc/seifert.hpp"

using namespace convexcalc;
using namespace convexcalc::farey;
using namespace convexcalc::seifert;

TEST_CASE("poincare preset constants") {
    auto preset = SeifertPreset::poincare();
    CHECK(preset.invariant(1) == Rational(-1, 2));
    CHECK(preset.invariant(2) == Rational(1, 3));
    CHECK(preset.invariant(3) == Rational(1, 5));
    CHECK(preset.matrix(1) == GluingMatrix(2, -1, 1, 0));
    CHECK(preset.matrix(2) == GluingMatrix(3, 1, -1, 0));
    CHECK(preset.matrix(3) == GluingMatrix(5, 1, -1, 0));
    CHECK(preset.monodromy() == GluingMatrix(1, 1, -1, 0));
}

TEST_CASE("preset serialization round trip") {
    auto preset = SeifertPreset::poincare();
    auto text = preset.serialize();
    auto back = SeifertPreset::parse_text(text);
    CHECK(back.serialize() == text);
    CHECK_THROWS_AS(SeifertPreset::parse_text("invariants 1/2"), parse_error);
    CHECK_THROWS_AS(SeifertPreset::parse_text(""), parse_error);
    // first column must be (alpha, -beta)
    CHECK_THROWS_AS(SeifertPreset({Rational(-1, 2), Rational(1, 3), Rational(1, 5)},
                                  {GluingMatrix(3, 1, -1, 0), GluingMatrix(3, 1, -1, 0),
                                   GluingMatrix(5, 1, -1, 0)},
                                  GluingMatrix(1, 1, -1, 0)),
                    engine_error);
}

TEST_CASE("transport between supported frames") {
    auto preset = SeifertPreset::poincare();
    // Inner(1) slope 1/m -> Outer(1) slope m/(2m-1), here m = -4
    CHECK(transport(preset, Slope::one_over(-4), FrameId::inner(1), FrameId::outer(1)) ==
          Slope(9, 4));
    // Inner(3) slope 1 -> Outer(3) slope -1/6
    CHECK(transport(preset, Slope(1, 1), FrameId::inner(3), FrameId::outer(3)) ==
          Slope(6, -1));
    // Outer(2) slope -1/3 -> OuterReversed(2) slope 1/3
    CHECK(transport(preset, Slope(3, -1), FrameId::outer(2), FrameId::outer_reversed(2)) ==
          Slope(3, 1));
    // round trips
    for (int i = 1; i <= 3; ++i) {
        for (std::int64_t m = -8; m <= 3; ++m) {
            Slope s = Slope::one_over(m);
            Slope there = transport(preset, s, FrameId::inner(i), FrameId::outer(i));
            CHECK(transport(preset, there, FrameId::outer(i), FrameId::inner(i)) == s);
            Slope rev = transport(preset, there, FrameId::outer(i),
                                  FrameId::outer_reversed(i));
            CHECK(transport(preset, rev, FrameId::outer_reversed(i), FrameId::outer(i)) ==
                  there);
        }
    }
    // cut-round torus is identified like d(M \ V_1)
    CHECK(transport(preset, Slope(2, -1), FrameId::cut_round(), FrameId::outer_reversed(1)) ==
          Slope(2, -1));
    CHECK(transport(preset, Slope(2, -1), FrameId::cut_round(), FrameId::outer(1)) ==
          Slope(2, 1));
    // unsupported pairs raise instead of guessing
    CHECK_THROWS_AS(transport(preset, Slope::zero(), FrameId::inner(1), FrameId::outer(2)),
                    unsupported_frame_pair_error);
    CHECK_THROWS_AS(
        transport(preset, Slope::zero(), FrameId::inner(1), FrameId::outer_reversed(1)),
        unsupported_frame_pair_error);
}

TEST_CASE("transport preserves intersection numbers") {
    auto preset = SeifertPreset::poincare();
    Slope pairs[][2] = {{Slope(2, -1), Slope::infinity()},
                        {Slope(5, 3), Slope(1, -2)},
                        {Slope::zero(), Slope(7, 2)}};
    for (int i = 1; i <= 3; ++i)
        for (auto& pr : pairs) {
            auto a = transport(preset, pr[0], FrameId::inner(i), FrameId::outer(i));
            auto b = transport(preset, pr[1], FrameId::inner(i), FrameId::outer(i));
            CHECK(intersection_number(a, b) == intersection_number(pr[0], pr[1]));
            auto ra = transport(preset, pr[0], FrameId::outer(i), FrameId::outer_reversed(i));
            auto rb = transport(preset, pr[1], FrameId::outer(i), FrameId::outer_reversed(i));
            CHECK(intersection_number(ra, rb) == intersection_number(pr[0], pr[1]));
        }
}

TEST_CASE("outer slope closed forms") {
    auto preset = SeifertPreset::poincare();
    for (std::int64_t m = -12; m <= -1; ++m) {
        Slope s = Slope::one_over(m);
        CHECK(transport(preset, s, FrameId::inner(1), FrameId::outer(1)) ==
              Slope(2 * m - 1, m));
        CHECK(transport(preset, s, FrameId::inner(2), FrameId::outer(2)) ==
              Slope(3 * m + 1, -m));
        CHECK(transport(preset, s, FrameId::inner(3), FrameId::outer(3)) ==
              Slope(5 * m + 1, -m));
    }
}

TEST_CASE("framing change") {
    auto a1 = GluingMatrix(2, -1, 1, 0);
    CHECK(framing_change(a1, 0) == a1);
    CHECK(framing_change(a1, 1) == GluingMatrix(2, 1, 1, 1));
    for (std::int64_t m = -5; m <= 5; ++m) {
        auto shifted = framing_change(a1, m);
        CHECK(shifted.a() == a1.a());
        CHECK(shifted.c() == a1.c());
        CHECK(framing_change(shifted, -m) == a1);
        // the meridian transports identically under any framing
        CHECK(apply(shifted, Slope::zero()) == apply(a1, Slope::zero()));
    }
}

TEST_CASE("vertical pullbacks") {
    auto preset = SeifertPreset::poincare();
    CHECK(vertical_pullback(preset, 1) == Slope(1, 2));
    CHECK(vertical_pullback(preset, 2) == Slope(1, -3));
    CHECK(vertical_pullback(preset, 3) == Slope(1, -5));
}

TEST_CASE("meridian detection") {
    auto preset = SeifertPreset::poincare();
    CHECK(overtwisted_meridian_check(preset, 3, Slope(5, -1), FrameId::outer(3)));
    CHECK(overtwisted_meridian_check(preset, 1, Slope(2, 1), FrameId::outer(1)));
    CHECK(overtwisted_meridian_check(preset, 1, Slope(2, -1), FrameId::outer_reversed(1)));
    CHECK(overtwisted_meridian_check(preset, 1, Slope(2, -1), FrameId::cut_round()));
    CHECK(!overtwisted_meridian_check(preset, 3, Slope(6, -1), FrameId::outer(3)));
    CHECK_THROWS_AS(
        overtwisted_meridian_check(preset, 2, Slope::zero(), FrameId::cut_round()),
        unsupported_frame_pair_error);
    CHECK_THROWS_AS(overtwisted_meridian_check(preset, 2, Slope::zero(), FrameId::outer(3)),
                    unsupported_frame_pair_error);
}

TEST_CASE("fiber boundary slope") {
    auto preset = SeifertPreset::poincare();
    auto [outer, inner] = fiber_boundary_slope(preset);
    CHECK(outer == Slope(6, -1));
    CHECK(inner == Slope(1, 1));
    CHECK(transport(preset, outer, FrameId::outer(3), FrameId::inner(3)) == inner);
}
