#include "convexcalc/bypass.hpp"

namespace convexcalc::bypass {

bool is_trivial_bypass(const FramedTorus& t, const BypassMove& m) {
    return t.pairs == 1 && farey::intersection_number(t.slope, m.attach_slope) == 1;
}

FramedTorus attach_bypass_torus(const FramedTorus& t, const BypassMove& m) {
    if (m.attach_slope == t.slope)
        throw equal_slopes_error("bypass ruling slope equals the dividing slope");
    if (t.pairs > 1) return FramedTorus(t.frame, t.pairs - 1, t.slope);
    if (is_trivial_bypass(t, m)) return FramedTorus(t.frame, 1, m.attach_slope);
    ArcDirection dir = m.side == BypassSide::front ? ArcDirection::clockwise
                                                   : ArcDirection::counterclockwise;
    Slope next = farey::first_farey_neighbor(SlopeArc(m.attach_slope, t.slope, dir));
    return FramedTorus(t.frame, 1, next);
}

std::optional<std::int64_t> twist_number_lemma(std::int64_t n, const Slope& ruling) {
    // compare 1/r >= n+1 on the extended line with infinity on top
    Slope inv = ruling.reciprocal();
    Slope bound = Slope::integer(checked_add(n, 1));
    if (farey::value_compare(inv, bound) >= 0) return checked_add(n, 1);
    return std::nullopt;
}

std::optional<ImbalanceSide> imbalance_bypass(std::int64_t count_left,
                                              std::int64_t count_right) {
    if (count_left < 0 || count_right < 0)
        throw engine_error("intersection counts are nonnegative");
    if (count_left % 2 != 0 || count_right % 2 != 0) throw odd_count_error();
    if (count_left == count_right) return std::nullopt;
    return count_left > count_right ? ImbalanceSide::left : ImbalanceSide::right;
}

std::pair<FramedTorus, Layer> stabilize(const FramedTorus& t, BypassSign sign) {
    if (t.pairs != 1) throw not_standard_error("needs exactly one dividing pair");
    std::int64_t n;
    if (t.slope.p() == 0)
        n = 0; // slope infinity = 1/0
    else if (t.slope.q() == 1)
        n = t.slope.p();
    else if (t.slope.q() == -1)
        n = checked_neg(t.slope.p());
    else
        throw not_standard_error("slope " + t.slope.str() + " is not of the form 1/n");
    FramedTorus inner(t.frame, 1, Slope::one_over(checked_sub(n, 1)));
    Layer layer{inner, t, sign,
                EulerClass::single_bypass_layer(sign == BypassSign::positive ? 1 : -1)};
    return {inner, layer};
}

Rational edge_round_shift(std::int64_t n, std::int64_t k) {
    if (n < 1) throw engine_error("edge rounding needs n >= 1");
    if (k < 0 || k > 2 * n - 1)
        throw engine_error("edge rounding endpoint index k must lie in [0, 2n-1]");
    return Rational(k, 2 * n) - Rational(1, 4 * n);
}

Slope cut_and_round_pants(std::int64_t m2, std::int64_t m3) {
    if (m2 > -1 || m3 > -1)
        throw engine_error("cut-and-round needs twists m2, m3 <= -1");
    std::int64_t left = checked_add(checked_mul(3, m2), 1);
    std::int64_t right = checked_add(checked_mul(5, m3), 1);
    if (left != right) throw unequal_counts_error();
    // slope value -(m2+m3+1)/(3*m2+1)
    std::int64_t num = checked_neg(checked_add(checked_add(m2, m3), 1));
    return Slope(left, num);
}

SlopeArc reachable_slopes(const Slope& boundary_s0, const Slope& boundary_s1) {
    if (boundary_s0 == boundary_s1)
        throw equal_slopes_error("toric annulus boundary slopes");
    return SlopeArc(boundary_s1, boundary_s0, ArcDirection::clockwise);
}

SlopeArc reachable_slopes_solid(const Slope& boundary, const Slope& meridian) {
    if (boundary == meridian) throw equal_slopes_error("solid torus boundary and meridian");
    return SlopeArc(boundary, meridian, ArcDirection::clockwise);
}

bool interp_contains(const Slope& s0, const Slope& s1, const Slope& s) {
    return farey::arc_contains(reachable_slopes(s0, s1), s);
}

bool solid_contains(const Slope& boundary, const Slope& meridian, const Slope& s) {
    if (s == meridian) return false;
    return farey::arc_contains(reachable_slopes_solid(boundary, meridian), s);
}

} // namespace convexcalc::bypass
