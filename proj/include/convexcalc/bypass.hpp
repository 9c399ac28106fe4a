#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "convexcalc/convex_surface.hpp"
#include "convexcalc/farey.hpp"
#include "convexcalc/rational.hpp"

namespace convexcalc::bypass {

using farey::ArcDirection;
using farey::Slope;
using farey::SlopeArc;
using surface::EulerClass;
using surface::FramedTorus;

enum class BypassSide { front, back };
enum class BypassSign { positive, negative };

// A bypass half-disk riding a Legendrian ruling curve of the torus.  The
// side fixes which face of the torus carries the half-disk and thereby the
// direction of the slope walk: front walks the clockwise (increasing) arc
// from the ruling slope to the dividing slope, back the counterclockwise
// one.  The sign is the sign of the interior elliptic point.
struct BypassMove {
    Slope attach_slope;
    BypassSide side = BypassSide::front;
    BypassSign sign = BypassSign::positive;
};

// A toric annulus with convex boundary tori in a common frame.
struct Layer {
    FramedTorus inner;
    FramedTorus outer;
    BypassSign bypass_sign;
    EulerClass euler;
};

// Bypass attachment on a convex torus.  With more than one dividing pair
// the move absorbs a pair; with a single pair the slope walks to its first
// Farey neighbor on the arc from the attaching slope.  An attaching slope
// that already is a Farey neighbor of the dividing slope comes back
// unchanged as the new dividing slope (the trivial bypass, the consistent
// limit of the walk).
FramedTorus attach_bypass_torus(const FramedTorus& t, const BypassMove& m);

// True iff the move is the trivial-bypass case above.
bool is_trivial_bypass(const FramedTorus& t, const BypassMove& m);

// Twist Number Lemma: a bypass on a ruling curve of slope r raises the
// twisting number n to n+1 provided 1/r >= n+1 on the extended line
// (1/inf = 0, 1/0 = inf).  Returns the new twist, or nothing.
std::optional<std::int64_t> twist_number_lemma(std::int64_t n, const Slope& ruling);

enum class ImbalanceSide { left, right };

// The imbalance principle for a vertical annulus whose boundary curves meet
// the two dividing sets in the given total geometric counts: a bypass sits
// on the side with the larger count; equal counts give none.
std::optional<ImbalanceSide> imbalance_bypass(std::int64_t count_left,
                                              std::int64_t count_right);

// Stabilization of a standard-neighborhood boundary (one dividing pair of
// slope 1/n): shrinks the twist to n-1 and peels off the layer between the
// old and new boundaries.  The layer records the bypass sign and the
// relative Euler contribution; sign + carries the class with e(mu) = -1,
// e(lambda) = 1.
std::pair<FramedTorus, Layer> stabilize(const FramedTorus& t, BypassSign sign);

// Edge rounding: the dividing endpoint z = k/2n on the first surface
// connects to z = k/2n - 1/4n on the second.
Rational edge_round_shift(std::int64_t n, std::int64_t k);

// Dividing slope, in the d(M \ V_1)-style frame, of the torus obtained by
// cutting out the standard vertical annulus between the second and third
// singular fibers and rounding: -(m2+m3+1)/(3*m2+1).  Requires the
// equal-count no-bypass configuration 3*m2+1 == 5*m3+1 with m2, m3 <= -1.
Slope cut_and_round_pants(std::int64_t m2, std::int64_t m3);

// Slopes realized by convex tori parallel to the boundary of T^2 x I with
// boundary slopes s0 (at level 0) and s1 (at level 1): the closed arc from
// s1 clockwise to s0, wrapped through infinity when s0 < s1.
SlopeArc reachable_slopes(const Slope& boundary_s0, const Slope& boundary_s1);

// Solid-torus case, in the inner (knot-frame) orientation: the arc from the
// boundary slope clockwise toward the meridian, meridian excluded.
SlopeArc reachable_slopes_solid(const Slope& boundary, const Slope& meridian);

// Membership helpers honoring the open endpoint of the solid case.
bool interp_contains(const Slope& s0, const Slope& s1, const Slope& s);
bool solid_contains(const Slope& boundary, const Slope& meridian, const Slope& s);

} // namespace convexcalc::bypass
