#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>

#include "convexcalc/farey.hpp"
#include "convexcalc/rational.hpp"

namespace convexcalc::seifert {

using farey::GluingMatrix;
using farey::Slope;

// Coordinate frames on the boundary tori of the three singular-fiber
// neighborhoods V_i.  InnerBoundary(i) is dV_i with meridian (1,0) and
// longitude (0,1).  OuterBoundary(i) is -d(M \ V_i) with the fiber
// direction (0,1) and the section direction (1,0).  OuterReversed(i) is
// d(M \ V_i); slopes there are the negatives of OuterBoundary(i) slopes.
// CutRoundTorus is the boundary torus produced by cutting along the
// vertical annulus and rounding, identified like d(M \ V_1).
enum class FrameKind { inner, outer, outer_reversed, cut_round };

struct FrameId {
    FrameKind kind;
    int index; // 1..3; cut_round fixes index 1

    static FrameId inner(int i) { return {FrameKind::inner, i}; }
    static FrameId outer(int i) { return {FrameKind::outer, i}; }
    static FrameId outer_reversed(int i) { return {FrameKind::outer_reversed, i}; }
    static FrameId cut_round() { return {FrameKind::cut_round, 1}; }

    friend bool operator==(const FrameId& a, const FrameId& b) {
        return a.kind == b.kind && a.index == b.index;
    }
    friend bool operator!=(const FrameId& a, const FrameId& b) { return !(a == b); }

    std::string str() const;
    static FrameId parse(const std::string& text);
};

// Seifert data over S^2 with three singular fibers: invariants beta_i/alpha_i
// and the gluing matrices A_i : dV_i -> -d(M \ V_i), each with first column
// (alpha_i, -beta_i)^T.  The monodromy of the punctured-torus bundle on the
// complement of the third fiber ships as a preset constant.
class SeifertPreset {
public:
    SeifertPreset(std::array<Rational, 3> invariants, std::array<GluingMatrix, 3> matrices,
                  GluingMatrix monodromy);

    const Rational& invariant(int i) const { return invariants_[check_index(i)]; }
    const GluingMatrix& matrix(int i) const { return matrices_[check_index(i)]; }
    const GluingMatrix& monodromy() const { return monodromy_; }

    // The Poincare homology sphere with reversed orientation: invariants
    // (-1/2, 1/3, 1/5), A1 = [[2,-1],[1,0]], A2 = [[3,1],[-1,0]],
    // A3 = [[5,1],[-1,0]], monodromy [[1,1],[-1,0]].
    static SeifertPreset poincare();

    std::string serialize() const;
    static SeifertPreset parse_text(const std::string& text);

private:
    static std::size_t check_index(int i);
    std::array<Rational, 3> invariants_;
    std::array<GluingMatrix, 3> matrices_;
    GluingMatrix monodromy_;
};

// Slope transport between the supported frame pairs of one torus:
// Inner(i) <-> Outer(i) via A_i / A_i^{-1}; Outer(i) <-> OuterReversed(i) by
// slope negation; CutRoundTorus is an alias of OuterReversed(1); identity
// when the frames are equal.  Anything else raises: there is no implicit
// composition through the ambient manifold.
Slope transport(const SeifertPreset& preset, const Slope& s, const FrameId& from,
                const FrameId& to);

// A * [[1,m],[0,1]]; reframing V_i leaves the first column (alpha, -beta)
// untouched.
GluingMatrix framing_change(const GluingMatrix& a, std::int64_t m);

// Slope on Inner(i) of the fiber direction (0,1) of Outer(i).
Slope vertical_pullback(const SeifertPreset& preset, int i);

// True iff s, read in the given frame of torus i, pulls back to the meridian
// (1,0) of V_i: a Legendrian divide of that slope bounds a meridional disk.
bool overtwisted_meridian_check(const SeifertPreset& preset, int i, const Slope& s,
                                const FrameId& frame);

// Boundary slope of the punctured-torus fiber in the complement of the third
// singular fiber: (-1/6 on Outer(3), 1 on Inner(3)) for the Poincare preset.
std::pair<Slope, Slope> fiber_boundary_slope(const SeifertPreset& preset);

} // namespace convexcalc::seifert
