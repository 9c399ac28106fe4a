#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexcalc/dividing_set.hpp"
#include "convexcalc/farey.hpp"
#include "convexcalc/seifert.hpp"

namespace convexcalc::surface {

using farey::Slope;
using seifert::FrameId;

// A convex torus carrying 2n parallel essential dividing curves of one
// slope, named in a coordinate frame.  Tightness forbids contractible
// dividing curves on a torus, so this is the whole state.  A standard-form
// torus additionally records its Legendrian ruling slope.
struct FramedTorus {
    FramedTorus(FrameId frame_, int pairs_, Slope slope_,
                std::optional<Slope> ruling_ = std::nullopt)
        : frame(frame_), pairs(pairs_), slope(slope_), ruling(ruling_) {
        if (pairs < 1) throw engine_error("a convex torus carries at least one dividing pair");
        if (ruling && *ruling == slope)
            throw equal_slopes_error("ruling slope equals dividing slope");
    }

    FrameId frame;
    int pairs;
    Slope slope;
    std::optional<Slope> ruling;
};

// Giroux's criterion, specialized to the surfaces we carry: tight iff no
// contractible closed dividing curve, and on the disk the dividing set must
// moreover be a nonempty union of arcs.
bool giroux_tight(const DividingSet& ds);

// Twisting number of a Legendrian curve of class c on the torus relative to
// the surface framing: -n * (geometric intersection with the dividing slope).
std::int64_t twist_of_curve(const FramedTorus& t, const Slope& c);

enum class PantsClass { A, B, C, D };
std::string pants_class_name(PantsClass c);
PantsClass parse_pants_class(const std::string& name);

// Classifies a pants dividing set whose boundaries each meet the dividing
// set twice, by the partition the arcs induce on the boundary components:
// A = three pair-connecting arcs; otherwise the letter names the boundary
// carrying the boundary-parallel arc (B for 1, C for 2) and D covers both
// a parallel arc on boundary 3 and the all-parallel pattern.
PantsClass classify_pants(const DividingSet& ds);

// chi(positive regions) - chi(negative regions) on an annulus.
std::int64_t euler_eval_annulus(const DividingSet& ds);

// Relative Euler class of a toric annulus, stored by its values on the
// basis classes mu = (1,0) and lambda = (0,1) and extended linearly.
class EulerClass {
public:
    EulerClass(std::int64_t on_mu, std::int64_t on_lambda)
        : mu_(on_mu), lambda_(on_lambda) {}

    std::int64_t on_mu() const { return mu_; }
    std::int64_t on_lambda() const { return lambda_; }

    // Solve for the class from two evaluations on a unimodular pair.
    static EulerClass from_evaluations(std::int64_t a1, std::int64_t b1, std::int64_t v1,
                                       std::int64_t a2, std::int64_t b2, std::int64_t v2);

    // The class of the layer swallowed by a single bypass: the positive sign
    // gives e(mu) = -1, e(lambda) = 1, matching the layer a positive bypass
    // inserts around a standard neighborhood.
    static EulerClass single_bypass_layer(int sign);

private:
    std::int64_t mu_, lambda_;
};

// e(a*mu + b*lambda).
std::int64_t euler_linear_extend(const EulerClass& e, std::int64_t a, std::int64_t b);

} // namespace convexcalc::surface
