#include "convexcalc/scenario.hpp"

namespace convexcalc::replay {

// The shipped proof replay: the Poincare homology sphere with reversed
// orientation admits no positive tight contact structure.  Every arithmetic
// claim is recomputed; geometric existence claims are axiom steps whose
// arithmetic preconditions appear as the surrounding checks.  Contradiction
// side-cases run inside branches so the main line and every excluded case
// are exercised in one pass.
const std::string& builtin_scenario_text() {
    static const std::string text = R"(# Nonexistence of a positive tight structure on the reversed Poincare sphere.
# Stage 1: thicken the singular fibers.
preset poincare
set-twist 1 -4
set-twist 2 -4
set-twist 3 -3
assert-outer-slope 1 4/9                                     [outer slope table m/(2m-1)]
assert-outer-slope 2 -4/11                                   [outer slope table -m/(3m+1)]
assert-outer-slope 3 -3/14                                   [outer slope table -m/(5m+1)]
# Imbalance ladder: the vertical annulus between the second and third fibers
# carries a bypass on the side with the larger dividing count.
imbalance 2 3
apply-twist-lemma 3 expect -2                                [twist lemma, vertical ruling -5]
imbalance 2 3
apply-twist-lemma 2 expect -3                                [twist lemma, vertical ruling -3]
imbalance 2 3
apply-twist-lemma 3 expect -1                                [twist lemma, vertical ruling -5]
imbalance 2 3
apply-twist-lemma 2 expect -2                                [twist lemma, vertical ruling -3]
imbalance 2 3
apply-twist-lemma 2 expect -1                                [twist lemma, vertical ruling -3]
imbalance 2 3
apply-twist-lemma 3 expect blocked                           [twist lemma boundary case at -1]
# Equal-count side case: the no-bypass annulus at m2 = -5.
begin-branch equal-counts-minus5
set-twist 2 -5
set-twist 3 -3
imbalance 2 3
cut-and-round -5 -3 expect -1/2                              [cut the no-bypass annulus and round]
check-overtwisted 1 -1/2 cut-round expect true               [slope -1/2 is the first-fiber meridian]
axiom "a Legendrian divide of meridional slope bounds an overtwisted disk, contradicting tightness" [tightness contradiction closes the case]
end-branch
# Equal-count side case below -5: the radial-twisting argument.
begin-branch equal-counts-below5
set-twist 2 -10
set-twist 3 -6
imbalance 2 3
cut-and-round -10 -6 expect -15/29                           [cut slope below -1/2]
check-solid 15/29 1/2 contains inf expect true               [radial twisting reaches the vertical slope]
axiom "a vertical convex torus inside the solid torus yields a zero-twisting vertical Legendrian curve, and vertical annuli to the fibers carry bypasses" [radial-twisting case closes]
end-branch
# Main line at m2 = m3 = -1: the three-possibilities analysis.
assert-outer-slope 2 -1/2                                    [outer slope table at -1]
assert-outer-slope 3 -1/4                                    [outer slope table at -1]
axiom "the vertical annulus between the fibers carries zero, one or two boundary-parallel arcs on the second-fiber side" [case split on the annulus diagram]
begin-branch no-bypass-side
axiom "with no boundary-parallel arc, cutting along the annulus and rounding gives a torus of slope -1/2 in the first-fiber outer style" [rounding computation for the uncut case]
check-overtwisted 1 -1/2 cut-round expect true               [slope -1/2 is the first-fiber meridian]
end-branch
begin-branch one-bypass-side
axiom "with one boundary-parallel arc the rounded torus has slope -1 and the complementary layer twists past the vertical slope" [rounding computation for the one-arc case]
check-interp -1 -4/9 contains inf expect true                [the layer between slope -1 and the first-fiber boundary passes the vertical slope]
axiom "a vertical Legendrian divide of the interior vertical torus has zero twisting" [vertical curve from the layer]
end-branch
begin-branch two-bypass-side
attach-bypass outer:2 inf front expect -1                    [first vertical bypass on the second fiber]
attach-bypass outer:2 inf front expect inf                   [second vertical bypass reaches the vertical slope]
end-branch
axiom "in every case a vertical Legendrian curve with twisting number zero exists" grants 1,2,3 [vertical curve feeds the twist lemma]
apply-twist-lemma 1 expect -3                                [twist lemma, ruling of slope 2]
apply-twist-lemma 1 expect -2                                [twist lemma, ruling of slope 2]
apply-twist-lemma 1 expect -1                                [twist lemma, ruling of slope 2]
apply-twist-lemma 1 expect 0                                 [twist lemma tops out at 0]
apply-twist-lemma 1 expect blocked                           [twist lemma boundary case at 0]
thicken-vertical 1 "vertical annulus to the zero-twisting vertical curve" [two bypasses make the first outer boundary vertical]
thicken-vertical 2 "vertical annulus to the zero-twisting vertical curve" [two bypasses make the second outer boundary vertical]
thicken-vertical 3 "vertical annulus to the zero-twisting vertical curve" [four bypasses make the third outer boundary vertical]
# Stage 2: the punctured-torus fibration of the third-fiber complement.
assert-fiber expect -1/6 1                                   [fiber boundary slope from three first-fiber and two second-fiber disks]
assert-twist inner:3 1 expect -2                             [fiber boundary twist against the slope -1 dividing curves]
imbalance raw 0 4                                            [closed-curve annulus in the fiber meets the dividing sets 0 and 2m times]
axiom "a bypass always exists along the fiber boundary after isotoping the fiber" grants 3 [fiber bypass existence]
apply-twist-lemma 3 ruling 1 expect 0                        [twist lemma along the fiber boundary]
assert-outer-slope 3 0                                       [vertical inner slope maps to outer slope 0]
axiom "rerunning the thickening ladder with the vertical third fiber arranges the first twist at 0 and the second at -1" [increase ladder rerun]
set-twist 1 0
set-twist 2 -1
assert-outer-slope 1 0                                       [outer slope table at 0]
assert-outer-slope 2 -1/2                                    [outer slope table at -1]
imbalance 1 2
attach-bypass outer:2 inf front expect -1                    [vertical bypass thickens the second fiber to slope -1]
# Stage 3: thinning before thickening.
assert-regions d1-disk expect 1 1                            [first meridional disk: one region of each sign]
assert-regions d2-disk expect 2 1                            [second meridional disk: two positive, one negative]
stabilize 3 -                                                [peel the third fiber: core slope -1 under a vertical boundary]
check-interp -1 inf contains -5 expect true                  [the peeled layer passes the slope that is vertical outside]
imbalance raw 0 2                                            [the slope -5 annulus meets the dividing sets 0 and 2 times]
axiom "the stabilization sign makes the new bypass negative; attaching it thickens the first and second fibers and the swallowed layer carries the positive single-bypass euler class" [sign bookkeeping for the thickening]
layer-euler +
assert-euler class 0 1 expect 1                              [euler value on the vertical class]
assert-euler class -1 -1 expect 0                            [euler value on the antidiagonal class]
assert-euler class -1 0 expect 1                             [euler value on the meridional-disk boundary class]
assert-euler diagram fig5a-annulus expect 1                  [the layer annulus diagram evaluates to 1]
assert-regions d1p-disk expect 2 1                           [thickened first disk gains a positive region]
assert-regions d2p-disk expect 3 1                           [thickened second disk gains a positive region]
# Stage 4: the convex section of the circle bundle over the pants.
axiom "each boundary of the convex section meets the dividing set in exactly two points" [section setup]
assert-pants pants-a expect A                                [pair-connecting configuration]
assert-pants pants-b expect B                                [parallel arc on the outer boundary]
assert-pants pants-c expect C                                [parallel arc on the second boundary]
assert-pants pants-d expect D                                [all arcs boundary-parallel]
axiom "a boundary-parallel arc gives a degenerate bypass and a layer with boundary slopes 0 and infinity, and beyond it a second layer back to slope 0" [two-layer construction]
check-interp 0 inf contains -1/3 expect true                 [the stacked layers reach the second-fiber meridian slope]
axiom "the stacked layers realize the meridional slope, so the structure is overtwisted: only the pair-connecting configuration survives" [rejection of the parallel-arc configurations]
axiom "for each surviving configuration the tight structure on the fiber complement is unique" [uniqueness by cutting the handlebody along meridional disks]
# Stage 5: the endgame.
axiom "the fiber assembled from the meridional disks carries six bypasses along its boundary" grants 3 [six bypasses from the disk regions]
apply-twist-lemma 3 ruling 1 expect 1                        [twist lemma along the fiber boundary]
assert-outer-slope 3 -1/6                                    [outer slope table at 1]
imbalance-scan 2 3 from -20 to -1                            [the count 2|3m+1| never equals 12]
set-twist 2 -1
imbalance 2 3
attach-bypass outer:3 inf front expect -1/5                  [vertical bypass moves the outer slope to -1/5]
check-overtwisted 3 -1/5 outer:3 expect true                 [a Legendrian divide bounds a meridional disk: overtwisted]
)";
    return text;
}

} // namespace convexcalc::replay
