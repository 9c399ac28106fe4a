#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "convexcalc/bypass.hpp"
#include "convexcalc/convex_surface.hpp"
#include "convexcalc/seifert.hpp"

namespace convexcalc::replay {

using bypass::BypassSide;
using bypass::BypassSign;
using farey::Slope;
using seifert::FrameId;
using surface::PantsClass;

// One proof step.  A step either mutates the replay state, recomputes an
// arithmetic claim against an expectation literal, or records an axiom (a
// geometric existence claim the engine cannot derive; its arithmetic
// preconditions are still checked by the surrounding steps).
struct Step {
    enum class Kind {
        set_preset,
        set_twist,
        assert_outer_slope,
        imbalance,       // between two singular-fiber tori, or one side 'vert'
        imbalance_raw,   // explicit counts
        imbalance_scan,  // a twist range on the left side, all must imbalance
        apply_twist_lemma,
        cut_and_round,
        check_overtwisted,
        thicken_vertical,
        attach_bypass,
        stabilize,
        layer_euler,
        assert_euler_class,
        assert_euler_diagram,
        assert_regions,
        assert_twist,
        assert_pants,
        assert_fiber,
        check_interp,
        check_solid,
        axiom,
        begin_branch,
        end_branch,
    };

    Kind kind;
    int line = 0;
    std::string citation;

    // operands (used per kind)
    int fiber = 0, fiber2 = 0;               // singular-fiber indices, 0 = 'vert'
    std::int64_t int_a = 0, int_b = 0;       // twists, counts, scan bounds
    std::optional<Slope> slope_a, slope_b;   // slopes per kind
    std::optional<FrameId> frame;
    BypassSide side = BypassSide::front;
    BypassSign sign = BypassSign::positive;
    std::string text;                         // fixture name, axiom text, branch name
    std::vector<int> grants;                  // axiom: fibers granted a bypass

    // expectations
    std::optional<Slope> expect_slope;
    std::optional<std::int64_t> expect_int;
    std::optional<bool> expect_bool;
    std::optional<PantsClass> expect_pants;
    std::optional<std::pair<int, int>> expect_regions;
    std::optional<Slope> expect_slope2;       // assert_fiber inner slope
    bool expect_blocked = false;              // apply_twist_lemma boundary case

    bool has_expectation() const {
        return expect_slope || expect_int || expect_bool || expect_pants ||
               expect_regions || expect_slope2 || expect_blocked;
    }
};

enum class StepStatus { pass, fail, axiom };

struct StepRecord {
    int index = 0;
    std::string kind;
    std::string detail;
    std::string computed;
    std::string expected;
    StepStatus status = StepStatus::pass;
    std::string citation;
};

struct Trace {
    std::vector<StepRecord> records;
    int passed = 0, failed = 0, axioms = 0;
    bool ok() const { return failed == 0; }
    bool overtwisted_found = false;

    std::string render(bool color) const;
    std::string to_json() const;
};

// Parses the line-oriented scenario text: one step per line, '#' comments,
// citation in square brackets at the end of the line.
std::vector<Step> parse_scenario(const std::string& text);

// Rejects scenarios with uncited expectation literals.
void lint_scenario(const std::vector<Step>& steps);

// Executes the steps in order.  Step-level computation errors become fail
// records; only malformed scenarios throw.
Trace run(const std::vector<Step>& steps);

// Points at which a scenario carries an expectation literal, and a mutated
// copy with exactly that literal replaced by a different value.
struct MutationPoint {
    std::size_t step_index;
    std::string which;
};
std::vector<MutationPoint> expectation_points(const std::vector<Step>& steps);
std::vector<Step> perturb(const std::vector<Step>& steps, const MutationPoint& point);

// The shipped golden scenario: the proof that the Poincare sphere with
// reversed orientation carries no positive tight contact structure, as
// checkable steps.
const std::string& builtin_scenario_text();
std::vector<Step> builtin_etnyre_honda();

} // namespace convexcalc::replay
