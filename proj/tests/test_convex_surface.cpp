#include <doctest.h>

#include <functional>
#include <memory>
#include <vector>

#include "convexcalc/convex_surface.hpp"
#include "convexcalc/fixtures.hpp"
#include "euler_oracle.hpp"

using namespace convexcalc;
using namespace convexcalc::surface;
using farey::GluingMatrix;
using farey::Slope;

namespace {

DividingSet ds(const std::string& text) { return DividingSet::parse_text(text); }

// all perfect matchings of the endpoint set, for the enumeration oracle
void matchings(std::vector<std::pair<int, int>> points,
               std::vector<std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>>& out,
               std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>& acc) {
    if (points.empty()) {
        out.push_back(acc);
        return;
    }
    auto first = points.front();
    for (std::size_t k = 1; k < points.size(); ++k) {
        auto rest = points;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        rest.erase(rest.begin());
        acc.push_back({first, points[k]});
        matchings(rest, out, acc);
        acc.pop_back();
    }
}

} // namespace

TEST_CASE("giroux criterion") {
    // contractible closed dividing curve kills tightness
    CHECK(!giroux_tight(ds("surface punctured-torus\nclosed trivial\n")));
    CHECK(!giroux_tight(ds("surface pants\nclosed trivial\n")));
    // the standard tight disk has a single diameter arc
    CHECK(giroux_tight(ds("surface disk\narc 1:0 1:1\n")));
    // a disk whose dividing set is empty is not the dividing set of a tight disk
    CHECK(!giroux_tight(ds("surface disk\n")));
    CHECK(giroux_tight(fixture("fiber-torus")));
    CHECK(giroux_tight(fixture("pants-a")));
}

TEST_CASE("twist of a curve on a framed torus") {
    auto frame = seifert::FrameId::inner(3);
    // one pair of slope -1 dividing curves against a slope-1 curve
    CHECK(twist_of_curve(FramedTorus(frame, 1, Slope(1, -1)), Slope(1, 1)) == -2);
    // determinant oracle: slope 1/m against the meridian
    for (std::int64_t m = -9; m <= 9; ++m) {
        if (m == 0) continue;
        CHECK(twist_of_curve(FramedTorus(frame, 1, Slope::one_over(m)), Slope::zero()) == -1);
    }
    CHECK(twist_of_curve(FramedTorus(frame, 3, Slope::zero()), Slope::infinity()) == -3);
    CHECK_THROWS_AS(twist_of_curve(FramedTorus(frame, 1, Slope::zero()), Slope::zero()),
                    equal_slopes_error);
    CHECK_THROWS_AS(FramedTorus(frame, 0, Slope::zero()), engine_error);
}

TEST_CASE("twist is equivariant under det-1 changes of basis") {
    auto frame = seifert::FrameId::inner(1);
    GluingMatrix mats[] = {GluingMatrix(2, -1, 1, 0), GluingMatrix(1, 4, 0, 1),
                           GluingMatrix(0, -1, 1, 3)};
    Slope slopes[] = {Slope::zero(), Slope::infinity(), Slope(2, -1), Slope(5, 3)};
    for (const auto& m : mats)
        for (const auto& s : slopes)
            for (const auto& c : slopes) {
                if (s == c) continue;
                for (int pairs = 1; pairs <= 3; ++pairs)
                    CHECK(twist_of_curve(FramedTorus(frame, pairs, apply(m, s)), apply(m, c)) ==
                          twist_of_curve(FramedTorus(frame, pairs, s), c));
            }
}

TEST_CASE("boundary parallel arcs") {
    CHECK(fixture("pants-a").boundary_parallel_arcs().empty());
    CHECK(!fixture("pants-b").boundary_parallel_arcs().empty());
    CHECK(!fixture("pants-c").boundary_parallel_arcs().empty());
    CHECK(!fixture("pants-d").boundary_parallel_arcs().empty());
    // the single arc of the minimal disk is the degenerate bypass: excluded
    CHECK(ds("surface disk\narc 1:0 1:1\n").boundary_parallel_arcs().empty());
    // with two arcs both pockets witness bypasses
    CHECK(ds("surface disk\narc 1:0 1:1\narc 1:2 1:3\n").boundary_parallel_arcs().size() == 2);
    // essential arcs never count: the fiber has no bypass to find
    CHECK(fixture("fiber-torus").boundary_parallel_arcs().empty());
    // but a trivial arc on the punctured torus does
    CHECK(ds("surface punctured-torus\narc 1:0 1:1\n").boundary_parallel_arcs().size() == 1);
}

TEST_CASE("pants classification") {
    CHECK(classify_pants(fixture("pants-a")) == PantsClass::A);
    CHECK(classify_pants(fixture("pants-b")) == PantsClass::B);
    CHECK(classify_pants(fixture("pants-c")) == PantsClass::C);
    CHECK(classify_pants(fixture("pants-d")) == PantsClass::D);
    // loop on boundary 3 alone is also D-type
    CHECK(classify_pants(ds("surface pants\narc 3:0 3:1\narc 1:0 2:0\narc 1:1 2:1\n")) ==
          PantsClass::D);
    CHECK_THROWS_AS(classify_pants(ds("surface pants\narc 1:0 1:1\narc 1:2 1:3\narc 2:0 "
                                      "3:0\narc 2:1 3:1\n")),
                    bad_boundary_count_error);
    // classification equals "no boundary-parallel arc" exactly for A
    for (const char* name : {"pants-a", "pants-b", "pants-c", "pants-d"}) {
        auto p = fixture(name);
        CHECK((classify_pants(p) == PantsClass::A) == p.boundary_parallel_arcs().empty());
    }
}

TEST_CASE("pants classification is stable under relabeling") {
    // swapping boundaries 2 and 3 fixes A and D and swaps nothing else here
    auto swap23 = [](const char* text) {
        std::string s(text);
        for (char& c : s) {
            if (c == '2')
                c = '3';
            else if (c == '3')
                c = '2';
        }
        return DividingSet::parse_text(s);
    };
    CHECK(classify_pants(swap23("surface pants\narc 1:0 2:0\narc 2:1 3:0\narc 3:1 1:1\n")) ==
          PantsClass::A);
    CHECK(classify_pants(swap23("surface pants\narc 1:0 1:1\narc 2:0 3:0\narc 2:1 3:1\n")) ==
          PantsClass::B);
    // a loop on 2 becomes a loop on 3: C goes to D
    CHECK(classify_pants(swap23("surface pants\narc 2:0 2:1\narc 1:0 3:0\narc 1:1 3:1\n")) ==
          PantsClass::D);
}

TEST_CASE("euler evaluation on fixtures") {
    CHECK(euler_eval_annulus(fixture("fig5a-annulus")) == 1);
    // two core-parallel curves, signs +,-,+: all regions annular
    CHECK(euler_eval_annulus(ds("surface annulus\nclosed core\nclosed core\nregion 0 +\n")) ==
          0);
    // one positive pocket on each side
    CHECK(euler_eval_annulus(ds("surface annulus\narc 1:0 1:1\narc 2:0 2:1\nregion 0 +\n")) ==
          2);
    CHECK_THROWS_AS(euler_eval_annulus(fixture("d1-disk")), engine_error);
}

TEST_CASE("region counts on the meridional disks") {
    CHECK(fixture("d1-disk").region_counts() == std::pair<int, int>{1, 1});
    CHECK(fixture("d2-disk").region_counts() == std::pair<int, int>{2, 1});
    CHECK(fixture("d1p-disk").region_counts() == std::pair<int, int>{2, 1});
    CHECK(fixture("d2p-disk").region_counts() == std::pair<int, int>{3, 1});
    CHECK(fixture("fiber-torus").region_counts() == std::pair<int, int>{1, 1});
}

TEST_CASE("invalid dividing sets are rejected") {
    // crossing chords
    CHECK_THROWS_AS(ds("surface disk\narc 1:0 1:2\narc 1:1 1:3\n"), invalid_dividing_set_error);
    // odd boundary count
    CHECK_THROWS_AS(ds("surface annulus\narc 1:0 2:0\narc 2:1 2:2\n"),
                    invalid_dividing_set_error);
    // a single essential arc does not divide
    CHECK_THROWS_AS(ds("surface punctured-torus\narc 1:0 1:1 essential\n"),
                    invalid_dividing_set_error);
    // essential arcs are a punctured-torus feature
    CHECK_THROWS_AS(ds("surface disk\narc 1:0 1:1 essential\n"), invalid_dividing_set_error);
    // core curves cannot coexist with cross arcs
    CHECK_THROWS_AS(ds("surface annulus\narc 1:0 2:0\narc 1:1 2:1\nclosed core\n"),
                    invalid_dividing_set_error);
    // signs that do not alternate
    CHECK_THROWS_AS(ds("surface disk\narc 1:0 1:1\nregion 0 +\nregion 1 +\n"),
                    invalid_dividing_set_error);
    // endpoint used twice
    CHECK_THROWS_AS(ds("surface disk\narc 1:0 1:1\narc 1:1 1:2\n"),
                    invalid_dividing_set_error);
    // closed curve labels are surface-specific
    CHECK_THROWS_AS(ds("surface disk\nclosed trivial\n"), invalid_dividing_set_error);
    CHECK_THROWS_AS(ds("surface annulus\nclosed trivial\n"), invalid_dividing_set_error);
    // parse errors carry line numbers
    try {
        ds("surface disk\nbogus 1 2\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line_number == 2);
    }
}

TEST_CASE("serialization round trip") {
    for (const auto& name : fixture_names()) {
        auto d = fixture(name);
        auto back = DividingSet::parse_text(d.serialize());
        CHECK(back.serialize() == d.serialize());
        if (d.signs_assigned()) CHECK(back.signed_euler() == d.signed_euler());
    }
}

TEST_CASE("signed euler matches the structural oracle on small annuli") {
    // every valid annulus diagram with up to 6 endpoints, both anchor signs
    int checked = 0;
    for (int n1 = 0; n1 <= 6; n1 += 2) {
        for (int n2 = 0; n2 + n1 <= 6; n2 += 2) {
            std::vector<std::pair<int, int>> points;
            for (int k = 0; k < n1; ++k) points.push_back({1, k});
            for (int k = 0; k < n2; ++k) points.push_back({2, k});
            std::vector<std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>> all;
            std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> acc;
            matchings(points, all, acc);
            for (const auto& matching : all) {
                std::vector<ArcSpec> arcs;
                for (const auto& [a, b] : matching)
                    arcs.push_back({{a.first, a.second}, {b.first, b.second}, false});
                bool has_cross = false;
                for (const auto& a : arcs)
                    if (a.a.bdy != a.b.bdy) has_cross = true;
                for (int cores = 0; cores <= (has_cross || n1 + n2 == 0 ? 0 : 2); ++cores) {
                    if (has_cross && cores > 0) continue;
                    std::vector<ClosedCurveSpec> closed(static_cast<std::size_t>(cores),
                                                        ClosedCurveSpec{"core"});
                    for (int anchor_sign : {1, -1}) {
                        std::unique_ptr<DividingSet> d;
                        try {
                            d = std::make_unique<DividingSet>(
                                SurfaceKind::annulus, arcs, closed,
                                std::vector<std::pair<int, int>>{{0, anchor_sign}});
                        } catch (const invalid_dividing_set_error&) {
                            continue;
                        }
                        oracle::Diagram od;
                        od.n1 = n1;
                        od.n2 = n2;
                        od.arcs = arcs;
                        od.cores = cores;
                        od.anchor_region = 0;
                        od.anchor_sign = anchor_sign;
                        CHECK(euler_eval_annulus(*d) == oracle::signed_euler(od));
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("euler class linear extension") {
    // pinned layer values: e(lambda) = 1, e(-mu-lambda) = 0 force e(-mu) = 1
    auto e = EulerClass::from_evaluations(0, 1, 1, -1, -1, 0);
    CHECK(e.on_mu() == -1);
    CHECK(e.on_lambda() == 1);
    CHECK(euler_linear_extend(e, 0, 1) == 1);
    CHECK(euler_linear_extend(e, -1, -1) == 0);
    CHECK(euler_linear_extend(e, -1, 0) == 1);
    // zero class
    auto z = EulerClass(0, 0);
    CHECK(euler_linear_extend(z, 7, -5) == 0);
    // plain linearity
    auto w = EulerClass(2, -1);
    CHECK(euler_linear_extend(w, 3, 1) == 5);
    // non-unimodular evaluation pairs are refused
    CHECK_THROWS_AS(EulerClass::from_evaluations(2, 0, 1, 0, 2, 1), engine_error);
    CHECK(EulerClass::single_bypass_layer(1).on_mu() == -1);
    CHECK(EulerClass::single_bypass_layer(-1).on_lambda() == -1);
}
