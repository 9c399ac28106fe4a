#include "convexcalc/convex_surface.hpp"

#include <set>

namespace convexcalc::surface {

bool giroux_tight(const DividingSet& ds) {
    if (ds.has_contractible_closed_curve()) return false;
    if (ds.kind() == SurfaceKind::disk) return !ds.arcs().empty();
    return true;
}

std::int64_t twist_of_curve(const FramedTorus& t, const Slope& c) {
    if (c == t.slope) throw equal_slopes_error("curve is a Legendrian divide");
    return checked_mul(-static_cast<std::int64_t>(t.pairs),
                       farey::intersection_number(t.slope, c));
}

std::string pants_class_name(PantsClass c) {
    switch (c) {
        case PantsClass::A: return "A";
        case PantsClass::B: return "B";
        case PantsClass::C: return "C";
        case PantsClass::D: return "D";
    }
    return "?";
}

PantsClass parse_pants_class(const std::string& name) {
    if (name == "A") return PantsClass::A;
    if (name == "B") return PantsClass::B;
    if (name == "C") return PantsClass::C;
    if (name == "D") return PantsClass::D;
    throw parse_error("unknown pants class '" + name + "'");
}

PantsClass classify_pants(const DividingSet& ds) {
    if (ds.kind() != SurfaceKind::pants)
        throw engine_error("pants classification needs a pants surface");
    for (int b = 1; b <= 3; ++b)
        if (ds.endpoints_on(b) != 2)
            throw bad_boundary_count_error("boundary " + std::to_string(b) + " has " +
                                           std::to_string(ds.endpoints_on(b)) + " endpoints");
    std::set<int> loops;
    for (const auto& a : ds.arcs())
        if (a.a.bdy == a.b.bdy) loops.insert(a.a.bdy);
    if (loops.empty()) return PantsClass::A;
    if (loops.size() == 3) return PantsClass::D;
    int b = *loops.begin();
    switch (b) {
        case 1: return PantsClass::B;
        case 2: return PantsClass::C;
        default: return PantsClass::D;
    }
}

std::int64_t euler_eval_annulus(const DividingSet& ds) {
    if (ds.kind() != SurfaceKind::annulus)
        throw engine_error("euler_eval_annulus needs an annulus");
    return ds.signed_euler();
}

EulerClass EulerClass::from_evaluations(std::int64_t a1, std::int64_t b1, std::int64_t v1,
                                        std::int64_t a2, std::int64_t b2, std::int64_t v2) {
    __int128 det = static_cast<__int128>(a1) * b2 - static_cast<__int128>(a2) * b1;
    if (det != 1 && det != -1)
        throw engine_error("euler class evaluations must use a unimodular pair of classes");
    std::int64_t d = static_cast<std::int64_t>(det);
    // invert [[a1,b1],[a2,b2]] applied to (v1,v2)
    std::int64_t mu = checked_mul(d, checked_sub(checked_mul(b2, v1), checked_mul(b1, v2)));
    std::int64_t la = checked_mul(d, checked_sub(checked_mul(a1, v2), checked_mul(a2, v1)));
    return EulerClass(mu, la);
}

EulerClass EulerClass::single_bypass_layer(int sign) {
    if (sign != 1 && sign != -1) throw engine_error("bypass sign must be +1 or -1");
    return EulerClass(-sign, sign);
}

std::int64_t euler_linear_extend(const EulerClass& e, std::int64_t a, std::int64_t b) {
    return checked_add(checked_mul(a, e.on_mu()), checked_mul(b, e.on_lambda()));
}

} // namespace convexcalc::surface
