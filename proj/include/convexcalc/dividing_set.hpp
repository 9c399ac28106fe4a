#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexcalc/errors.hpp"

namespace convexcalc::surface {

enum class SurfaceKind { disk, annulus, pants, punctured_torus };

std::string surface_name(SurfaceKind k);
SurfaceKind parse_surface(const std::string& name);
int boundary_count(SurfaceKind k);
int surface_euler(SurfaceKind k);

// One endpoint of a dividing arc: boundary component (1-based) and position
// index (0-based, cyclic) along that boundary.
struct EndRef {
    int bdy;
    int idx;
    friend bool operator==(const EndRef& a, const EndRef& b) {
        return a.bdy == b.bdy && a.idx == b.idx;
    }
};

struct ArcSpec {
    EndRef a, b;
    // Essential arcs run through the handle of the punctured torus; they are
    // only legal there and must form a nested chain.  Everything else is
    // boundary-parallel/trivial in the planar model.
    bool essential = false;
};

// Closed dividing curves carry a homotopy label, not a position:
//   "trivial"  - contractible (kills tightness)
//   "core"     - the core of the annulus
//   "essential" - a non-separating curve on the punctured torus
struct ClosedCurveSpec {
    std::string label;
};

// A complementary region of the dividing set.  chi is computed from the
// traced boundary structure (2 - 2*genus - #boundary cycles); sign is +1/-1
// once assigned.
struct Region {
    int chi = 1;
    int sign = 0;
    // smallest (bdy, interval) key for canonical numbering; core zones have
    // bdy == 0 and use the core index
    int key_bdy = 0;
    int key_pos = 0;
    std::vector<std::pair<int, int>> intervals; // (bdy, pos) touched
};

// A combinatorial dividing set on a compact surface: a non-crossing
// arc/curve diagram with two-colored complementary regions.  The isotopy
// class of the diagram is all that is stored; no embedded geometry.
class DividingSet {
public:
    DividingSet(SurfaceKind kind, std::vector<ArcSpec> arcs,
                std::vector<ClosedCurveSpec> closed,
                std::vector<std::pair<int, int>> region_signs = {});

    SurfaceKind kind() const { return kind_; }
    const std::vector<ArcSpec>& arcs() const { return arcs_; }
    const std::vector<ClosedCurveSpec>& closed_curves() const { return closed_; }
    int endpoints_on(int bdy) const;

    bool has_contractible_closed_curve() const;

    // Region structure.  Computable for every diagram this encoding can
    // carry positions for; label-only curve placements make it unavailable.
    bool regions_available() const { return regions_ok_; }
    const std::vector<Region>& regions() const;
    bool signs_assigned() const;

    // chi(positive regions) - chi(negative regions)
    std::int64_t signed_euler() const;
    // (#positive, #negative)
    std::pair<int, int> region_counts() const;

    // Arc ids (indices into arcs()) that cut off a half-disk containing no
    // other endpoint.  The single arc of the minimal disk is excluded: that
    // would be the degenerate bypass of the standard tight disk.
    std::vector<int> boundary_parallel_arcs() const;

    std::string serialize() const;
    std::string describe_regions() const;
    static DividingSet parse_text(const std::string& text);

private:
    void validate_and_build();

    SurfaceKind kind_;
    std::vector<ArcSpec> arcs_;
    std::vector<ClosedCurveSpec> closed_;
    std::vector<int> endpoint_counts_;
    std::vector<Region> regions_;
    std::vector<int> interval_region_; // flattened (bdy, pos) -> region id
    bool regions_ok_ = false;
    std::string regions_unavailable_why_;

    int interval_index(int bdy, int pos) const;
    friend class RegionBuilder;
};

} // namespace convexcalc::surface
