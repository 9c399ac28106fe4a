#include "convexcalc/dividing_set.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace convexcalc::surface {

std::string surface_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::disk: return "disk";
        case SurfaceKind::annulus: return "annulus";
        case SurfaceKind::pants: return "pants";
        case SurfaceKind::punctured_torus: return "punctured-torus";
    }
    return "?";
}

SurfaceKind parse_surface(const std::string& name) {
    if (name == "disk") return SurfaceKind::disk;
    if (name == "annulus") return SurfaceKind::annulus;
    if (name == "pants") return SurfaceKind::pants;
    if (name == "punctured-torus") return SurfaceKind::punctured_torus;
    throw parse_error("unknown surface '" + name + "'");
}

int boundary_count(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::disk: return 1;
        case SurfaceKind::annulus: return 2;
        case SurfaceKind::pants: return 3;
        case SurfaceKind::punctured_torus: return 1;
    }
    return 0;
}

int surface_euler(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::disk: return 1;
        case SurfaceKind::annulus: return 0;
        case SurfaceKind::pants: return -1;
        case SurfaceKind::punctured_torus: return -1;
    }
    return 0;
}

namespace {
struct ArcEnd {
    int arc;
    EndRef there;
};
} // namespace

// Builds the complementary regions of the diagram.  Boundary intervals are
// traced into cycles by following each arc from one endpoint to the other;
// the grouping of cycles into regions encodes the canonical embedding
// (same-boundary arcs cut off their clean span, cross arcs run parallel,
// essential arcs thread the handle of the punctured torus).  The identity
// sum(chi) == chi(surface) + #arcs gates everything the grouping rules do
// not cover.
class RegionBuilder {
public:
    explicit RegionBuilder(DividingSet& ds) : ds_(ds), nb_(boundary_count(ds.kind_)) {}

    void run(const std::vector<std::pair<int, int>>& region_signs) {
        index_endpoints();
        check_non_crossing();
        if (!placement_supported()) return;
        trace_cycles();
        group_regions();
        check_chi_identity();
        number_and_map();
        color(region_signs);
        ds_.regions_ok_ = true;
    }

    std::string why_unavailable() const { return why_; }

private:
    struct Group {
        std::vector<int> cycles; // traced cycle ids
        int synthetic = 0;       // closed-curve side cycles
        int genus = 0;
        int chi() const {
            return 2 - 2 * genus - static_cast<int>(cycles.size()) - synthetic;
        }
    };

    DividingSet& ds_;
    int nb_;
    std::map<std::pair<int, int>, ArcEnd> at_;
    std::map<int, std::pair<int, int>> pocket_span_; // arc -> clean span (from, to)
    std::vector<std::vector<int>> cycle_of_;
    int n_cycles_ = 0;
    std::vector<std::vector<std::pair<int, int>>> cycle_members_;
    std::vector<Group> groups_;
    std::vector<int> region_of_cycle_;
    std::vector<int> zone_regions_; // middle core zones, in order
    std::string why_;

    int count(int b) const { return ds_.endpoint_counts_[static_cast<std::size_t>(b - 1)]; }

    void index_endpoints() {
        for (std::size_t i = 0; i < ds_.arcs_.size(); ++i) {
            const ArcSpec& a = ds_.arcs_[i];
            at_[{a.a.bdy, a.a.idx}] = {static_cast<int>(i), a.b};
            at_[{a.b.bdy, a.b.idx}] = {static_cast<int>(i), a.a};
        }
    }

    bool same_bdy(const ArcSpec& a) const { return a.a.bdy == a.b.bdy; }

    static bool in_span(int x, int u, int v, int n) {
        if (u == v) return false;
        int rel_x = ((x - u) % n + n) % n;
        int rel_v = ((v - u) % n + n) % n;
        return rel_x > 0 && rel_x < rel_v;
    }

    void check_non_crossing() {
        for (std::size_t i = 0; i < ds_.arcs_.size(); ++i) {
            const ArcSpec& x = ds_.arcs_[i];
            if (!same_bdy(x)) continue;
            int n = count(x.a.bdy);
            for (std::size_t j = 0; j < ds_.arcs_.size(); ++j) {
                if (i == j) continue;
                const ArcSpec& y = ds_.arcs_[j];
                for (const EndRef* e : {&y.a, &y.b}) {
                    if (e->bdy != x.a.bdy) continue;
                    bool inside = in_span(e->idx, x.a.idx, x.b.idx, n);
                    const EndRef& partner = e == &y.a ? y.b : y.a;
                    bool partner_inside =
                        partner.bdy == x.a.bdy && in_span(partner.idx, x.a.idx, x.b.idx, n);
                    if (same_bdy(y) && x.a.bdy == y.a.bdy) {
                        if (inside != partner_inside)
                            throw invalid_dividing_set_error(
                                "arcs " + std::to_string(i) + " and " + std::to_string(j) +
                                " cross");
                    }
                }
            }
        }
        // every same-boundary trivial arc needs a clean span: only matched
        // trivial pairs inside it
        for (std::size_t i = 0; i < ds_.arcs_.size(); ++i) {
            const ArcSpec& x = ds_.arcs_[i];
            if (!same_bdy(x) || x.essential) continue;
            int b = x.a.bdy, n = count(b);
            auto clean = [&](int u, int v) {
                for (int k = 0; k < n; ++k) {
                    if (!in_span(k, u, v, n)) continue;
                    const ArcEnd& e = at_.at({b, k});
                    const ArcSpec& other = ds_.arcs_[static_cast<std::size_t>(e.arc)];
                    if (!same_bdy(other) || other.essential) return false;
                    if (e.there.bdy != b || !in_span(e.there.idx, u, v, n)) return false;
                }
                return true;
            };
            if (clean(x.a.idx, x.b.idx))
                pocket_span_[static_cast<int>(i)] = {x.a.idx, x.b.idx};
            else if (clean(x.b.idx, x.a.idx))
                pocket_span_[static_cast<int>(i)] = {x.b.idx, x.a.idx};
            else
                throw invalid_dividing_set_error("arc " + std::to_string(i) +
                                                 " has no clean boundary-parallel side");
        }
        // annulus cross arcs must be mutually parallel.  Positions run along
        // each boundary's own orientation (surface on the left), so the two
        // boundary words of a parallel family are reversed rotations of each
        // other.
        if (ds_.kind_ == SurfaceKind::annulus) {
            std::vector<int> w1, w2;
            for (int k = 0; k < count(1); ++k) {
                const ArcEnd& e = at_.at({1, k});
                if (e.there.bdy == 2) w1.push_back(e.arc);
            }
            for (int k = 0; k < count(2); ++k) {
                const ArcEnd& e = at_.at({2, k});
                if (e.there.bdy == 1) w2.push_back(e.arc);
            }
            if (!w1.empty()) {
                std::size_t c = w1.size();
                std::vector<int> w1r(w1.rbegin(), w1.rend());
                bool ok = false;
                for (std::size_t r = 0; r < c && !ok; ++r) {
                    bool match = true;
                    for (std::size_t k = 0; k < c; ++k)
                        if (w1r[k] != w2[(k + r) % c]) {
                            match = false;
                            break;
                        }
                    ok = match;
                }
                if (!ok)
                    throw invalid_dividing_set_error(
                        "cross arcs are not mutually parallel (cyclic orders differ)");
            }
        }
    }

    bool placement_supported() {
        for (const auto& c : ds_.closed_) {
            if (c.label == "core" && ds_.kind_ == SurfaceKind::annulus) continue;
            why_ = "closed curve '" + c.label + "' carries no position data";
            return false;
        }
        return true;
    }

    int& cycle_slot(int b, int j) {
        return cycle_of_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j)];
    }
    int cycle_at(int b, int j) const {
        return cycle_of_[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(j)];
    }

    void trace_cycles() {
        cycle_of_.assign(static_cast<std::size_t>(nb_), {});
        for (int b = 1; b <= nb_; ++b)
            cycle_of_[static_cast<std::size_t>(b - 1)].assign(
                static_cast<std::size_t>(std::max(count(b), 1)), -1);
        for (int b = 1; b <= nb_; ++b) {
            int n = count(b);
            if (n == 0) {
                cycle_slot(b, 0) = n_cycles_++;
                cycle_members_.push_back({{b, 0}});
                continue;
            }
            for (int j = 0; j < n; ++j) {
                if (cycle_slot(b, j) != -1) continue;
                int id = n_cycles_++;
                cycle_members_.push_back({});
                int cb = b, cj = j;
                while (cycle_slot(cb, cj) == -1) {
                    cycle_slot(cb, cj) = id;
                    cycle_members_[static_cast<std::size_t>(id)].push_back({cb, cj});
                    const ArcEnd& end = at_.at({cb, (cj + 1) % count(cb)});
                    cb = end.there.bdy;
                    cj = end.there.idx;
                }
            }
        }
    }

    bool interval_in_any_pocket(int b, int j) const {
        for (const auto& [arc, span] : pocket_span_) {
            const ArcSpec& a = ds_.arcs_[static_cast<std::size_t>(arc)];
            if (a.a.bdy != b) continue;
            int n = count(b);
            if (j == span.first || in_span(j, span.first, span.second, n)) return true;
        }
        return false;
    }

    int ambient_cycle(int b) const {
        int n = count(b);
        if (n == 0) return cycle_at(b, 0);
        for (int j = 0; j < n; ++j)
            if (!interval_in_any_pocket(b, j)) return cycle_at(b, j);
        throw invalid_dividing_set_error("boundary " + std::to_string(b) +
                                         " has no ambient interval");
    }

    void group_regions() {
        region_of_cycle_.assign(static_cast<std::size_t>(n_cycles_), -1);
        auto place = [&](const std::vector<int>& cycles, int synthetic, int genus) {
            int id = static_cast<int>(groups_.size());
            Group g;
            g.cycles = cycles;
            std::sort(g.cycles.begin(), g.cycles.end());
            g.cycles.erase(std::unique(g.cycles.begin(), g.cycles.end()), g.cycles.end());
            g.synthetic = synthetic;
            g.genus = genus;
            for (int c : g.cycles) {
                if (region_of_cycle_[static_cast<std::size_t>(c)] != -1)
                    throw invalid_dividing_set_error("conflicting region grouping");
                region_of_cycle_[static_cast<std::size_t>(c)] = id;
            }
            groups_.push_back(std::move(g));
            return id;
        };

        int cores = static_cast<int>(ds_.closed_.size());
        bool has_cross = false;
        for (const auto& a : ds_.arcs_)
            if (!same_bdy(a)) has_cross = true;

        switch (ds_.kind_) {
            case SurfaceKind::disk:
                break;
            case SurfaceKind::annulus: {
                if (cores > 0 && has_cross)
                    throw invalid_dividing_set_error("a core curve crosses every cross arc");
                if (!has_cross) {
                    int amb1 = ambient_cycle(1), amb2 = ambient_cycle(2);
                    if (cores == 0) {
                        if (amb1 == amb2)
                            throw invalid_dividing_set_error("ambient cycles coincide");
                        place({amb1, amb2}, 0, 0);
                    } else {
                        place({amb1}, 1, 0); // outer zone, first core on its far side
                        for (int z = 1; z < cores; ++z) {
                            int id = place({}, 2, 0);
                            zone_regions_.push_back(id);
                        }
                        place({amb2}, 1, 0);
                    }
                }
                break;
            }
            case SurfaceKind::pants: {
                std::set<int> crossed;
                for (const auto& a : ds_.arcs_)
                    if (!same_bdy(a)) {
                        crossed.insert(a.a.bdy);
                        crossed.insert(a.b.bdy);
                    }
                if (crossed.empty()) {
                    place({ambient_cycle(1), ambient_cycle(2), ambient_cycle(3)}, 0, 0);
                } else if (crossed.size() == 2) {
                    int untouched = 6 - *crossed.begin() - *crossed.rbegin();
                    int bstar = *crossed.begin();
                    int kstar = -1;
                    for (int k = 0; k < count(bstar); ++k)
                        if (!same_bdy(
                                ds_.arcs_[static_cast<std::size_t>(at_.at({bstar, k}).arc)]))
                            kstar = k;
                    place({ambient_cycle(untouched), cycle_at(bstar, kstar)}, 0, 0);
                }
                break;
            }
            case SurfaceKind::punctured_torus: {
                std::vector<int> essential;
                for (std::size_t i = 0; i < ds_.arcs_.size(); ++i)
                    if (ds_.arcs_[i].essential) essential.push_back(static_cast<int>(i));
                if (essential.empty()) {
                    place({ambient_cycle(1)}, 0, 1);
                } else {
                    // The extreme arcs of the nested chain are the ones with a
                    // span free of other essential endpoints; the gap cycles on
                    // those spans close up into one annular region.
                    int n = count(1);
                    auto clean_of_essential = [&](int u, int v) {
                        for (int e : essential) {
                            const ArcSpec& o = ds_.arcs_[static_cast<std::size_t>(e)];
                            if (o.a.idx == u || o.a.idx == v) continue;
                            if (in_span(o.a.idx, u, v, n) || in_span(o.b.idx, u, v, n))
                                return false;
                        }
                        return true;
                    };
                    std::vector<int> gap_starts;
                    for (int e : essential) {
                        const ArcSpec& a = ds_.arcs_[static_cast<std::size_t>(e)];
                        if (clean_of_essential(a.a.idx, a.b.idx)) gap_starts.push_back(a.a.idx);
                        if (clean_of_essential(a.b.idx, a.a.idx)) gap_starts.push_back(a.b.idx);
                    }
                    if (gap_starts.size() != 2)
                        throw invalid_dividing_set_error(
                            "essential arcs must form a single nested chain");
                    place({cycle_at(1, gap_starts[0]), cycle_at(1, gap_starts[1])}, 0, 0);
                }
                break;
            }
        }
        for (int c = 0; c < n_cycles_; ++c)
            if (region_of_cycle_[static_cast<std::size_t>(c)] == -1) place({c}, 0, 0);
    }

    void check_chi_identity() {
        int total = 0;
        for (const Group& g : groups_) total += g.chi();
        int target = surface_euler(ds_.kind_) + static_cast<int>(ds_.arcs_.size());
        if (total != target)
            throw invalid_dividing_set_error(
                "unsupported diagram: region chi sum " + std::to_string(total) +
                " does not match " + std::to_string(target));
    }

    void number_and_map() {
        int n_regions = static_cast<int>(groups_.size());
        std::vector<std::pair<std::pair<int, int>, int>> keys;
        for (int r = 0; r < n_regions; ++r) {
            std::pair<int, int> best{99, 0};
            if (groups_[static_cast<std::size_t>(r)].cycles.empty()) {
                int zi = static_cast<int>(std::find(zone_regions_.begin(), zone_regions_.end(),
                                                    r) -
                                          zone_regions_.begin());
                best = {99, zi};
            } else {
                for (int cyc : groups_[static_cast<std::size_t>(r)].cycles)
                    for (const auto& iv : cycle_members_[static_cast<std::size_t>(cyc)])
                        best = std::min(best, iv);
            }
            keys.push_back({best, r});
        }
        std::sort(keys.begin(), keys.end());
        std::vector<int> renumber(static_cast<std::size_t>(n_regions));
        for (int newid = 0; newid < n_regions; ++newid)
            renumber[static_cast<std::size_t>(keys[static_cast<std::size_t>(newid)].second)] =
                newid;

        ds_.regions_.assign(static_cast<std::size_t>(n_regions), Region{});
        for (int r = 0; r < n_regions; ++r) {
            Region& out =
                ds_.regions_[static_cast<std::size_t>(renumber[static_cast<std::size_t>(r)])];
            out.chi = groups_[static_cast<std::size_t>(r)].chi();
            std::pair<int, int> best{99, 0};
            for (int cyc : groups_[static_cast<std::size_t>(r)].cycles)
                for (const auto& iv : cycle_members_[static_cast<std::size_t>(cyc)]) {
                    out.intervals.push_back(iv);
                    best = std::min(best, iv);
                }
            std::sort(out.intervals.begin(), out.intervals.end());
            out.key_bdy = best.first;
            out.key_pos = best.second;
        }

        ds_.interval_region_.clear();
        for (int b = 1; b <= nb_; ++b) {
            int n = std::max(count(b), 1);
            for (int j = 0; j < n; ++j)
                ds_.interval_region_.push_back(renumber[static_cast<std::size_t>(
                    region_of_cycle_[static_cast<std::size_t>(cycle_at(b, j))])]);
        }

        adjacency_.clear();
        for (const auto& [key, end] : at_) {
            (void)end;
            int b = key.first, k = key.second;
            int n = count(b);
            int r1 = ds_.interval_region_[static_cast<std::size_t>(
                ds_.interval_index(b, (k - 1 + n) % n))];
            int r2 =
                ds_.interval_region_[static_cast<std::size_t>(ds_.interval_index(b, k))];
            adjacency_.push_back({r1, r2});
        }
        if (!ds_.closed_.empty() && ds_.kind_ == SurfaceKind::annulus) {
            std::vector<int> chain;
            chain.push_back(renumber[static_cast<std::size_t>(
                region_of_cycle_[static_cast<std::size_t>(ambient_cycle(1))])]);
            for (int z : zone_regions_) chain.push_back(renumber[static_cast<std::size_t>(z)]);
            chain.push_back(renumber[static_cast<std::size_t>(
                region_of_cycle_[static_cast<std::size_t>(ambient_cycle(2))])]);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                adjacency_.push_back({chain[i], chain[i + 1]});
        }
    }

    void color(const std::vector<std::pair<int, int>>& region_signs) {
        int n_regions = static_cast<int>(groups_.size());
        std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n_regions));
        for (const auto& [a, b] : adjacency_) {
            if (a == b)
                throw invalid_dividing_set_error(
                    "a region is adjacent to itself: no two-coloring exists");
            nbr[static_cast<std::size_t>(a)].push_back(b);
            nbr[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<int> tone(static_cast<std::size_t>(n_regions), 0);
        for (int start = 0; start < n_regions; ++start) {
            if (tone[static_cast<std::size_t>(start)] != 0) continue;
            tone[static_cast<std::size_t>(start)] = 1;
            std::queue<int> q;
            q.push(start);
            while (!q.empty()) {
                int r = q.front();
                q.pop();
                for (int s : nbr[static_cast<std::size_t>(r)]) {
                    if (tone[static_cast<std::size_t>(s)] == 0) {
                        tone[static_cast<std::size_t>(s)] = -tone[static_cast<std::size_t>(r)];
                        q.push(s);
                    } else if (tone[static_cast<std::size_t>(s)] ==
                               tone[static_cast<std::size_t>(r)]) {
                        throw invalid_dividing_set_error("regions are not two-colorable");
                    }
                }
            }
        }
        if (region_signs.empty()) return;
        int anchor = -1, anchor_sign = 0;
        for (const auto& [id, s] : region_signs) {
            if (id < 0 || id >= n_regions)
                throw invalid_dividing_set_error("region id " + std::to_string(id) +
                                                 " out of range");
            if (anchor == -1) {
                anchor = id;
                anchor_sign = s;
            }
        }
        for (int r = 0; r < n_regions; ++r) {
            int expect =
                tone[static_cast<std::size_t>(r)] == tone[static_cast<std::size_t>(anchor)]
                    ? anchor_sign
                    : -anchor_sign;
            ds_.regions_[static_cast<std::size_t>(r)].sign = expect;
        }
        for (const auto& [id, s] : region_signs)
            if (ds_.regions_[static_cast<std::size_t>(id)].sign != s)
                throw invalid_dividing_set_error("region signs do not alternate");
    }

    std::vector<std::pair<int, int>> adjacency_;
};

int DividingSet::interval_index(int bdy, int pos) const {
    int off = 0;
    for (int b = 1; b < bdy; ++b) off += std::max(endpoints_on(b), 1);
    return off + pos;
}

int DividingSet::endpoints_on(int bdy) const {
    if (bdy < 1 || bdy > boundary_count(kind_)) throw engine_error("boundary out of range");
    return endpoint_counts_[static_cast<std::size_t>(bdy - 1)];
}

DividingSet::DividingSet(SurfaceKind kind, std::vector<ArcSpec> arcs,
                         std::vector<ClosedCurveSpec> closed,
                         std::vector<std::pair<int, int>> region_signs)
    : kind_(kind), arcs_(std::move(arcs)), closed_(std::move(closed)) {
    int nb = boundary_count(kind_);
    endpoint_counts_.assign(static_cast<std::size_t>(nb), 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& a : arcs_) {
        for (const EndRef& e : {a.a, a.b}) {
            if (e.bdy < 1 || e.bdy > nb)
                throw invalid_dividing_set_error("boundary " + std::to_string(e.bdy) +
                                                 " out of range");
            if (e.idx < 0) throw invalid_dividing_set_error("negative endpoint index");
            if (!seen.insert({e.bdy, e.idx}).second)
                throw invalid_dividing_set_error("endpoint " + std::to_string(e.bdy) + ":" +
                                                 std::to_string(e.idx) + " used twice");
            auto& n = endpoint_counts_[static_cast<std::size_t>(e.bdy - 1)];
            n = std::max(n, e.idx + 1);
        }
        if (a.a == a.b) throw invalid_dividing_set_error("arc with equal endpoints");
        if (a.essential && kind_ != SurfaceKind::punctured_torus)
            throw invalid_dividing_set_error("essential arcs only live on the punctured torus");
        if (a.essential && a.a.bdy != a.b.bdy)
            throw invalid_dividing_set_error("essential arcs start and end on the boundary");
    }
    for (int b = 1; b <= nb; ++b) {
        int n = endpoint_counts_[static_cast<std::size_t>(b - 1)];
        for (int k = 0; k < n; ++k)
            if (!seen.count({b, k}))
                throw invalid_dividing_set_error("endpoint positions on boundary " +
                                                 std::to_string(b) + " must be 0.." +
                                                 std::to_string(n - 1) + " with no gaps");
        if (n % 2 != 0)
            throw invalid_dividing_set_error("boundary " + std::to_string(b) +
                                             " meets the dividing set an odd number of times");
    }
    for (const auto& c : closed_) {
        bool ok = false;
        switch (kind_) {
            case SurfaceKind::disk: ok = false; break;
            case SurfaceKind::annulus: ok = c.label == "core"; break;
            case SurfaceKind::pants: ok = c.label == "trivial"; break;
            case SurfaceKind::punctured_torus:
                ok = c.label == "trivial" || c.label == "essential";
                break;
        }
        if (!ok)
            throw invalid_dividing_set_error("closed curve '" + c.label +
                                             "' is not representable on a " +
                                             surface_name(kind_));
    }

    RegionBuilder builder(*this);
    builder.run(region_signs);
    if (!regions_ok_) {
        regions_unavailable_why_ = builder.why_unavailable();
        if (!region_signs.empty())
            throw invalid_dividing_set_error("region signs given but " +
                                             regions_unavailable_why_);
    }
}

bool DividingSet::has_contractible_closed_curve() const {
    for (const auto& c : closed_)
        if (c.label == "trivial") return true;
    return false;
}

const std::vector<Region>& DividingSet::regions() const {
    if (!regions_ok_)
        throw invalid_dividing_set_error("regions unavailable: " + regions_unavailable_why_);
    return regions_;
}

bool DividingSet::signs_assigned() const {
    if (!regions_ok_ || regions_.empty()) return false;
    for (const auto& r : regions_)
        if (r.sign == 0) return false;
    return true;
}

std::int64_t DividingSet::signed_euler() const {
    if (!signs_assigned())
        throw invalid_dividing_set_error("signed euler needs region signs");
    std::int64_t total = 0;
    for (const auto& r : regions()) total += r.sign * r.chi;
    return total;
}

std::pair<int, int> DividingSet::region_counts() const {
    if (!signs_assigned())
        throw invalid_dividing_set_error("region counts need region signs");
    int pos = 0, neg = 0;
    for (const auto& r : regions())
        (r.sign > 0 ? pos : neg) += 1;
    return {pos, neg};
}

std::vector<int> DividingSet::boundary_parallel_arcs() const {
    std::vector<int> out;
    if (kind_ == SurfaceKind::disk && arcs_.size() == 1) return out;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const ArcSpec& a = arcs_[i];
        if (a.essential || a.a.bdy != a.b.bdy) continue;
        int n = endpoints_on(a.a.bdy);
        int d1 = ((a.b.idx - a.a.idx) % n + n) % n;
        int d2 = ((a.a.idx - a.b.idx) % n + n) % n;
        if (d1 == 1 || d2 == 1) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::string DividingSet::serialize() const {
    std::ostringstream os;
    os << "surface " << surface_name(kind_) << "\n";
    for (const auto& a : arcs_) {
        os << "arc " << a.a.bdy << ":" << a.a.idx << " " << a.b.bdy << ":" << a.b.idx;
        if (a.essential) os << " essential";
        os << "\n";
    }
    for (const auto& c : closed_) os << "closed " << c.label << "\n";
    if (regions_ok_)
        for (std::size_t r = 0; r < regions_.size(); ++r)
            if (regions_[r].sign != 0)
                os << "region " << r << " " << (regions_[r].sign > 0 ? "+" : "-") << "\n";
    return os.str();
}

std::string DividingSet::describe_regions() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < regions().size(); ++r) {
        const Region& reg = regions_[r];
        os << "region " << r << ": chi=" << reg.chi
           << " sign=" << (reg.sign > 0 ? "+" : reg.sign < 0 ? "-" : "?") << " intervals=";
        for (std::size_t k = 0; k < reg.intervals.size(); ++k) {
            if (k) os << ",";
            os << reg.intervals[k].first << ":" << reg.intervals[k].second;
        }
        os << "\n";
    }
    return os.str();
}

DividingSet DividingSet::parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool have_kind = false;
    SurfaceKind kind = SurfaceKind::disk;
    std::vector<ArcSpec> arcs;
    std::vector<ClosedCurveSpec> closed;
    std::vector<std::pair<int, int>> signs;
    auto parse_endref = [&](const std::string& tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw parse_error(lineno, "bad endpoint '" + tok + "'");
        try {
            return EndRef{std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))};
        } catch (const std::exception&) {
            throw parse_error(lineno, "bad endpoint '" + tok + "'");
        }
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "surface") {
            std::string name;
            if (!(ls >> name)) throw parse_error(lineno, "surface needs a name");
            kind = parse_surface(name);
            have_kind = true;
        } else if (key == "arc") {
            std::string a, b, flag;
            if (!(ls >> a >> b)) throw parse_error(lineno, "arc needs two endpoints");
            ArcSpec arc{parse_endref(a), parse_endref(b), false};
            if (ls >> flag) {
                if (flag != "essential")
                    throw parse_error(lineno, "unknown arc flag '" + flag + "'");
                arc.essential = true;
            }
            arcs.push_back(arc);
        } else if (key == "closed") {
            std::string label;
            if (!(ls >> label)) throw parse_error(lineno, "closed needs a label");
            closed.push_back({label});
        } else if (key == "region") {
            int id;
            std::string s;
            if (!(ls >> id >> s) || (s != "+" && s != "-"))
                throw parse_error(lineno, "region needs '<id> +|-'");
            signs.push_back({id, s == "+" ? 1 : -1});
        } else {
            throw parse_error(lineno, "unknown directive '" + key + "'");
        }
    }
    if (!have_kind) throw parse_error("missing 'surface' line");
    return DividingSet(kind, std::move(arcs), std::move(closed), std::move(signs));
}

} // namespace convexcalc::surface
