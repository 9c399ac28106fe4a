#include "convexcalc/fixtures.hpp"

#include <map>

namespace convexcalc::surface {

namespace {

const std::map<std::string, std::string>& table() {
    static const std::map<std::string, std::string> t = {
        // meridional disk of V1 at twist 0: one arc, one region of each sign
        {"d1-disk", "surface disk\narc 1:0 1:1\nregion 0 +\n"},
        // meridional disk of V2: two arcs, two positive regions and one negative
        {"d2-disk", "surface disk\narc 1:0 1:1\narc 1:2 1:3\nregion 0 +\n"},
        // meridional disk of the thickened V1: an extra positive pocket
        {"d1p-disk", "surface disk\narc 1:0 1:1\narc 1:2 1:3\nregion 0 +\n"},
        // meridional disk of the thickened V2: three positive, one negative
        {"d2p-disk", "surface disk\narc 1:0 1:1\narc 1:2 1:3\narc 1:4 1:5\nregion 0 +\n"},
        // the layer annulus c x [0,1] between the old and new meridional
        // disks: two cross arcs plus one positive pocket on the outer side
        {"fig5a-annulus",
         "surface annulus\narc 1:0 2:0\narc 1:1 2:3\narc 2:1 2:2\nregion 2 +\n"},
        // pants configurations with two endpoints per boundary
        {"pants-a", "surface pants\narc 1:0 2:0\narc 2:1 3:0\narc 3:1 1:1\nregion 0 +\n"},
        {"pants-b", "surface pants\narc 1:0 1:1\narc 2:0 3:0\narc 2:1 3:1\nregion 0 +\n"},
        {"pants-c", "surface pants\narc 2:0 2:1\narc 1:0 3:0\narc 1:1 3:1\nregion 0 +\n"},
        {"pants-d",
         "surface pants\narc 1:0 1:1\narc 2:0 2:1\narc 3:0 3:1\nregion 0 +\n"},
        // the punctured-torus fiber with two parallel essential dividing arcs
        {"fiber-torus",
         "surface punctured-torus\narc 1:0 1:3 essential\narc 1:1 1:2 essential\n"
         "region 0 +\n"},
    };
    return t;
}

} // namespace

std::string fixture_text(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw engine_error("unknown fixture '" + name + "'");
    return it->second;
}

DividingSet fixture(const std::string& name) {
    return DividingSet::parse_text(fixture_text(name));
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : table()) names.push_back(k);
    return names;
}

} // namespace convexcalc::surface
