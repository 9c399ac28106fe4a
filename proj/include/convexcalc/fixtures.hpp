#pragma once

#include <string>

#include "convexcalc/dividing_set.hpp"

namespace convexcalc::surface {

// Dividing-set diagrams the replay scenario and the diagram tool refer to by
// name.  Region ids follow the canonical numbering (lowest boundary interval
// first).
std::string fixture_text(const std::string& name);
DividingSet fixture(const std::string& name);
std::vector<std::string> fixture_names();

} // namespace convexcalc::surface
