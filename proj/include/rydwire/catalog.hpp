#pragma once

#include "rydwire/graph.hpp"
#include "rydwire/wire.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rydwire {

// Named graphs with the vertex numbering of the experiment figures.
//
// Plain graphs: P4, C4, C6, S4, 3-pan, 3-pan-fig2, 5-pan, K5, K5-e, K3,3, A,
// S6, W7, X101, moser, 7K1. Wired graphs: C6, 5-pan, K5exp, K3,3exp, S6exp,
// moser-wired.
//
// Two labelings of the 3-pan appear in the figures: "3-pan" has the pendant
// vertex 1 attached to the triangle {2,3,4}; "3-pan-fig2" has the pendant 4
// attached to the triangle {1,2,3} and is the target of the wired 5-pan.
Graph catalog_get(std::string_view name);

// Wired construction behind a catalog name. Names without a wired form come
// back as zero-wire WiredGraphs whose base is catalog_get(name).
WiredGraph catalog_wired(std::string_view name);

// Canonical names, in catalog order.
std::vector<std::string> catalog_names();

} // namespace rydwire
