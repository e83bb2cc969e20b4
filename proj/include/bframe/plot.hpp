#pragma once

#include <array>
#include <string>
#include <vector>

#include "bframe/gramchar.hpp"
#include "bframe/group.hpp"

namespace bframe {

// Scatter data for the symmetric doubling orbits of Z_p^2: each nontrivial
// orbit lies on a line through the origin, either filling the punctured line
// or splitting it into two complementary halves.
struct SdoPlotData {
    uint32_t p = 0;
    // nontrivial orbits as (g_1, g_2) point lists
    std::vector<std::vector<std::array<uint32_t, 2>>> orbits;
    // orbit ids grouped by the line they live on (size 1 or 2 per line)
    std::vector<std::vector<uint32_t>> lines;

    std::string to_json() const;
    std::string to_svg() const;
};

SdoPlotData sdo_plot_data(const FiniteGroup& g);

}  // namespace bframe
