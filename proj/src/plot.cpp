#include "bframe/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

namespace bframe {

using json = nlohmann::json;

SdoPlotData sdo_plot_data(const FiniteGroup& g) {
    if (g.backend() != FiniteGroup::Backend::zpq || g.q() != 2)
        throw domain_error("sdo_plot_data: group must be Z_p^2");
    if (g.p() > 64) throw capacity_error("sdo_plot_data: p above 64");
    SdoPartition part(g);
    SdoPlotData data;
    data.p = g.p();
    // group nontrivial orbits by the punctured line {s*g : s != 0} they lie on
    std::map<uint32_t, std::vector<uint32_t>> by_line;  // least point on line -> orbits
    for (uint32_t i = 1; i < part.orbit_count(); ++i) {
        std::vector<std::array<uint32_t, 2>> pts;
        for (uint32_t h : part.orbit(i)) {
            auto t = g.tuple_of(h);
            pts.push_back({t[0], t[1]});
        }
        uint32_t rep = part.representative(i);
        auto rt = g.tuple_of(rep);
        uint32_t least_on_line = g.order();
        for (uint32_t s = 1; s < g.p(); ++s) {
            uint32_t pt = g.index_of({s * rt[0] % g.p(), s * rt[1] % g.p()});
            least_on_line = std::min(least_on_line, pt);
        }
        by_line[least_on_line].push_back(i - 1);
        data.orbits.push_back(std::move(pts));
    }
    for (auto& [key, ids] : by_line) {
        std::sort(ids.begin(), ids.end());
        data.lines.push_back(ids);
    }
    return data;
}

std::string SdoPlotData::to_json() const {
    json j;
    j["p"] = p;
    json orbs = json::array();
    for (const auto& o : orbits) {
        json pts = json::array();
        for (const auto& pt : o) pts.push_back({pt[0], pt[1]});
        orbs.push_back(pts);
    }
    j["orbits"] = orbs;
    j["lines"] = lines;
    return j.dump(2);
}

std::string SdoPlotData::to_svg() const {
    // one panel per line through the origin, paired orbits in contrasting
    // colors, mirroring how complementary half-lines read best
    const int cell = 6;
    const int panel = static_cast<int>(p) * cell + 14;
    int ncols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(lines.size()))));
    if (ncols == 0) ncols = 1;
    int nrows = static_cast<int>((lines.size() + ncols - 1) / ncols);
    int width = ncols * panel + 10, height = nrows * panel + 10;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) +
                      "\" viewBox=\"0 0 " + std::to_string(width) + " " +
                      std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const char* pair_colors[2] = {"#c62828", "#212121"};
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int ox = 10 + static_cast<int>(li % ncols) * panel;
        int oy = 10 + static_cast<int>(li / ncols) * panel;
        svg += "<g>\n<rect x=\"" + std::to_string(ox) + "\" y=\"" + std::to_string(oy) +
               "\" width=\"" + std::to_string(panel - 10) + "\" height=\"" +
               std::to_string(panel - 10) + "\" fill=\"none\" stroke=\"#bbb\"/>\n";
        for (std::size_t oi = 0; oi < lines[li].size(); ++oi) {
            const auto& orbit = orbits[lines[li][oi]];
            const char* color = pair_colors[oi % 2];
            for (const auto& pt : orbit) {
                int cx = ox + 4 + static_cast<int>(pt[0]) * cell + cell / 2;
                int cy = oy + panel - 14 - static_cast<int>(pt[1]) * cell + cell / 2 - 4;
                svg += "<circle cx=\"" + std::to_string(cx) + "\" cy=\"" +
                       std::to_string(cy) + "\" r=\"2\" fill=\"" + color + "\"/>\n";
            }
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bframe
