#include <doctest.h>

#include <set>

#include "bframe/plot.hpp"

using namespace bframe;

namespace {

std::set<std::pair<uint32_t, uint32_t>> punctured_line(uint32_t p, uint32_t g0, uint32_t g1) {
    std::set<std::pair<uint32_t, uint32_t>> pts;
    for (uint32_t s = 1; s < p; ++s) pts.insert({s * g0 % p, s * g1 % p});
    return pts;
}

}  // namespace

TEST_CASE("orbits of Z_17^2 pair into complementary half-lines") {
    SdoPlotData data = sdo_plot_data(FiniteGroup::zpq(17, 2));
    CHECK(data.orbits.size() == 36);
    CHECK(data.lines.size() == 18);
    for (const auto& line : data.lines) {
        REQUIRE(line.size() == 2);
        const auto& a = data.orbits[line[0]];
        const auto& b = data.orbits[line[1]];
        CHECK(a.size() == 8);
        CHECK(b.size() == 8);
        std::set<std::pair<uint32_t, uint32_t>> joint;
        for (const auto& pt : a) joint.insert({pt[0], pt[1]});
        for (const auto& pt : b) joint.insert({pt[0], pt[1]});
        CHECK(joint.size() == 16);  // disjoint halves
        CHECK(joint == punctured_line(17, a[0][0], a[0][1]));
    }
}

TEST_CASE("small primes fill whole punctured lines") {
    for (uint32_t p : {3u, 7u}) {
        SdoPlotData data = sdo_plot_data(FiniteGroup::zpq(p, 2));
        CHECK(data.orbits.size() == p + 1);
        CHECK(data.lines.size() == p + 1);
        for (const auto& line : data.lines) {
            REQUIRE(line.size() == 1);
            const auto& orbit = data.orbits[line[0]];
            std::set<std::pair<uint32_t, uint32_t>> pts;
            for (const auto& pt : orbit) pts.insert({pt[0], pt[1]});
            CHECK(pts == punctured_line(p, orbit[0][0], orbit[0][1]));
        }
    }
}

TEST_CASE("plot outputs") {
    SdoPlotData data = sdo_plot_data(FiniteGroup::zpq(3, 2));
    std::string svg = data.to_svg();
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("circle") != std::string::npos);
    CHECK(data.to_json().find("\"p\": 3") != std::string::npos);

    CHECK_THROWS_AS(sdo_plot_data(FiniteGroup::zpq(3, 3)), domain_error);
    CHECK_THROWS_AS(sdo_plot_data(FiniteGroup::cyclic(9)), domain_error);
}
