#include <doctest.h>

#include <cmath>
#include <sstream>

#include "coxlimits/io.hpp"
#include "coxlimits/render.hpp"
#include "fixtures.hpp"

using namespace coxlimits;

namespace {

// pulls "cx" / "cy" attribute pairs out of the svg text for one group
std::vector<std::pair<double, double>> circle_centers(const std::string& svg,
                                                      const std::string& group_id) {
    std::vector<std::pair<double, double>> out;
    const auto begin = svg.find("<g id=\"" + group_id + "\"");
    if (begin == std::string::npos) return out;
    const auto end = svg.find("</g>", begin);
    size_t pos = begin;
    while (true) {
        pos = svg.find("cx=\"", pos);
        if (pos == std::string::npos || pos > end) break;
        const double x = std::stod(svg.substr(pos + 4));
        const auto ypos = svg.find("cy=\"", pos);
        const double y = std::stod(svg.substr(ypos + 4));
        out.push_back({x, y});
        pos = ypos;
    }
    return out;
}

std::vector<std::pair<double, double>> polyline_points(const std::string& svg) {
    std::vector<std::pair<double, double>> out;
    const auto begin = svg.find("<g id=\"conic\"");
    const auto path = svg.find("<path d=\"", begin);
    if (path == std::string::npos) return out;
    const auto stop = svg.find("\"/>", path);
    size_t pos = path + 9;
    while (pos < stop) {
        if (svg[pos] == 'M' || svg[pos] == 'L') {
            const double x = std::stod(svg.substr(pos + 1));
            const auto space = svg.find(' ', pos + 1);
            const double y = std::stod(svg.substr(space + 1));
            out.push_back({x, y});
        }
        ++pos;
    }
    return out;
}

}  // namespace

TEST_CASE("fmt17 round-trips doubles") {
    for (double v : {2.0 / 3.0, 1e-17, -0.125, 21.3125, 1.0 / 0.3}) {
        CHECK(std::stod(fmt17(v)) == v);
    }
}

TEST_CASE("roots csv has one row per root and the documented header") {
    const auto d = coxfix::f1();
    const auto table = generate_positive_roots(d, 2);
    std::ostringstream os;
    write_roots_csv(os, d, table);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "index,depth,word,coeff_1,coeff_2,norm_sum,nhat_1,nhat_2,q_normalized");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("json reports carry the closed forms") {
    const auto d = coxfix::f1();
    const auto pair = make_dihedral_pair(d, {1.0, 0.0}, {0.0, 1.0});
    std::ostringstream os;
    write_dihedral_json(os, pair, {{1, 0.010752688172043001}});
    const std::string json = os.str();
    CHECK(json.find("\"theta\":" + fmt17(std::log(2.0))) != std::string::npos);
    CHECK(json.find("\"kind\":\"hyperbolic\"") != std::string::npos);
    const auto pr = limit_pairings(pair);
    CHECK(json.find("\"pairings\":[" + fmt17(pr[0]) + "," + fmt17(pr[1])) != std::string::npos);
    CHECK(json.find("\"distance_to_a_inf\"") != std::string::npos);
}

TEST_CASE("svg output is deterministic") {
    const auto d = coxfix::f2();
    const auto table = generate_positive_roots(d, 8);
    const auto cloud = sample_e2(d, table, 50, 3);
    RenderSpec spec;
    const std::string one = render_svg(d, table, &cloud, spec);
    const std::string two = render_svg(d, table, &cloud, spec);
    CHECK(one == two);
    CHECK(one.find("<?xml version=\"1.0\"") == 0);
}

TEST_CASE("limit markers hug the conic polyline") {
    const auto d = coxfix::f2();
    const auto table = generate_positive_roots(d, 12);
    const auto cloud = sample_e2(d, table, 200, 4);
    RenderSpec spec;
    const std::string svg = render_svg(d, table, &cloud, spec);
    const auto markers = circle_centers(svg, "limits");
    const auto poly = polyline_points(svg);
    REQUIRE(markers.size() == cloud.points.size());
    REQUIRE(poly.size() >= 500);
    for (const auto& [mx, my] : markers) {
        double best = 1e9;
        for (size_t k = 1; k < poly.size(); ++k) {
            // distance to the segment poly[k-1] -> poly[k]
            const double ax = poly[k - 1].first, ay = poly[k - 1].second;
            const double bx = poly[k].first, by = poly[k].second;
            const double vx = bx - ax, vy = by - ay;
            const double len2 = vx * vx + vy * vy;
            double t = len2 > 0.0 ? ((mx - ax) * vx + (my - ay) * vy) / len2 : 0.0;
            t = std::min(1.0, std::max(0.0, t));
            const double dx = mx - (ax + t * vx), dy = my - (ay + t * vy);
            best = std::min(best, std::hypot(dx, dy));
        }
        CHECK(best <= 2.0);
    }
}

TEST_CASE("rank-2 render marks the segment limits") {
    const auto d = coxfix::f1();
    const auto table = generate_positive_roots(d, 6);
    const auto cloud = sample_e2(d, table, 10, 2);
    RenderSpec spec;
    const std::string svg = render_svg(d, table, &cloud, spec);
    CHECK(circle_centers(svg, "conic").size() == 2);
    CHECK(circle_centers(svg, "limits").size() == 2);
    CHECK(circle_centers(svg, "roots").size() == table.size());
}
