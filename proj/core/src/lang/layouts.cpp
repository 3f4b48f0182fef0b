#include "cat/lang/layouts.hpp"

#include "cat/errors.hpp"

namespace cat::lang {

using scenario::Location;
using scenario::Maneuver;

namespace {

Route line(std::initializer_list<geom::Vec2> pts) { return Route{std::vector<geom::Vec2>(pts)}; }

std::map<RouteKey, Route> straight_road_routes() {
    std::map<RouteKey, Route> r;
    // Ego travels +x in the rightmost lane.
    r[{true, Maneuver::GoStraight, Location::WithinLane}] = line({{-250, 0}, {250, 0}});
    // Crossing from the right curb or a midblock crosswalk.
    r[{false, Maneuver::CrossPath, Location::Curbside}] = line({{0, -6}, {0, 10}});
    r[{false, Maneuver::CrossPath, Location::Crosswalk}] = line({{0, -6}, {0, 10}});
    // Opposing through traffic stays in its own lane.
    r[{false, Maneuver::GoStraight, Location::AcrossLane}] = line({{250, 7}, {-250, 7}});
    // Same-direction traffic in the adjacent lane.
    r[{false, Maneuver::GoStraight, Location::WithinLane}] = line({{-250, 3.5}, {250, 3.5}});
    // Head-on in the ego lane.
    r[{false, Maneuver::WrongWay, Location::AcrossLane}] = line({{250, 0}, {-250, 0}});
    // Lead vehicle in the ego lane.
    r[{false, Maneuver::SuddenStop, Location::WithinLane}] = line({{-250, 0}, {250, 0}});
    // Adjacent-lane vehicle merging into the ego lane at the origin.
    r[{false, Maneuver::CutIn, Location::WithinLane}] =
        line({{-250, 3.5}, {-15, 3.5}, {-5, 0.5}, {0, 0}, {250, 0}});
    // Parked vehicle entering the lane from the curb.
    r[{false, Maneuver::PullOut, Location::Curbside}] =
        line({{-14, -2.6}, {-6, -2.2}, {0, 0}, {250, 0}});
    return r;
}

std::map<RouteKey, Route> intersection_routes() {
    std::map<RouteKey, Route> r;
    r[{true, Maneuver::GoStraight, Location::WithinLane}] = line({{-250, 0}, {250, 0}});
    r[{true, Maneuver::TurnLeft, Location::WithinLane}] =
        line({{-250, 0}, {-3, 0}, {-1, 0.6}, {0.8, 2.2}, {1.6, 4.5}, {1.75, 8}, {1.75, 250}});
    r[{true, Maneuver::TurnRight, Location::WithinLane}] =
        line({{-250, 0}, {0.5, 0}, {1.8, -0.7}, {2.9, -2.2}, {3.2, -5}, {3.2, -250}});

    // Cross traffic through the intersection (red-light runner path).
    r[{false, Maneuver::RunRedLight, Location::AcrossLane}] = line({{1.75, -250}, {1.75, 250}});
    // Crosswalk across the ego street at the near corner.
    r[{false, Maneuver::CrossPath, Location::Crosswalk}] = line({{0, -6}, {0, 10}});
    // Jaywalker beyond the far corner.
    r[{false, Maneuver::CrossPath, Location::Curbside}] = line({{6, -6}, {6, 10}});
    r[{false, Maneuver::GoStraight, Location::AcrossLane}] = line({{250, 7}, {-250, 7}});
    r[{false, Maneuver::GoStraight, Location::WithinLane}] = line({{-250, 3.5}, {250, 3.5}});
    r[{false, Maneuver::WrongWay, Location::AcrossLane}] = line({{250, 0}, {-250, 0}});
    r[{false, Maneuver::SuddenStop, Location::WithinLane}] = line({{-250, 0}, {250, 0}});
    r[{false, Maneuver::CutIn, Location::WithinLane}] =
        line({{-250, 3.5}, {-15, 3.5}, {-5, 0.5}, {0, 0}, {250, 0}});
    // Opposing left turn crosses the ego approach on its way out.
    r[{false, Maneuver::TurnLeft, Location::AcrossLane}] =
        line({{250, 7}, {6, 7}, {3, 6.5}, {0, 5.2}, {-2.2, 3}, {-2.9, 0}, {-3, -3}, {-3, -250}});
    // Opposing right turn stays clear of the ego street entirely.
    r[{false, Maneuver::TurnRight, Location::AcrossLane}] =
        line({{250, 7}, {6, 7}, {3.5, 7.8}, {2.2, 9.5}, {1.9, 12}, {1.75, 250}});
    return r;
}

}  // namespace

LayoutLibrary LayoutLibrary::bundled() {
    LayoutLibrary lib;
    lib.layouts_["midblock_2lane"] = straight_road_routes();

    auto driveway = straight_road_routes();
    // Driveway on the right side just past the origin.
    driveway[{false, Maneuver::PullOut, Location::Driveway}] =
        line({{2, -8}, {2, -3}, {4, -1}, {8, 0}, {250, 0}});
    lib.layouts_["driveway_midblock"] = std::move(driveway);

    lib.layouts_["intersection_4way_signal"] = intersection_routes();
    lib.layouts_["intersection_4way_unprotected"] = intersection_routes();
    return lib;
}

bool LayoutLibrary::has_layout(std::string_view layout_class) const {
    return layouts_.count(std::string(layout_class)) > 0;
}

const Route* LayoutLibrary::find(std::string_view layout_class, const RouteKey& key) const {
    const auto layout = layouts_.find(std::string(layout_class));
    if (layout == layouts_.end()) return nullptr;
    const auto route = layout->second.find(key);
    return route == layout->second.end() ? nullptr : &route->second;
}

const Route& LayoutLibrary::require(std::string_view layout_class, const RouteKey& key) const {
    if (!has_layout(layout_class)) {
        throw LayoutUnavailable("layout '" + std::string(layout_class) +
                                "' has no bundled geometry");
    }
    const Route* route = find(layout_class, key);
    if (route == nullptr) {
        throw LayoutUnavailable("layout '" + std::string(layout_class) + "' defines no " +
                                (key.ego ? "ego" : "actor") + " route for " +
                                std::string(scenario::to_token(key.maneuver)) + " from " +
                                std::string(scenario::to_token(key.start_location)));
    }
    return *route;
}

std::vector<std::string> LayoutLibrary::layout_classes() const {
    std::vector<std::string> out;
    out.reserve(layouts_.size());
    for (const auto& [name, routes] : layouts_) out.push_back(name);
    return out;
}

const std::map<RouteKey, Route>& LayoutLibrary::routes_of(std::string_view layout_class) const {
    const auto it = layouts_.find(std::string(layout_class));
    if (it == layouts_.end()) {
        throw LayoutUnavailable("layout '" + std::string(layout_class) +
                                "' has no bundled geometry");
    }
    return it->second;
}

}  // namespace cat::lang
