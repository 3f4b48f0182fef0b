#pragma once

#include <map>
#include <string>
#include <vector>

#include "cat/scenario/types.hpp"
#include "cat/sim/geometry.hpp"

namespace cat::lang {

/// Directed route polyline through a layout. All bundled layouts place the
/// nominal conflict location at the origin.
struct Route {
    std::vector<geom::Vec2> points;
};

struct RouteKey {
    bool ego = false;
    scenario::Maneuver maneuver = scenario::Maneuver::GoStraight;
    scenario::Location start_location = scenario::Location::WithinLane;

    auto operator<=>(const RouteKey&) const = default;
};

/// Stylized lane-level geometry per layout class. The ego lane runs along +x
/// at y=0; the adjacent same-direction lane sits at y=+3.5 and opposing
/// traffic at y=+7. Cross streets are vertical through the origin.
class LayoutLibrary {
public:
    static LayoutLibrary bundled();

    bool has_layout(std::string_view layout_class) const;
    const Route* find(std::string_view layout_class, const RouteKey& key) const;

    /// Route for instantiation; throws LayoutUnavailable when missing.
    const Route& require(std::string_view layout_class, const RouteKey& key) const;

    std::vector<std::string> layout_classes() const;
    const std::map<RouteKey, Route>& routes_of(std::string_view layout_class) const;

private:
    std::map<std::string, std::map<RouteKey, Route>> layouts_;
};

}  // namespace cat::lang
