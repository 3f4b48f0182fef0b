#include "cat/scenario/validate.hpp"

#include <cmath>
#include <sstream>

namespace cat::scenario {

namespace {

constexpr double kTimeTol = 1e-9;
constexpr double kCoverageTol = 1e-6;

void check_samples(const std::vector<TrajectorySample>& samples, double duration,
                   const std::string& base, std::vector<Violation>& out) {
    if (samples.empty()) {
        out.push_back({"non-empty trajectory", base, "trajectory has no samples"});
        return;
    }
    if (std::abs(samples.front().t) > kTimeTol) {
        out.push_back({"trajectory coverage", base + ".samples[0].t",
                       "first sample must be at t=0, got " + std::to_string(samples.front().t)});
    }
    if (samples.back().t < duration - kCoverageTol) {
        out.push_back({"trajectory coverage", base + ".samples.back().t",
                       "last sample at " + std::to_string(samples.back().t) +
                           " does not cover duration " + std::to_string(duration)});
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const TrajectorySample& s = samples[i];
        const std::string at = base + ".samples[" + std::to_string(i) + "]";
        if (!std::isfinite(s.t) || !std::isfinite(s.x) || !std::isfinite(s.y) ||
            !std::isfinite(s.heading) || !std::isfinite(s.speed)) {
            out.push_back({"finite sample", at, "non-finite field"});
            continue;
        }
        if (i > 0 && s.t <= samples[i - 1].t + kTimeTol) {
            out.push_back({"non-monotone time", at + ".t",
                           "timestamps must be strictly increasing"});
        }
        if (s.speed < 0.0) {
            out.push_back({"non-negative speed", at + ".speed", std::to_string(s.speed)});
        }
        if (s.heading < -M_PI - kTimeTol || s.heading >= M_PI + kTimeTol) {
            out.push_back({"heading range", at + ".heading",
                           "heading must lie in [-pi, pi), got " + std::to_string(s.heading)});
        }
    }
}

void check_footprint(const FootprintSpec& fp, const std::string& path,
                     std::vector<Violation>& out) {
    if (fp.length <= 0.0 || fp.width <= 0.0) {
        out.push_back({"positive footprint", path,
                       "length " + std::to_string(fp.length) + ", width " + std::to_string(fp.width)});
    }
}

}  // namespace

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const Violation& v : violations) {
        os << v.invariant << " @ " << v.path;
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    return os.str();
}

ValidationReport validate_concrete(const ConcreteScenario& scenario,
                                   const SafetyGroupRegistry& registry) {
    ValidationReport report;
    auto& out = report.violations;

    if (scenario.id.empty()) out.push_back({"non-empty id", "id", ""});
    if (scenario.duration <= 0.0) {
        out.push_back({"positive duration", "duration", std::to_string(scenario.duration)});
    }
    if (scenario.actor_trajectories.empty()) {
        out.push_back({"at least one actor", "actor_trajectories", ""});
    }
    if (scenario.actor_footprints.size() != scenario.actor_trajectories.size()) {
        out.push_back({"footprint per actor", "footprints",
                       std::to_string(scenario.actor_footprints.size()) + " footprints for " +
                           std::to_string(scenario.actor_trajectories.size()) + " actors"});
    }

    check_footprint(scenario.ego_footprint, "footprints.ego", out);
    for (std::size_t i = 0; i < scenario.actor_footprints.size(); ++i) {
        check_footprint(scenario.actor_footprints[i], "footprints.actors[" + std::to_string(i) + "]",
                        out);
    }

    if (scenario.ego_start.speed < 0.0) {
        out.push_back({"non-negative speed", "ego_start.speed",
                       std::to_string(scenario.ego_start.speed)});
    }

    // stimulus ordering: 0 <= onset <= end <= duration
    if (scenario.stimulus.onset_time < -kTimeTol) {
        out.push_back({"stimulus ordering", "stimulus.onset_time",
                       "onset must be >= 0, got " + std::to_string(scenario.stimulus.onset_time)});
    }
    if (scenario.stimulus.end_time < scenario.stimulus.onset_time - kTimeTol) {
        out.push_back({"stimulus ordering", "stimulus.end_time",
                       "end " + std::to_string(scenario.stimulus.end_time) + " precedes onset " +
                           std::to_string(scenario.stimulus.onset_time)});
    }
    if (scenario.duration > 0.0 && scenario.stimulus.end_time > scenario.duration + kCoverageTol) {
        out.push_back({"stimulus ordering", "stimulus.end_time",
                       "stimulus extends past scenario duration"});
    }

    for (std::size_t i = 0; i < scenario.actor_trajectories.size(); ++i) {
        check_samples(scenario.actor_trajectories[i].samples, scenario.duration,
                      "actor_trajectories[" + std::to_string(i) + "]", out);
    }
    if (!scenario.ego_nominal.empty()) {
        check_samples(scenario.ego_nominal, scenario.duration, "ego_nominal", out);
    }

    if (registry.find(scenario.safety_group) == nullptr) {
        out.push_back({"registered safety group", "safety_group",
                       "'" + scenario.safety_group + "' is not registered"});
    }

    return report;
}

}  // namespace cat::scenario
