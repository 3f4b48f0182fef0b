#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cat/harness/config.hpp"
#include "cat/sim/policy.hpp"

namespace cat::harness {

/// Built-in policies:
///   no_reaction      — follows the nominal route at constant speed, never brakes
///   aeb              — route follower with threshold-triggered jerk-limited
///                      braking on predicted time-to-collision
///   nieon_as_policy  — sanity baseline; the runner evaluates the reference
///                      driver in place of a closed-loop policy
std::unique_ptr<sim::EgoPolicy> make_policy(std::string_view name, const HarnessConfig& config);

bool is_reference_policy(std::string_view name);

std::vector<std::string> builtin_policy_names();

}  // namespace cat::harness
