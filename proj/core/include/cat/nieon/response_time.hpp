#pragma once

#include <vector>

#include "cat/scenario/types.hpp"

namespace cat::nieon {

/// Linear response-time model over ramp-up time, clamped at a floor.
/// Larger intercepts model slower (more stringent benchmark) drivers.
struct ResponseTimeModel {
    double intercept = 0.6;  // s
    double slope = 0.6;      // s per s of ramp-up
    double floor = 0.25;     // s

    void validate() const;
};

/// Ramp-up time of the surprising event: stimulus end minus onset.
double ramp_up_time(const scenario::StimulusAnnotation& stimulus);

/// max(floor, intercept + slope * ramp_up).
double response_time(const ResponseTimeModel& model, double ramp_up);

/// One model per delta with the intercept shifted; non-positive resulting
/// intercepts are rejected (NonPositiveIntercept).
std::vector<ResponseTimeModel> stringency_variants(const ResponseTimeModel& model,
                                                   const std::vector<double>& deltas);

}  // namespace cat::nieon
