#include "cat/nieon/response_time.hpp"

#include <algorithm>
#include <cmath>

#include "cat/errors.hpp"

namespace cat::nieon {

void ResponseTimeModel::validate() const {
    if (intercept <= 0.0) throw NonPositiveIntercept("response-time intercept must be > 0");
    if (floor < 0.0) throw ConfigError("response-time floor must be >= 0");
    if (slope < 0.0) throw ConfigError("response-time slope must be >= 0");
}

double ramp_up_time(const scenario::StimulusAnnotation& stimulus) {
    return stimulus.end_time - stimulus.onset_time;
}

double response_time(const ResponseTimeModel& model, double ramp_up) {
    return std::max(model.floor, model.intercept + model.slope * ramp_up);
}

std::vector<ResponseTimeModel> stringency_variants(const ResponseTimeModel& model,
                                                   const std::vector<double>& deltas) {
    std::vector<ResponseTimeModel> out;
    out.reserve(deltas.size());
    for (double delta : deltas) {
        if (!std::isfinite(delta)) throw ConfigError("stringency delta must be finite");
        ResponseTimeModel variant = model;
        variant.intercept += delta;
        if (variant.intercept <= 0.0) {
            throw NonPositiveIntercept("stringency delta " + std::to_string(delta) +
                                       " drives the intercept non-positive");
        }
        out.push_back(variant);
    }
    return out;
}

}  // namespace cat::nieon
