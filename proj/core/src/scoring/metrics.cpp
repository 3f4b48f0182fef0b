#include "cat/scoring/metrics.hpp"

namespace cat::scoring {

namespace {

const severity::PartyOutcome& outcome_of(const ScenarioResult& result, Party party) {
    return party == Party::Ads ? result.ads : result.nieon.outcome;
}

}  // namespace

bool collision_metric_counts(const ScenarioResult& result, Party party) {
    const severity::PartyOutcome& o = outcome_of(result, party);
    if (!o.contact) return false;
    return o.contact->ego_zone == sim::ImpactZone::Frontal && !o.contact->ego_stationary;
}

bool injury_metric_counts(const ScenarioResult& result, Party party) {
    return outcome_of(result, party).serious_injury;
}

}  // namespace cat::scoring
