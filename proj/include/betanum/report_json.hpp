#pragma once

#include "betanum/asymptotics.hpp"
#include "betanum/renyi.hpp"

#include <json.hpp>

#include <string>

namespace betanum {

inline std::string to_string(ExpansionStatus s) {
    switch (s) {
        case ExpansionStatus::Finite:
            return "Finite";
        case ExpansionStatus::EventuallyPeriodic:
            return "EventuallyPeriodic";
        default:
            return "Undetermined";
    }
}

// {"preperiod":[2],"period":[1],"status":"EventuallyPeriodic"}
inline nlohmann::ordered_json renyi_json(const RenyiExpansion& d) {
    nlohmann::ordered_json j;
    j["preperiod"] = d.preperiod;
    j["period"] = d.period;
    j["status"] = to_string(d.status);
    return j;
}

// {n_max, sup_drift, arg_max, predicted_bound, pisot, verdict}
inline nlohmann::ordered_json drift_report_json(const DriftReport& rep) {
    nlohmann::ordered_json j;
    j["n_max"] = rep.n_max;
    j["sup_drift"] = rep.sup_drift;
    j["arg_max"] = rep.arg_max;
    if (rep.predicted_bound)
        j["predicted_bound"] = *rep.predicted_bound;
    else
        j["predicted_bound"] = nullptr;
    j["pisot"] = rep.pisot;
    j["verdict"] = to_string(rep.verdict);
    return j;
}

}  // namespace betanum
