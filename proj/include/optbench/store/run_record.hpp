#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "optbench/runner/run_key.hpp"
#include "optbench/trajectory.hpp"

namespace optbench::store {

enum class RunStatus { ok, failed };

inline std::string to_string(RunStatus s) { return s == RunStatus::ok ? "ok" : "failed"; }

inline RunStatus run_status_from_string(const std::string& s) {
    if (s == "ok") return RunStatus::ok;
    if (s == "failed") return RunStatus::failed;
    throw CorruptRecord("unknown status '" + s + "'");
}

/// One completed (or aborted) run: identity, reproduction seed, the
/// budget-carrying improvement trajectory and wall time. Failed runs may
/// carry a partial or empty trajectory; ok runs always have at least one
/// event.
struct RunRecord {
    runner::RunKey key;
    std::uint64_t seed = 0;
    RunStatus status = RunStatus::ok;
    Trajectory trajectory;
    double wall_time = 0.0;

    nlohmann::json to_json() const {
        nlohmann::json events = nlohmann::json::array();
        for (const auto& e : trajectory.events()) {
            events.push_back(nlohmann::json::array({e.eval_index, e.precision}));
        }
        // nlohmann's default object keeps keys sorted, so the line layout
        // is stable: algo, budget, dim, events, fid, iid, rep, seed,
        // status, wall_time.
        return nlohmann::json{{"algo", key.algorithm},
                              {"budget", trajectory.budget()},
                              {"dim", key.dimension},
                              {"events", std::move(events)},
                              {"fid", key.function_id},
                              {"iid", key.instance_id},
                              {"rep", key.repetition},
                              {"seed", seed},
                              {"status", to_string(status)},
                              {"wall_time", wall_time}};
    }

    static RunRecord from_json(const nlohmann::json& j) {
        for (const char* field :
             {"algo", "budget", "dim", "events", "fid", "iid", "rep", "seed", "status",
              "wall_time"}) {
            if (!j.contains(field)) {
                throw CorruptRecord(std::string("missing field '") + field + "'");
            }
        }
        RunRecord r;
        r.key.algorithm = j.at("algo").get<std::string>();
        r.key.function_id = j.at("fid").get<int>();
        r.key.dimension = j.at("dim").get<int>();
        r.key.instance_id = j.at("iid").get<int>();
        r.key.repetition = j.at("rep").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.status = run_status_from_string(j.at("status").get<std::string>());
        r.wall_time = j.at("wall_time").get<double>();
        const auto budget = j.at("budget").get<std::int64_t>();

        std::vector<TrajectoryEvent> events;
        for (const auto& e : j.at("events")) {
            if (!e.is_array() || e.size() != 2) {
                throw CorruptRecord("event entries must be [eval_index, precision] pairs");
            }
            events.push_back({e[0].get<std::int64_t>(), e[1].get<double>()});
        }
        try {
            r.trajectory = Trajectory(std::move(events), budget);
        } catch (const MalformedTrajectory& ex) {
            throw CorruptRecord(ex.what());
        }
        if (r.status == RunStatus::ok && r.trajectory.empty()) {
            throw CorruptRecord("ok record with no trajectory events");
        }
        return r;
    }
};

} // namespace optbench::store
