#pragma once

#include <cstdio>
#include <fstream>
#include <span>
#include <string>

#include "optbench/store/run_record.hpp"

namespace optbench::store {

/// Long-format CSV for downstream analysis tooling: one row per
/// improvement event, records in store order.
inline void write_ioh_csv(std::span<const RunRecord> records, std::ostream& out) {
    out << "suite,function_id,instance,dimension,algorithm,run,evaluations,best_precision\n";
    char prec[32];
    for (const auto& r : records) {
        for (const auto& e : r.trajectory.events()) {
            std::snprintf(prec, sizeof(prec), "%.12g", e.precision);
            out << "optbench," << r.key.function_id << ',' << r.key.instance_id << ','
                << r.key.dimension << ',' << r.key.algorithm << ',' << r.key.repetition << ','
                << e.eval_index << ',' << prec << '\n';
        }
    }
}

inline void export_ioh_csv(std::span<const RunRecord> records, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoFailure("cannot open '" + path + "' for writing");
    }
    write_ioh_csv(records, out);
    out.flush();
    if (!out) {
        throw IoFailure("write to '" + path + "' failed");
    }
}

} // namespace optbench::store
