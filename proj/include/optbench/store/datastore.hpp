#pragma once

#include <algorithm>
#include <cerrno>
#include <concepts>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "optbench/store/run_record.hpp"

namespace optbench::store {

/// Append-only run store: one compact JSON object per line. Records are
/// flushed as they land so a crashed experiment keeps everything finished
/// before the crash. Keys must be unique across the file's lifetime.
class Store {
public:
    /// Creates (or truncates) the file at `path`.
    static Store create(const std::string& path) {
        Store s;
        s.path_ = path;
        s.out_.open(path, std::ios::out | std::ios::trunc);
        if (!s.out_) {
            throw IoFailure("cannot create store at '" + path + "'");
        }
        return s;
    }

    /// Opens an existing store for appending; known keys are loaded first
    /// so duplicates are rejected across sessions too.
    static Store open_append(const std::string& path) {
        Store s;
        s.path_ = path;
        if (std::filesystem::exists(path)) {
            for (const auto& r : load(path)) s.keys_.insert(r.key);
        }
        s.out_.open(path, std::ios::out | std::ios::app);
        if (!s.out_) {
            throw IoFailure("cannot open store at '" + path + "' for append");
        }
        return s;
    }

    void append(const RunRecord& record) {
        if (!keys_.insert(record.key).second) {
            throw DuplicateKey("run " + describe(record.key) + " is already stored");
        }
        out_ << record.to_json().dump() << '\n';
        out_.flush();
        if (!out_) {
            keys_.erase(record.key);
            if (errno == ENOSPC) {
                throw StorageFull("no space left writing '" + path_ + "'");
            }
            throw IoFailure("write to '" + path_ + "' failed");
        }
    }

    std::size_t size() const { return keys_.size(); }
    const std::string& path() const { return path_; }

    static std::string describe(const runner::RunKey& k) {
        return "(" + k.algorithm + ", f" + std::to_string(k.function_id) + ", d" +
               std::to_string(k.dimension) + ", i" + std::to_string(k.instance_id) + ", rep " +
               std::to_string(k.repetition) + ")";
    }

    using KeyFilter = std::function<bool(const runner::RunKey&)>;

    /// Reads a store back, sorted by run key. Unparseable lines throw
    /// CorruptRecord naming the line number, or are dropped when
    /// `skip_corrupt` is set (their line numbers land in `skipped_lines`
    /// when a sink is given). Duplicate keys always throw.
    static std::vector<RunRecord> load(const std::string& path, bool skip_corrupt = false,
                                       std::vector<std::size_t>* skipped_lines = nullptr) {
        return load_filtered(path, KeyFilter{}, skip_corrupt, skipped_lines);
    }

    /// Filtered load: keeps only records whose key passes `filter`.
    /// Corruption and duplicate checks still cover every line, so a
    /// filtered read never hides a damaged store. Constrained so plain
    /// lambdas resolve here instead of decaying onto the bool overload.
    template <typename Filter>
        requires std::invocable<Filter&, const runner::RunKey&>
    static std::vector<RunRecord> load(const std::string& path, Filter&& filter,
                                       bool skip_corrupt = false,
                                       std::vector<std::size_t>* skipped_lines = nullptr) {
        return load_filtered(path, KeyFilter(std::forward<Filter>(filter)), skip_corrupt,
                             skipped_lines);
    }

private:
    static std::vector<RunRecord> load_filtered(const std::string& path, const KeyFilter& filter,
                                                bool skip_corrupt,
                                                std::vector<std::size_t>* skipped_lines) {
        std::ifstream in(path);
        if (!in) {
            throw IoFailure("cannot open store at '" + path + "'");
        }
        std::vector<RunRecord> records;
        std::set<runner::RunKey> seen;
        std::string line;
        std::size_t line_no = 0;
        auto reject = [&](const char* what) {
            if (!skip_corrupt) {
                throw CorruptRecord("line " + std::to_string(line_no) + ": " + what);
            }
            if (skipped_lines) skipped_lines->push_back(line_no);
        };
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            RunRecord r;
            try {
                const auto j = nlohmann::json::parse(line);
                r = RunRecord::from_json(j);
            } catch (const nlohmann::json::exception& ex) {
                reject(ex.what());
                continue;
            } catch (const CorruptRecord& ex) {
                reject(ex.what());
                continue;
            }
            if (!seen.insert(r.key).second) {
                throw DuplicateKey("line " + std::to_string(line_no) + ": run " +
                                   describe(r.key) + " appears twice");
            }
            if (filter && !filter(r.key)) continue;
            records.push_back(std::move(r));
        }
        std::sort(records.begin(), records.end(),
                  [](const RunRecord& a, const RunRecord& b) { return a.key < b.key; });
        return records;
    }

    std::string path_;
    std::ofstream out_;
    std::set<runner::RunKey> keys_;
};

} // namespace optbench::store
