#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace zsl {

enum class CheckMode { witness, full };
enum class CheckStatus { pass, fail, skipped };
/// Rough wall-clock class at one worker: seconds (< 10 s), minutes, long
/// (opt-in, no promise).
enum class RuntimeClass { seconds, minutes, long_running };

const char* to_string(CheckMode m) noexcept;
const char* to_string(CheckStatus s) noexcept;
const char* to_string(RuntimeClass r) noexcept;

struct CheckInfo {
    std::string id;
    std::string reference;  // e.g. "Lemma 3.1"
    CheckMode mode = CheckMode::full;
    RuntimeClass runtime = RuntimeClass::seconds;
    bool long_running = false;  // excluded unless explicitly requested
    std::string summary;
};

struct SubClaim {
    std::string name;
    std::string claimed;
    std::string computed;
    bool verified = false;
    bool skipped = false;
    std::string note;
};

struct CheckReport {
    std::string check_id;
    std::string reference;
    CheckMode mode = CheckMode::full;
    CheckStatus status = CheckStatus::pass;
    std::string reason;  // skip reason, or the first failing sub-claim
    std::vector<SubClaim> details;
    std::chrono::duration<double> runtime{0};

    nlohmann::json to_json(bool with_runtime = true) const;
};

struct CheckOptions {
    int workers = 1;                  // 0 = default_workers()
    std::filesystem::path cache_dir;  // empty: no atom cache
};

const std::vector<CheckInfo>& list_checks();
const CheckInfo& check_info(const std::string& id);

/// Throws Error(not_found) for an unknown id. A resource guard tripping
/// inside the check yields status skipped.
CheckReport run_check(const std::string& id, const CheckOptions& options = {});

/// Runs the checks one after another; each check uses options.workers.
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids, const CheckOptions& options = {});

/// Ids of the default suite (every check that is not long-running), in
/// registry order; with include_long the opt-in checks are appended.
std::vector<std::string> default_check_ids(bool include_long = false);

std::string render_table(const std::vector<CheckReport>& reports);
nlohmann::json to_json(const std::vector<CheckReport>& reports, bool with_runtime = true);

}  // namespace zsl
