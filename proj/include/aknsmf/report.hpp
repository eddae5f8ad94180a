#pragma once

#include "aknsmf/check.hpp"

#include <functional>
#include <string>
#include <vector>

namespace aknsmf {

/// One verification record as emitted by the CLI. `witness` is present iff
/// the status is "fail" and holds the first nonzero residual.
struct CheckRecord {
    std::string check;
    std::vector<std::pair<std::string, long>> params;  // emission order
    enum class Status { Pass, Fail, Skipped } status = Status::Pass;
    std::string witness;
    long millis = 0;

    static CheckRecord from(std::string check, std::vector<std::pair<std::string, long>> params,
                            const CheckResult& result, long millis);
};

/// Deterministic sort key: (check, params); millis never participates.
bool record_less(const CheckRecord& a, const CheckRecord& b);

/// JSON array per the CLI schema: keys check, params, status, witness?,
/// millis in that order, UTF-8, newline-terminated.
std::string serialize_records_json(const std::vector<CheckRecord>& records);
/// One line per record: "pass  check params..." / "FAIL  ...  witness=..."
std::string serialize_records_text(const std::vector<CheckRecord>& records);

/// Runs jobs (possibly in parallel, capped by AKNS_MULTIFORM_THREADS) and
/// returns the records sorted by record_less, so the report is deterministic
/// regardless of scheduling.
std::vector<CheckRecord> run_jobs(const std::vector<std::function<CheckRecord()>>& jobs);

/// Parallelism cap: AKNS_MULTIFORM_THREADS (integer >= 1) if set, otherwise
/// the hardware concurrency.
int thread_cap();

}  // namespace aknsmf
