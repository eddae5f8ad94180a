#include "aknsmf/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace aknsmf {

CheckRecord CheckRecord::from(std::string check, std::vector<std::pair<std::string, long>> params,
                              const CheckResult& result, long millis) {
    CheckRecord r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.status = result.pass ? Status::Pass : Status::Fail;
    r.witness = result.pass ? "" : result.witness;
    r.millis = millis;
    return r;
}

bool record_less(const CheckRecord& a, const CheckRecord& b) {
    if (a.check != b.check) return a.check < b.check;
    return a.params < b.params;
}

namespace {

const char* status_str(CheckRecord::Status s) {
    switch (s) {
        case CheckRecord::Status::Pass: return "pass";
        case CheckRecord::Status::Fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace

std::string serialize_records_json(const std::vector<CheckRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckRecord& r : records) {
        nlohmann::ordered_json obj;
        obj["check"] = r.check;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        obj["params"] = std::move(params);
        obj["status"] = status_str(r.status);
        if (r.status == CheckRecord::Status::Fail) obj["witness"] = r.witness;
        obj["millis"] = r.millis;
        arr.push_back(std::move(obj));
    }
    return arr.dump() + "\n";
}

std::string serialize_records_text(const std::vector<CheckRecord>& records) {
    std::ostringstream out;
    for (const CheckRecord& r : records) {
        out << (r.status == CheckRecord::Status::Fail ? "FAIL" : status_str(r.status)) << "  "
            << r.check;
        for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
        out << "  (" << r.millis << " ms)";
        if (r.status == CheckRecord::Status::Fail) out << "  witness=" << r.witness;
        out << "\n";
    }
    return out.str();
}

int thread_cap() {
    if (const char* env = std::getenv("AKNS_MULTIFORM_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<CheckRecord> run_jobs(const std::vector<std::function<CheckRecord()>>& jobs) {
    std::vector<CheckRecord> records(jobs.size());
    int workers = std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i) records[i] = jobs[i]();
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= jobs.size()) return;
                    records[i] = jobs[i]();
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }
    std::sort(records.begin(), records.end(), record_less);
    return records;
}

}  // namespace aknsmf
