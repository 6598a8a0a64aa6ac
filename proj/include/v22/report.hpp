#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "registry.hpp"

namespace v22 {

struct RunConfig {
    std::vector<std::string> selected;  // empty: all
    std::vector<Rat> u_values;          // specializations beside the generic run
    bool generic = true;
    bool allow_singular = false;
    std::string format = "text";
    unsigned jobs = 1;
};

struct Report {
    RunConfig config;
    std::vector<CheckResult> results;

    bool all_pass() const {
        return std::none_of(results.begin(), results.end(),
                            [](const CheckResult& r) { return r.status == Status::FAIL; });
    }
    size_t count(Status s) const {
        return static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                 [&](const CheckResult& r) { return r.status == s; }));
    }
};

inline bool selection_matches(const std::vector<std::string>& sel, const std::string& group,
                              const std::string& result_id) {
    if (sel.empty()) return true;
    for (const auto& s : sel) {
        if (s == group || s == result_id) return true;
        if (result_id.size() > s.size() && result_id.compare(0, s.size(), s) == 0 &&
            (result_id[s.size()] == '/' || result_id[s.size()] == '-'))
            return true;
    }
    return false;
}

// Execute the registry. Every selected check runs once generically and once
// per requested parameter value; results are emitted in registry order, then
// by u-mode, regardless of completion order.
inline Report run_checks(const Catalog& cat, const RunConfig& cfg) {
    struct Job {
        const CheckDef* def;
        std::optional<Rat> u;
        std::string u_mode;
    };
    std::vector<Job> jobs;
    for (const auto& def : all_checks()) {
        if (cfg.generic) jobs.push_back({&def, std::nullopt, "generic"});
        for (const auto& u : cfg.u_values) jobs.push_back({&def, u, "u=" + to_string(u)});
    }

    std::vector<std::vector<CheckResult>> slots(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];
            RunCtx ctx{&cat, job.u, cfg.allow_singular};
            auto t0 = std::chrono::steady_clock::now();
            std::vector<CheckResult> rs;
            try {
                rs = job.def->fn(ctx);
            } catch (const SpecializeError& e) {
                rs = {CheckResult::skipped(job.def->id, e.what())};
            } catch (const std::exception& e) {
                rs = {CheckResult::fail(job.def->id, e.what())};
            }
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count() /
                        static_cast<double>(rs.empty() ? 1 : rs.size());
            for (auto& r : rs) {
                r.u_mode = job.u_mode;
                r.duration_ms = ms;
                if (r.paper_ref.empty()) r.paper_ref = job.def->paper_ref;
            }
            slots[i] = std::move(rs);
        }
    };
    unsigned n = std::max(1u, cfg.jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Report rep;
    rep.config = cfg;
    for (size_t i = 0; i < jobs.size(); ++i)
        for (auto& r : slots[i])
            if (selection_matches(cfg.selected, jobs[i].def->id, r.id))
                rep.results.push_back(std::move(r));
    return rep;
}

inline std::string emit_text(const Report& rep) {
    std::ostringstream os;
    for (const auto& r : rep.results) {
        os << "[" << to_cstr(r.status) << "] " << r.id;
        if (r.u_mode != "generic") os << " (" << r.u_mode << ")";
        if (r.status != Status::PASS && !r.witness.empty()) os << "\n    witness: " << r.witness;
        if (!r.note.empty()) os << "\n    note: " << r.note;
        os << "\n";
    }
    os << "----\n"
       << rep.count(Status::PASS) << " passed, " << rep.count(Status::FAIL) << " failed, "
       << rep.count(Status::SKIPPED) << " skipped\n"
       << "aggregate: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

// Structured output: stable field order, no timings, so identical configs
// produce byte-identical documents.
inline std::string emit_structured(const Report& rep) {
    nlohmann::ordered_json doc;
    doc["schema"] = "v22-verify/1";
    nlohmann::ordered_json cfg;
    cfg["checks"] = rep.config.selected;
    std::vector<std::string> modes;
    if (rep.config.generic) modes.push_back("generic");
    for (const auto& u : rep.config.u_values) modes.push_back(to_string(u));
    cfg["u"] = modes;
    cfg["allow_singular"] = rep.config.allow_singular;
    doc["config"] = cfg;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rep.results) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["u_mode"] = r.u_mode;
        j["status"] = to_cstr(r.status);
        j["witness"] = r.witness;
        if (!r.note.empty()) j["note"] = r.note;
        j["paper_ref"] = r.paper_ref;
        arr.push_back(std::move(j));
    }
    doc["checks"] = std::move(arr);
    nlohmann::ordered_json sum;
    sum["pass"] = rep.count(Status::PASS);
    sum["fail"] = rep.count(Status::FAIL);
    sum["skipped"] = rep.count(Status::SKIPPED);
    sum["total"] = rep.results.size();
    sum["aggregate"] = rep.all_pass() ? "PASS" : "FAIL";
    doc["summary"] = sum;
    return doc.dump(2) + "\n";
}

}  // namespace v22
