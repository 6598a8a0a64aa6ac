#pragma once

#include <string>
#include <utility>
#include <vector>

namespace v22 {

enum class Status { PASS, FAIL, SKIPPED };

inline const char* to_cstr(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        default: return "SKIPPED";
    }
}

// One verified (or failed, or skipped) claim. A FAIL always carries a witness
// describing the exact discrepancy; a SKIPPED carries the reason. A note marks
// a PASS that deserves attention (documented deviations from the source text).
struct CheckResult {
    std::string id;
    Status status = Status::PASS;
    std::string witness;
    std::string note;
    std::string paper_ref;
    std::string u_mode = "generic";
    double duration_ms = 0.0;

    static CheckResult pass(std::string id, std::string witness = "", std::string note = "") {
        CheckResult r;
        r.id = std::move(id);
        r.witness = std::move(witness);
        r.note = std::move(note);
        return r;
    }
    static CheckResult fail(std::string id, std::string witness) {
        CheckResult r;
        r.id = std::move(id);
        r.status = Status::FAIL;
        r.witness = witness.empty() ? "unspecified failure" : std::move(witness);
        return r;
    }
    static CheckResult skipped(std::string id, std::string reason) {
        CheckResult r;
        r.id = std::move(id);
        r.status = Status::SKIPPED;
        r.witness = std::move(reason);
        return r;
    }
};

inline CheckResult expect(std::string id, bool ok, const std::string& witness_on_fail,
                          std::string note = "") {
    if (ok) return CheckResult::pass(std::move(id), "", std::move(note));
    return CheckResult::fail(std::move(id), witness_on_fail);
}

}  // namespace v22
