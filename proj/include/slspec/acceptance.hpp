#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace slspec {

enum class Verdict { Pass, Fail, Waived };

const char* verdict_name(Verdict v) noexcept;

struct CriterionResult {
    std::string id;    ///< "C1" .. "C12"
    std::string name;
    Verdict verdict = Verdict::Fail;
    std::string detail;
};

struct AcceptanceOptions {
    /// Criterion ids to run; empty runs all of them.
    std::set<std::string> only;
    /// Named thresholds, e.g. {"C1.abs", 1e-9}. See acceptance_parameters().
    std::map<std::string, double> overrides;
    unsigned threads = 0;
    /// Called as each criterion finishes.
    std::function<void(const CriterionResult&)> on_result;
};

/// Criterion ids in run order.
std::vector<std::string> acceptance_ids();

/// Every overridable threshold with its default value.
std::map<std::string, double> acceptance_parameters();

/// Throws DomainError for unknown ids or override keys. Exceptions raised
/// inside a check become a failed result naming the failing operation.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// One line: "<id> <PASS|FAIL|WAIVED> <name>: <detail>".
std::string format_result(const CriterionResult& r);

} // namespace slspec
