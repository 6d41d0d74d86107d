#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace morphic {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

// Outcome of one named verification check. `bounds` records every numeric
// limit the check ran under; a failing report carries the offending data in
// `witness`.
struct Report {
    std::string check;
    CheckStatus status = CheckStatus::pass;
    nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();

    bool passed() const { return status == CheckStatus::pass; }
    bool failed() const { return status == CheckStatus::fail; }

    // Marks the report failed and records the witness, keeping the first failure only.
    void fail(nlohmann::ordered_json failure);
};

nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const std::vector<Report>& reports);

// One line per report: "PASS  check  key=value ..." plus witness fields on failure.
std::string to_text(const Report& r);

}  // namespace morphic
