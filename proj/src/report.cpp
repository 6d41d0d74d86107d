#include "morphic/report.hpp"

namespace morphic {

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

void Report::fail(nlohmann::ordered_json failure) {
    if (status == CheckStatus::fail) return;
    status = CheckStatus::fail;
    witness = std::move(failure);
}

nlohmann::ordered_json to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["status"] = std::string(to_string(r.status));
    j["bounds"] = r.bounds;
    j["witness"] = r.witness;
    return j;
}

nlohmann::ordered_json to_json(const std::vector<Report>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        return s.empty() ? "eps" : s;
    }
    return v.dump();
}

void append_fields(std::string& out, const nlohmann::ordered_json& obj, const std::string& prefix) {
    for (const auto& [key, value] : obj.items()) {
        if (value.is_object()) {
            append_fields(out, value, prefix + key + ".");
            continue;
        }
        out += ' ';
        out += prefix + key + '=';
        if (value.is_array()) {
            std::string joined;
            for (const auto& e : value) joined += (joined.empty() ? "" : ",") + scalar_text(e);
            out += '[' + joined + ']';
        } else {
            out += scalar_text(value);
        }
    }
}

}  // namespace

std::string to_text(const Report& r) {
    std::string out;
    switch (r.status) {
        case CheckStatus::pass: out = "PASS "; break;
        case CheckStatus::fail: out = "FAIL "; break;
        case CheckStatus::skipped: out = "SKIP "; break;
    }
    out += r.check;
    append_fields(out, r.bounds, "");
    if (r.status != CheckStatus::pass) append_fields(out, r.witness, "");
    return out;
}

}  // namespace morphic
