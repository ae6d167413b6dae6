#include "hdw/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hdw {

static const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        default: return "INFO";
    }
}

std::string Report::to_text() const {
    std::string out;
    for (const auto& e : entries) {
        out += status_str(e.status);
        out += "  ";
        out += e.name;
        if (!e.witness.empty()) out += "  witness=" + e.witness;
        if (!e.value.empty()) out += "  value=" + e.value;
        out += "\n";
    }
    return out;
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json je;
        je["name"] = e.name;
        je["status"] = status_str(e.status);
        if (!e.witness.empty()) je["witness"] = e.witness;
        if (!e.value.empty()) je["value"] = e.value;
        j["entries"].push_back(je);
    }
    j["ok"] = ok();
    return j.dump(2);
}

void Report::require_ok(const std::string& context) const {
    if (ok()) return;
    for (const auto& e : entries)
        if (e.status == Status::Fail)
            throw std::runtime_error(context + ": " + e.name +
                                     (e.witness.empty() ? "" : " at " + e.witness) +
                                     (e.value.empty() ? "" : " [" + e.value + "]"));
}

} // namespace hdw
