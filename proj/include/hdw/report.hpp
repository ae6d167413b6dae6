#pragma once

#include <string>
#include <vector>

namespace hdw {

enum class Status { Pass, Fail, Info };

struct ReportEntry {
    std::string name;
    Status status = Status::Pass;
    std::string witness; // first failing basis tuple, when any
    std::string value;   // exact scalar/table payload, when useful
};

/// Ordered list of named checks.  Serialization is deterministic: entries
/// appear in the order they were recorded.
struct Report {
    std::vector<ReportEntry> entries;

    void pass(const std::string& name) { entries.push_back({name, Status::Pass, "", ""}); }
    void fail(const std::string& name, const std::string& witness = "",
              const std::string& value = "") {
        entries.push_back({name, Status::Fail, witness, value});
    }
    void info(const std::string& name, const std::string& value = "",
              const std::string& witness = "") {
        entries.push_back({name, Status::Info, witness, value});
    }
    void check(const std::string& name, bool ok, const std::string& witness = "",
               const std::string& value = "") {
        if (ok) pass(name); else fail(name, witness, value);
    }
    void merge(const Report& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
    void merge_prefixed(const std::string& prefix, const Report& other) {
        for (ReportEntry e : other.entries) {
            e.name = prefix + e.name;
            entries.push_back(std::move(e));
        }
    }

    bool ok() const {
        for (const auto& e : entries)
            if (e.status == Status::Fail) return false;
        return true;
    }
    int fail_count() const {
        int n = 0;
        for (const auto& e : entries)
            if (e.status == Status::Fail) ++n;
        return n;
    }
    const ReportEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }

    std::string to_text() const;
    std::string to_json() const;

    /// Throws std::runtime_error carrying the first failure when not ok().
    void require_ok(const std::string& context) const;
};

} // namespace hdw
