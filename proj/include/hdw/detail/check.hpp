#pragma once

#include <string>

#include "hdw/report.hpp"

namespace hdw::detail {

// accumulates one named exhaustive check; keeps the first witness
struct Check {
    std::string name;
    bool failed = false;
    std::string witness;
    int nfail = 0;

    explicit Check(std::string n) : name(std::move(n)) {}

    void expect(bool ok, const std::string& wit) {
        if (ok) return;
        if (!failed) witness = wit;
        failed = true;
        ++nfail;
    }
    void commit(Report& rep) const {
        if (failed)
            rep.fail(name, witness, "failures=" + std::to_string(nfail));
        else
            rep.pass(name);
    }
};

} // namespace hdw::detail
