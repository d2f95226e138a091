#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace legstir {

/// Outcome of an identity sweep. A failed check always carries the first
/// counterexample found.
struct CheckReport {
    bool ok = true;
    std::size_t checked = 0;
    std::string counterexample;

    void fail(std::string what) {
        if (ok) {
            ok = false;
            counterexample = std::move(what);
        }
    }

    /// Records one comparison; keeps the first failure.
    void expect(bool cond, const std::string& what) {
        ++checked;
        if (!cond) fail(what);
    }

    CheckReport& merge(const CheckReport& other) {
        checked += other.checked;
        if (!other.ok) fail(other.counterexample);
        return *this;
    }
};

}  // namespace legstir
