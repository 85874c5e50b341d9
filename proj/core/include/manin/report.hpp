#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace manin {

/// Deterministic scientific rendering for numeric residuals.
inline std::string format_residual(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

/// One verified identity or axiom. `residual` is "0" for exact checks and a
/// decimal for numeric ones; `witness` carries failure data when available.
struct CheckRecord {
    std::string id;        // stable identifier, e.g. "algebra.jacobi"
    std::string identity;  // the identity or axiom being checked
    bool pass = false;
    std::string residual;
    std::string witness;
};

class Report {
public:
    void add(std::string id, std::string identity, bool pass, std::string residual = "0",
             std::string witness = "") {
        checks_.push_back({std::move(id), std::move(identity), pass, std::move(residual),
                           std::move(witness)});
    }
    void append(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    const std::vector<CheckRecord>& checks() const { return checks_; }

    /// Stable sort by id; called before rendering so output order does not
    /// depend on evaluation order.
    void finalize();

private:
    std::vector<CheckRecord> checks_;
};

}  // namespace manin
