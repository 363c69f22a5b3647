#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coringlab/linalg.hpp"

namespace coringlab {

struct CheckResult {
    std::string id;        // stable machine-readable axiom id
    std::string equation;  // human-readable statement of what was compared
    bool pass = false;
    std::string witness;   // empty when the check passes
};

/// Outcome of verifying one object: a fixed-order list of axiom checks,
/// plus free-form notes (conventions adopted, attached data).
struct Report {
    std::string object;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(CheckResult c) { checks.push_back(std::move(c)); }

    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
        for (const auto& n : other.notes) notes.push_back(n);
    }

    std::string text() const;
    std::string json() const;
};

std::string json_escape(const std::string& s);

/// Compare two maps and record the outcome; on failure the witness names the
/// source basis element where the matrices first differ.
void check_equal_maps(Report& rep, const std::string& id, const std::string& equation,
                      const LinearMap& lhs, const LinearMap& rhs);
void check_zero_map(Report& rep, const std::string& id, const std::string& equation,
                    const LinearMap& f);
void check_flag(Report& rep, const std::string& id, const std::string& equation, bool pass,
                const std::string& witness = "");

std::string witness_of(const Mismatch& mm);

}  // namespace coringlab
