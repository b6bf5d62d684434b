#pragma once

#include <string>
#include <vector>

namespace qv {

// outcome of one certified identity
struct Certificate {
    std::string target;
    std::string id;
    std::string kind;
    bool ok = false;
    std::string status;   // "pass", "fail", or "unimplemented"
    std::string citation;
    std::string expected; // printed form the check certifies
    std::string computed; // recomputed form (or a short witness on pass)
    std::string detail;   // extra notes (scalars, reduction data)
    long ms = 0;
};

struct RunReport {
    std::vector<Certificate> certs;
    bool all_ok() const;
    std::size_t failures() const;
};

// registered verification targets, in dependency order
std::vector<std::string> pipeline_targets();

// Poincare series of a named moduli space ("git", "k", "phat-prime", "phat",
// "hacking", "octic-quotient"), as certified by the series pipeline
std::string poincare_series_text(const std::string& space);

// runs one target (a named scene plus the computation that certifies it)
RunReport run_target(const std::string& name);

// runs every target
RunReport run_all();

std::string report_json(const RunReport& report);
void print_report(const RunReport& report, bool verbose);

} // namespace qv
