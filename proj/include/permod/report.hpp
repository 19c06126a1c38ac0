#pragma once

#include <string>
#include <vector>

#include "permod/anyon_model.hpp"

namespace permod {

/// One named residual with its instance count, as reported by a subcommand.
struct ReportItem {
    std::string name;
    double residual = 0.0;
    long long instances = 0;
    std::string note;
};

/// A whole run: echoed inputs, every residual with its instance count, and
/// the verdict. Serializes to a single structured document whose byte
/// content depends only on the inputs and seed.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ReportItem> items;
    double tolerance = kDefaultTol;
    std::vector<std::string> lines;   // extra text-mode output (tables, matrices)

    bool pass() const;
    void add(const std::string& name, double residual, long long instances,
             const std::string& note = "");

    std::string to_text() const;
    std::string to_structured() const;
};

/// Parse a structured report back (used by the round-trip tests).
Report parse_structured(const std::string& text);

} // namespace permod
