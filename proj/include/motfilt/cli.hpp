#pragma once

// Command-line front end, callable in-process for tests.

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cli {

struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::optional<bool> pass; // present exactly for verifier commands

    nlohmann::json to_json() const;
    std::string render(const std::string& format) const; // "json" or "tsv"
};

// Parses argv (without the program name), runs the subcommand, and writes
// the Report to `out` (diagnostics to `err`).  Exit code: 0 success/pass,
// 1 verifier failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
