// Config-driven job runner behind the command-line tool. A job is a JSON
// document naming a kernel, a group and a task; outputs are CSV tables plus
// a manifest echoing every resolved parameter. Runs are deterministic:
// identical config and seed produce byte-identical outputs.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace schoenberg::job {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Exit codes: 0 success; 1 config validation failure; 2 numerical failure
// (quadrature or eigensolver did not converge); 3 positivity violation
// found by a check task (reported with its witness).
int run_job(const std::string& config_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override, bool quiet);

} // namespace schoenberg::job
