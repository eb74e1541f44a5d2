#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "schoenberg/job.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Schoenberg expansion calculus for positive definite kernels on spheres"};

    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    bool quiet = false;

    app.add_option("--config", config_path, "job config file (JSON)")->required();
    app.add_option("--out", out_dir, "output directory for CSV tables and the manifest");
    app.add_option("--seed", seed, "override the config seed");
    app.add_flag("--quiet", quiet, "suppress progress output");

    CLI11_PARSE(app, argc, argv);

    return schoenberg::job::run_job(config_path, out_dir, seed, quiet);
}
