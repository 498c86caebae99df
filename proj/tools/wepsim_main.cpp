#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wepsim/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "wepsim - round-based lifetime simulator for clustered heterogeneous "
        "wireless sensor networks"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_dir;
    int seed_count = 0;
    std::int64_t base_seed = -1;
    std::vector<double> alpha_list;
    std::vector<double> m_list;

    auto* run = app.add_subcommand("run", "Run every (protocol, seed) pair of a spec");
    run->add_option("--spec", spec_path, "experiment spec file")->required();
    run->add_option("--out", out_dir, "output directory (overrides the spec)");
    run->add_option("--seeds", seed_count, "number of seeds (overrides the spec)");
    run->add_option("--base-seed", base_seed, "first seed of the range");

    auto* sweep = app.add_subcommand(
        "sweep", "Cross-product sweep over alpha (and optionally m) values");
    sweep->add_option("--spec", spec_path, "experiment spec file")->required();
    sweep->add_option("--alpha", alpha_list, "alpha values")
        ->delimiter(',');
    sweep->add_option("--m", m_list, "advanced-fraction values")->delimiter(',');
    sweep->add_option("--out", out_dir, "output directory (overrides the spec)");
    sweep->add_option("--seeds", seed_count, "number of seeds (overrides the spec)");
    sweep->add_option("--base-seed", base_seed, "first seed of the range");

    auto* paper = app.add_subcommand(
        "paper", "Built-in comparison: all protocols at m=0.2, alpha=1..4");
    paper->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (paper->parsed()) return wepsim::cmd_paper(out_dir);

        auto spec = wepsim::load_spec_file(spec_path);
        if (!out_dir.empty()) spec.output_dir = out_dir;
        if (seed_count > 0 || base_seed >= 0) {
            const int count = seed_count > 0 ? seed_count
                                             : static_cast<int>(spec.seeds.size());
            const std::uint64_t base =
                base_seed >= 0 ? static_cast<std::uint64_t>(base_seed) : spec.seeds.front();
            wepsim::set_seed_range(spec, count, base);
        }
        if (!alpha_list.empty()) spec.sweep_alpha = alpha_list;
        if (!m_list.empty()) spec.sweep_m = m_list;

        if (run->parsed()) return wepsim::cmd_run(spec);
        return wepsim::cmd_sweep(spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
