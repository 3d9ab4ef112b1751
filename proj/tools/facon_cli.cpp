#include <iostream>

#include "CLI11.hpp"

#include "facon/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic set of a polynomial mapping, stratified by facons", "facon"};
    app.set_version_flag("--version", facon::kVersion);
    app.require_subcommand(1);

    facon::RunConfig config;
    std::string format = "json";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", config.input, "Mapping file")->required();
        sub->add_option("-E,--max-exponent", config.options.max_exponent, "Exponent box bound E")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("-D,--degree", config.options.degree, "Degree bound for implicit equations")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.options.seed, "Random seed")->envname("FACON_SEED")->capture_default_str();
        sub->add_option("--trials", config.options.trials, "Jacobian rank trials per image")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "Facon catalog, stratification and frontier check");
    auto* stratify = app.add_subcommand("stratify", "Stratification without the facon catalog");
    auto* verify = app.add_subcommand("verify", "Numeric and brute-force cross-checks");
    auto* count = app.add_subcommand("count-facons", "Maximum number of facons in dimension n");
    add_common(analyze);
    add_common(stratify);
    add_common(verify);
    count->add_option("-n", config.n, "Dimension")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : facon::kExitInput;
    }

    if (analyze->parsed()) config.command = facon::Command::Analyze;
    if (stratify->parsed()) config.command = facon::Command::Stratify;
    if (verify->parsed()) config.command = facon::Command::Verify;
    if (count->parsed()) config.command = facon::Command::CountFacons;
    config.format = format == "text" ? facon::Format::Text : facon::Format::Json;
    return facon::run(config, std::cout, std::cerr);
}
