// equivlk <subcommand> --config file.json [--seed N] [--bits B] [--table] [--out file]
//
// Exit status: 0 when every check passes, 1 when some check fails, 2 for
// usage or config errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "equivlk/errors.hpp"
#include "equivlk/harness.hpp"

using namespace equivlk;

int main(int argc, char** argv) {
    CLI::App app{"Equivariant L-value and Fitting-invariant verification campaigns"};
    std::string sub;
    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<long> bits;
    bool table = false;
    std::string out_path;
    app.add_option("subcommand", sub, "campaign to run")->required()->check(CLI::IsMember(harness::subcommands()));
    app.add_option("--config", config_path, "JSON config (defaults apply when omitted)")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--bits", bits, "working precision in bits")->check(CLI::Range(32L, 4096L));
    app.add_flag("--table", table, "print a human-readable table instead of JSON");
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    try {
        Json config = Json::object();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            try {
                config = Json::parse(in);
            } catch (const Json::parse_error& e) {
                throw SchemaError(std::string("config is not valid JSON: ") + e.what());
            }
        }
        const harness::Report report = harness::run(sub, config, seed, bits);
        const std::string json = report.to_json().dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw SchemaError("cannot write " + out_path);
            out << json;
        }
        if (table) {
            std::cout << report.table();
        } else if (out_path.empty()) {
            std::cout << json;
        }
        return report.ok() ? 0 : 1;
    } catch (const SchemaError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
