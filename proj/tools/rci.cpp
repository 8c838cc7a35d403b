#include "rci/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int usage_error(const std::string& message, bool pretty) {
    std::cerr << rci::cli::render({{"error", {{"kind", "InvalidInput"}, {"message", message}}}}, pretty);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mixed volumes, BKK counts, flag-variety degrees and Poincare duality algebras"};
    app.set_version_flag("--version", std::string(rci::cli::kVersion));
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::string inline_json;
    bool pretty = false;
    bool table = false;
    rci::cli::JobRequest req;

    for (const auto& name : rci::cli::subcommands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input,--input,-i", input, "input JSON file, '-' for stdin");
        sub->add_option("--json", inline_json, "inline JSON input (overrides --input)");
        sub->add_option("--output,-o", output, "report destination, '-' for stdout");
        sub->add_option("--seed", req.seed, "oracle seed");
        sub->add_option("--trials", req.trials, "oracle trials");
        sub->add_option("--coeff-bound", req.coeff_bound, "oracle coefficient bound");
        sub->add_option("--retries", req.retries, "oracle redraws per trial before giving up");
        sub->add_flag("--pretty", pretty, "indent the JSON report");
        sub->add_flag("--table", table, "print a plain-text table instead of JSON");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what(), pretty);
    }
    req.subcommand = app.get_subcommands().front()->get_name();

    try {
        req.input = nlohmann::json::parse(inline_json.empty() ? read_all(input) : inline_json);
    } catch (const std::exception& e) {
        return usage_error(e.what(), pretty);
    }

    const auto result = rci::cli::run(req);
    if (result.exit_code != 0) {
        std::cerr << rci::cli::render(result.report, pretty);
        return result.exit_code;
    }
    const std::string text = table ? rci::cli::render_table(result.report) : rci::cli::render(result.report, pretty);
    if (output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) return usage_error("cannot open output file '" + output + "'", pretty);
        out << text;
    }
    return 0;
}
