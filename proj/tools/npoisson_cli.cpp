// Command-line front end: run scenario manifests and the built-in identity suites.
//
// Exit codes: 0 all pass, 1 mismatch or verification failure, 2 parse or usage error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "npoisson/error.hpp"
#include "npoisson/scenario.hpp"
#include "npoisson/suites.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

int run_command(const std::string& path, bool machine, const std::optional<std::string>& only)
{
    npoisson::Scenario scenario;
    try {
        scenario = npoisson::parse_scenario_file(path);
    } catch (const npoisson::ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
        return exit_usage;
    } catch (const npoisson::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    npoisson::Report report;
    try {
        report = npoisson::run_scenario(scenario, only);
    } catch (const npoisson::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (machine)
        npoisson::write_machine_report(std::cout, report);
    else
        npoisson::write_report(std::cout, report);
    return report.success() ? exit_ok : exit_failure;
}

int verify_command(const std::string& suite, const std::optional<unsigned>& n)
{
    npoisson::SuiteOutcome outcome;
    try {
        outcome = npoisson::run_suite(suite, n);
    } catch (const npoisson::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    std::cout << "suite " << outcome.name << ": " << (outcome.passed() ? "pass" : "FAIL") << " (" << outcome.checks
              << " checks, " << outcome.failures << " failures)\n";
    for (const auto& line : outcome.details) std::cout << "  " << line << "\n";
    return outcome.passed() ? exit_ok : exit_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact exterior calculus for generalized Poisson, Nambu, Jacobi and Dirac brackets"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run the tasks of a scenario file");
    std::string scenario_path;
    bool machine = false;
    std::string only;
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    run->add_flag("--machine", machine, "One tab-separated line per task");
    run->add_option("--only", only, "Run only the named task");

    auto* verify = app.add_subcommand("verify", "Run a built-in identity suite");
    std::string suite;
    unsigned n = 0;
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(npoisson::suite_names()));
    auto* n_option = verify->add_option("--n", n, "Half-dimension for parameterized suites")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (run->parsed())
        return run_command(scenario_path, machine, only.empty() ? std::nullopt : std::optional<std::string>(only));
    return verify_command(suite, n_option->count() ? std::optional<unsigned>(n) : std::nullopt);
}
