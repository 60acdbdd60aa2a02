#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "slopes/cli.hpp"

int main(int argc, char** argv) {
    using namespace slopes::cli;
    CLI::App app{"Exact slope calculus for filtered (phi,N)-modules, FF-curve sheaves and BC spaces"};
    Command cmd;
    std::string format;
    app.add_option("command", cmd.name, "Operation to run")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("--input", cmd.input, "Input JSON file, or - for stdin")->default_val("-");
    app.add_option("--seed", cmd.seed, "Seed for uncertified randomized searches")->default_val(0);
    app.add_flag("--oracle", cmd.oracle, "Force exhaustive verification paths");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "svg"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
        return kInputError;
    }
    if (!format.empty()) cmd.format = format;
    return run(cmd, std::cin, std::cout, std::cerr);
}
