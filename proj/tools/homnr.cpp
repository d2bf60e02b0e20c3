#include <iostream>

#include <CLI11.hpp>

#include "homnr/cli.hpp"

namespace {

struct Command {
    CLI::App* app;
    std::vector<std::string> options;
    std::vector<std::string> flags;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cohomology, deformations and extensions of Hom-Leibniz and Hom-Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output = "json";
    app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "text"}));

    homnr::cli::JobSpec job;
    std::vector<Command> commands;
    auto add = [&](const std::string& name, const std::string& help,
                   std::vector<std::pair<std::string, std::string>> options,
                   std::vector<std::pair<std::string, std::string>> flags = {}) {
        Command c{app.add_subcommand(name, help), {}, {}};
        for (const auto& [opt, what] : options) {
            c.app->add_option("--" + opt, job.args[name + "/" + opt], what);
            c.options.push_back(opt);
        }
        for (const auto& [flag, what] : flags) {
            c.app->add_flag("--" + flag, what);
            c.flags.push_back(flag);
        }
        commands.push_back(c);
    };

    add("verify", "Check the identities of an algebra's kind, or the axioms of a representation",
        {{"algebra", "Algebra file"}, {"kind", "Kind to check instead of the declared one"}, {"rep", "Representation file"}});
    add("bracket", "Bracket two cochains",
        {{"kind", "left, right or lie"}, {"f", "First cochain file"}, {"g", "Second cochain file"},
         {"beta", "Twist matrix file (identity when omitted)"}});
    add("cohomology", "Cocycle, coboundary and cohomology dimensions",
        {{"algebra", "Algebra file"}, {"rep", "Representation file"},
         {"flavor", "adjoint-left, adjoint-right, adjoint-symmetric, adjoint-lie or representation"},
         {"max-degree", "Highest degree reported (default 2)"}});
    add("deform", "Deformation defect and obstruction report",
        {{"file", "Deformation file"}, {"mode", "truncated or exact (default truncated)"}},
        {{"extend", "Solve for the next coefficient"}});
    add("extend", "Build the extension of a representation by a cocycle",
        {{"rep", "Representation file"}, {"theta", "Cocycle file (zero when omitted)"}},
        {{"check-only", "Only verify the representation and the cocycle"}});
    add("classify", "Classify an extension", {{"extension", "Extension file"}});
    add("decompose", "Bring an extension to standard form through a section",
        {{"extension", "Extension file"}, {"section", "Section matrix file (solved for when omitted)"}});
    add("equiv", "Decide equivalence of two abelian extensions",
        {{"e1", "First extension file"}, {"e2", "Second extension file"}, {"psi", "Base isomorphism (identity)"},
         {"phi", "Module isomorphism (identity)"}});
    add("emit-fixtures", "Write the fixture algebras as JSON files", {{"dir", "Output directory"}});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    homnr::cli::JobSpec run_job;
    for (const auto& c : commands) {
        if (!c.app->parsed()) continue;
        run_job.command = c.app->get_name();
        for (const auto& opt : c.options) {
            const std::string& v = job.args[run_job.command + "/" + opt];
            if (!v.empty()) run_job.args[opt] = v;
        }
        for (const auto& flag : c.flags)
            if (c.app->count("--" + flag) > 0) run_job.flags.insert(flag);
    }

    homnr::cli::Report report;
    try {
        run_job.max_dim = homnr::cli::max_dim_from_env();
        report = homnr::cli::run(run_job);
    } catch (const homnr::InputError& e) {
        report.command = run_job.command;
        report.status = "fail";
        report.exit_code = 2;
        report.payload = {{"error", {{"kind", "input"}, {"message", e.what()}}}};
    }
    if (report.payload.contains("error")) std::cerr << "homnr: " << report.payload["error"]["message"].get<std::string>() << "\n";
    if (output == "text")
        std::cout << homnr::cli::to_text(report);
    else
        std::cout << homnr::io::dump(homnr::cli::to_json(report));
    return report.exit_code;
}
