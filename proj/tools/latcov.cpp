// latcov: verify, refine, classify and enumerate lattice coverings of Z^2.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "latcov/cli.hpp"

namespace cli = latcov::cli;

int main(int argc, char** argv) {
    CLI::App app{"Coverings of Z^2 by cocyclic sublattices"};
    app.require_subcommand(1);

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "Check covering, irredundancy, minimality, Simpson bounds");
    verify->add_option("file", verify_file, "Covering file (text or JSON)")->required();

    std::string refine_file, member;
    latcov::Int prime = 0;
    auto* refine = app.add_subcommand("refine", "Replace a member by its p-descendants");
    refine->add_option("file", refine_file, "Covering file")->required();
    refine->add_option("--member", member, "Member lattice as c:d;N")->required();
    refine->add_option("--prime", prime, "Prime q")->required();

    std::string classify_file;
    auto* classify = app.add_subcommand("classify", "Print the index structure label");
    classify->add_option("file", classify_file, "Covering file")->required();

    cli::EnumerateArgs en;
    std::string dump;
    latcov::Int lcm = 0;
    const std::map<std::string, cli::Format> formats{
        {"table", cli::Format::table}, {"json", cli::Format::json}, {"csv", cli::Format::csv}};
    auto* enumerate = app.add_subcommand("enumerate", "All minimal coverings of a given size");
    enumerate->add_option("--size", en.size, "Number of lattices")->required();
    enumerate->add_flag("--strongly-minimal", en.only_strongly_minimal, "Only strongly minimal coverings");
    auto* lcm_opt = enumerate->add_option("--lcm", lcm, "Restrict to this index lcm");
    enumerate->add_option("--format", en.format, "table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    auto* dump_opt = enumerate->add_option("--dump", dump, "Write the report with every covering as JSON");
    enumerate->add_option("--workers", en.workers, "Worker threads (0 = all cores, 1 = serial)");

    latcov::Int ws_size = 0;
    auto* weights = app.add_subcommand("weight-solutions", "Index multisets of total weight 1");
    weights->add_option("--size", ws_size, "Number of indices")->required();

    std::string cong_file;
    auto* congruence = app.add_subcommand("congruence", "Covering systems of residue classes");
    congruence->require_subcommand(1);
    auto* cong_verify = congruence->add_subcommand("verify", "Check a system of residue classes");
    cong_verify->add_option("file", cong_file, "Classes as 'a mod N' lines or JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kUsage;
    }

    try {
        if (*verify) return cli::cmd_verify(cli::read_file(verify_file), std::cout);
        if (*refine) return cli::cmd_refine(cli::read_file(refine_file), member, prime, std::cout, std::cerr);
        if (*classify) return cli::cmd_classify(cli::read_file(classify_file), std::cout);
        if (*enumerate) {
            if (*lcm_opt) en.lcm = lcm;
            if (*dump_opt) en.dump_path = dump;
            return cli::cmd_enumerate(en, std::cout, std::cerr);
        }
        if (*weights) return cli::cmd_weight_solutions(ws_size, std::cout, std::cerr);
        if (*cong_verify) return cli::cmd_congruence_verify(cli::read_file(cong_file), std::cout);
    } catch (const latcov::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    }
    return cli::kUsage;
}
