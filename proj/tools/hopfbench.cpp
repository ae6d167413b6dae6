#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hdw/cli.hpp"

namespace {

int finish(const hdw::Report& rep, const std::string& machine_out, const std::string& extra = "") {
    std::cout << rep.to_text();
    if (!extra.empty()) std::cout << extra;
    if (!machine_out.empty()) {
        std::ofstream out(machine_out);
        if (!out) {
            std::cerr << "error: cannot write " << machine_out << "\n";
            return 2;
        }
        out << rep.to_json() << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for a family of braided Hopf algebras"};
    app.require_subcommand(1);

    std::string config_path, machine_out, dump_out;
    hdw::CommandOptions opt;
    app.add_option("--machine-out", machine_out, "write the report as JSON to this path");
    app.add_option("--max-group-order", opt.max_group_order,
                   "bound for the automorphism brute force (default 64)");

    auto* c_verify = app.add_subcommand("verify-hopf", "build H_D and run every Hopf check");
    c_verify->add_option("config", config_path, "workbench config file")->required();

    auto* c_dump = app.add_subcommand("dump-structure", "emit exact structure-constant tables");
    c_dump->add_option("config", config_path, "workbench config file")->required();
    c_dump->add_option("--out", dump_out, "write the dump to this path instead of stdout");

    auto* c_comod = app.add_subcommand("verify-comodule-algebra",
                                       "validate a comodule-algebra block against H_D");
    c_comod->add_option("config", config_path, "workbench config file")->required();

    auto* c_cleft = app.add_subcommand("cleft", "run the full cleft-extension pipeline");
    c_cleft->add_option("config", config_path, "workbench config file")->required();
    c_cleft->add_flag("--experimental-diagram-checks", opt.experimental_diagrams,
                      "also verify the diagrammatic cocycle/twisted-module conditions");

    auto* c_fix = app.add_subcommand("fixtures", "run the built-in example data");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_fix->parsed()) return finish(hdw::cmd_fixtures(opt), machine_out);
        hdw::WorkbenchConfig cfg = hdw::parse_config_file(config_path);
        if (c_verify->parsed()) return finish(hdw::cmd_verify_hopf(cfg, opt), machine_out);
        if (c_dump->parsed()) {
            std::string dump = hdw::cmd_dump_structure(cfg);
            if (dump_out.empty()) {
                std::cout << dump;
            } else {
                std::ofstream out(dump_out);
                if (!out) {
                    std::cerr << "error: cannot write " << dump_out << "\n";
                    return 2;
                }
                out << dump;
            }
            return 0;
        }
        if (c_comod->parsed())
            return finish(hdw::cmd_verify_comodule_algebra(cfg, opt), machine_out);
        if (c_cleft->parsed()) {
            std::string tables;
            hdw::Report rep = hdw::cmd_cleft(cfg, opt, &tables);
            return finish(rep, machine_out, tables);
        }
    } catch (const hdw::ConfigError& e) {
        std::cerr << config_path << ":" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
