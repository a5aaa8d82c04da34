#include "cspoly/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cspoly: cannot write " << path << '\n';
        return false;
    }
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified constructions of centrally symmetric neighborly polytopes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", cspoly::kToolVersion);

    cspoly::RunConfig cfg;
    std::optional<std::string> out_path;
    std::optional<std::string> vertices_path;
    std::optional<std::string> refusals_path;
    std::optional<std::string> certificates_path;
    std::optional<std::string> family_out_path;
    std::optional<double> tol_face;

    app.add_option("--precision", cfg.precision_bits, "working precision in bits (default per command)");
    app.add_option("--tol-face", tol_face, "minimum certified face margin");
    app.add_option("--cap", cfg.cap, "maximum number of enumerated index sets");
    app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized family search");
    app.add_option("--out", out_path, "write the JSON report here instead of stdout");
    app.add_option("--vertices", vertices_path, "write vertex coordinates as CSV");
    app.add_option("--refusals", refusals_path, "write refused index sets as CSV");
    app.add_option("--certificates", certificates_path, "write face certificates as JSON");
    app.add_option("--family-out", family_out_path, "write the set family as JSON");
    app.add_flag("--timing", cfg.timing, "include wall-clock timings in the report");

    auto* two = app.add_subcommand("theorem-2neighb", "2-neighborly polytopes from A_m and Phi_m");
    two->add_option("--m", cfg.m, "tripling depth")->required();
    two->add_option("--s", cfg.s, "cluster size");

    auto* kn = app.add_subcommand("theorem-kneighb", "k-neighborly polytopes from V(F) and Psi_{k,m}");
    kn->add_option("--k", cfg.k, "neighborliness")->required();
    kn->add_option("--m", cfg.m, "ground set size")->required();
    kn->add_option("--family", cfg.family_path, "load the family from JSON");
    kn->add_option("--strategy", cfg.strategy, "exhaustive | greedy | random_restart");
    kn->add_option("--target", cfg.target, "family size to search for");
    kn->add_option("--s", cfg.s, "cluster size");

    auto* anti = app.add_subcommand("antipodal", "strictly antipodal point sets X_m and Y_{m,s}");
    anti->add_option("--m", cfg.m, "tripling depth")->required();
    anti->add_option("--s", cfg.s, "cluster size");

    auto* fam = app.add_subcommand("family", "generate or verify k-independent families");
    fam->add_option("--m", cfg.m, "ground set size")->required();
    fam->add_option("--k", cfg.k, "independence order")->required();
    fam->add_option("--strategy", cfg.strategy, "exhaustive | greedy | random_restart");
    fam->add_option("--target", cfg.target, "family size to search for");
    fam->add_option("--import", cfg.import_path, "verify a family read from JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cspoly::kExitConfigError;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (tol_face) {
        cfg.tol.face = *tol_face;
        cfg.tol_face_set = true;
    }
    if (cfg.command == "theorem-kneighb" && !cfg.family_path && kn->count("--strategy") == 0 && cfg.m > 12)
        cfg.strategy = "greedy";

    const cspoly::CommandResult result = cspoly::run_command(cfg);
    const std::string text = result.report.dump(2) + "\n";
    bool ok = true;
    if (out_path) {
        ok = write_file(*out_path, text) && ok;
    } else {
        std::cout << text;
    }
    if (vertices_path) ok = write_file(*vertices_path, result.vertices_csv) && ok;
    if (refusals_path) ok = write_file(*refusals_path, "set,indices,verdict\n" + result.refusals_csv) && ok;
    if (certificates_path)
        ok = write_file(*certificates_path,
                        (result.certificates ? *result.certificates : nlohmann::json::array()).dump(2) + "\n") && ok;
    if (family_out_path && result.family) ok = write_file(*family_out_path, result.family->dump(2) + "\n") && ok;
    if (result.report.contains("error")) std::cerr << "cspoly: " << result.report["error"].get<std::string>() << '\n';
    if (!ok && result.exit_code == cspoly::kExitOk) return cspoly::kExitConfigError;
    return result.exit_code;
}
