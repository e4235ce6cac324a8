// Command-line front end: family pipelines, the acceptance sweep, and the
// generic SNF / homology utilities over the JSON schemas.
#include "thf/excision.hpp"
#include "thf/serialize.hpp"
#include "thf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct OutputOpts {
    std::string format = "json";  // json | markdown
    std::string out_file;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: json | markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_option("--out", opts.out_file, "write the report to FILE instead of stdout");
}

void emit(const OutputOpts& opts, const std::string& text) {
    if (opts.out_file.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(opts.out_file);
    if (!f) thf::fail("parse", "cannot open output file " + opts.out_file);
    f << text << "\n";
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) thf::fail("parse", "cannot open input file " + path);
        buf << f.rdbuf();
    }
    return buf.str();
}

std::string module_markdown(const thf::GradedModule& m, const thf::DerivationLog& log) {
    std::ostringstream out;
    out << "result: " << thf::summarize(m) << "\n\n";
    out << "| step | rule | input | output |\n|---|---|---|---|\n";
    for (const auto& s : log)
        out << "| " << s.step << " | " << s.anchor << " | " << s.input_summary << " | "
            << s.output_summary << " |";
    return out.str();
}

void run_family_command(const std::string& family_name, const thf::FamilySpec& spec,
                        const OutputOpts& opts) {
    thf::DerivationLog log;
    thf::GradedModule m = thf::run_family(spec, &log);
    if (opts.format == "markdown") {
        emit(opts, module_markdown(m, log));
        return;
    }
    json report;
    report["family"] = family_name;
    report["module"] = thf::module_to_json(m);
    report["derivation_log"] = thf::log_to_json(log);
    emit(opts, report.dump(2));
}

int run(int argc, char** argv) {
    CLI::App app{"exact twisted Heegaard Floer computations for genus-one excision families"};
    app.require_subcommand(1);

    long m = 1, n = 1;
    int clasp = 1;
    std::string d = "1";
    std::string spec_file, input_file;
    OutputOpts opts;

    auto* tk = app.add_subcommand("twist-knot", "twisted 0-surgery on a twist knot");
    tk->add_option("--n", n, "twist parameter (nonzero)");
    tk->add_option("--d", d, "twisting-class evaluation, a nonzero rational");
    tk->add_option("--spec", spec_file, "family spec file (TOML or JSON)");
    add_output_opts(tk, opts);

    auto* wh = app.add_subcommand("whitehead", "twisted 0-surgery on a Whitehead-type link");
    wh->add_option("--n", n, "twist parameter (nonzero)");
    wh->add_option("--d", d, "twisting-class evaluation, a nonzero rational");
    wh->add_option("--spec", spec_file, "family spec file (TOML or JSON)");
    add_output_opts(wh, opts);

    auto* bo = app.add_subcommand("borromean", "twisted 0-surgery on a Borromean-type link");
    bo->add_option("--m", m, "first twist parameter (nonzero)");
    bo->add_option("--n", n, "second twist parameter (nonzero)");
    bo->add_option("--d", d, "twisting-class evaluation, a nonzero rational");
    bo->add_option("--spec", spec_file, "family spec file (TOML or JSON)");
    add_output_opts(bo, opts);

    auto* tb = app.add_subcommand("two-bridge", "twisted HF of a C(m, clasp, n) surgery");
    tb->add_option("--m", m, "first parameter (nonzero)");
    tb->add_option("--clasp", clasp, "clasp sign, +1 or -1");
    tb->add_option("--n", n, "second parameter (nonzero)");
    tb->add_option("--d", d, "twisting-class evaluation, a nonzero rational");
    tb->add_option("--spec", spec_file, "family spec file (TOML or JSON)");
    add_output_opts(tb, opts);

    auto* ver = app.add_subcommand("verify", "run the full acceptance sweep");
    add_output_opts(ver, opts);

    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix document");
    snf->add_option("input", input_file, "matrix JSON file (default: stdin)");
    add_output_opts(snf, opts);

    auto* ch = app.add_subcommand("complex-homology", "homology of a chain complex document");
    ch->add_option("input", input_file, "complex JSON file (default: stdin)");
    add_output_opts(ch, opts);

    CLI11_PARSE(app, argc, argv);

    auto family_spec = [&](const char* which) -> thf::FamilySpec {
        if (!spec_file.empty()) {
            bool toml = spec_file.size() < 5 ||
                        spec_file.compare(spec_file.size() - 5, 5, ".json") != 0;
            return thf::parse_family_spec(read_input(spec_file), toml);
        }
        thf::FamilySpec spec;
        spec.omega.d = thf::parse_rational(d);
        std::string w = which;
        if (w == "twist-knot") spec.family = thf::TwistKnotZeroSurgery{n};
        if (w == "whitehead") spec.family = thf::WhiteheadZeroSurgery{n};
        if (w == "borromean") spec.family = thf::BorromeanZeroSurgery{m, n};
        if (w == "two-bridge") spec.family = thf::TwoBridge{m, clasp, n};
        return spec;
    };

    if (tk->parsed()) run_family_command("twist-knot", family_spec("twist-knot"), opts);
    if (wh->parsed()) run_family_command("whitehead", family_spec("whitehead"), opts);
    if (bo->parsed()) run_family_command("borromean", family_spec("borromean"), opts);
    if (tb->parsed()) run_family_command("two-bridge", family_spec("two-bridge"), opts);

    if (ver->parsed()) {
        auto results = thf::run_verification();
        bool all = true;
        if (opts.format == "markdown") {
            std::ostringstream out;
            out << "| check | anchor | status |\n|---|---|---|\n";
            for (const auto& r : results) {
                all = all && r.pass;
                out << "| " << r.name << " | " << r.anchor << " | "
                    << (r.pass ? "pass" : "FAIL: " + r.detail) << " |\n";
            }
            emit(opts, out.str());
        } else {
            json arr = json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                json jr = {{"check", r.name}, {"anchor", r.anchor}, {"pass", r.pass}};
                if (!r.pass) jr["detail"] = r.detail;
                arr.push_back(jr);
            }
            emit(opts, arr.dump(2));
        }
        for (const auto& r : results)
            std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
        return all ? 0 : 1;
    }

    if (snf->parsed()) {
        json doc = json::parse(read_input(input_file));
        emit(opts, thf::snf_to_json(thf::parse_matrix_json(doc)).dump(2));
    }
    if (ch->parsed()) {
        json doc = json::parse(read_input(input_file));
        emit(opts, thf::homology_to_json(thf::parse_complex_json(doc)).dump(2));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const thf::Error& e) {
        json err = {{"error", e.code}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 1;
    } catch (const json::exception& e) {
        json err = {{"error", "parse"}, {"message", e.what()}};
        std::cout << err.dump() << "\n";
        return 1;
    }
}
