// orifold command-line front end. Links only the C API of liborifold.

#include <orifold/orifold.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("input", "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const char* text) {
    if (out_path.empty() || out_path == "-") {
        std::fputs(text, stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
}

struct Common {
    std::string input;
    std::string out;
    std::string order = "8", u_order = "2", z_order = "6", mode = "exact", bits = "128",
                tol = "1e-12", perm, tau = "0", workers = "1";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("input", c.input, "input document (JSON)")->required();
    cmd->add_option("--out", c.out, "output path ('-' = stdout)")->envname("ORIFOLD_OUT");
    cmd->add_option("--order", c.order, "t-truncation order")->envname("ORIFOLD_ORDER");
    cmd->add_option("--u-order", c.u_order, "frame truncation order")->envname("ORIFOLD_U_ORDER");
    cmd->add_option("--z-order", c.z_order, "z-truncation order")->envname("ORIFOLD_Z_ORDER");
    cmd->add_option("--mode", c.mode, "numeric mode: exact|float")->envname("ORIFOLD_MODE");
    cmd->add_option("--bits", c.bits, "float-shadow precision (bits)")->envname("ORIFOLD_BITS");
    cmd->add_option("--tol", c.tol, "float-shadow tolerance")->envname("ORIFOLD_TOL");
    cmd->add_option("--perm", c.perm, "canonical ordering permutation, e.g. 2,1")
        ->envname("ORIFOLD_PERM");
    cmd->add_option("--tau", c.tau, "direction tau as 'p/q' (of pi) or 'p/q,r/s'")
        ->envname("ORIFOLD_TAU");
    cmd->add_option("--workers", c.workers, "worker threads for parallel checks")
        ->envname("ORIFOLD_WORKERS");
}

int apply_common(orf_ctx* ctx, const Common& c) {
    const std::pair<const char*, const std::string*> kv[] = {
        {"order", &c.order},   {"u-order", &c.u_order}, {"z-order", &c.z_order},
        {"mode", &c.mode},     {"bits", &c.bits},       {"tol", &c.tol},
        {"tau", &c.tau},       {"workers", &c.workers},
    };
    for (auto [k, v] : kv)
        if (orf_ctx_set(ctx, k, v->c_str()) != ORF_OK) return ORF_ERROR;
    if (!c.perm.empty() && orf_ctx_set(ctx, "perm", c.perm.c_str()) != ORF_OK) return ORF_ERROR;
    return ORF_OK;
}

int finish(char* report, int status, const Common& c) {
    if (!report) {
        std::fprintf(stderr, "orifold: error: %s\n", orf_last_error());
        return ORF_ERROR;
    }
    write_output(c.out, report);
    orf_string_free(report);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orifold: exact analysis of oriented-associativity potentials and their monodromy data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(orf_version()));

    Common cv, ca, cd, cb, cc;
    std::string braid_word = "";
    std::string orbit = "0";
    int tails = 4, max_edges = 2;

    CLI::App* verify = app.add_subcommand("verify", "check the flat F-manifold axioms of a structure file");
    add_common(verify, cv);
    CLI::App* analyze = app.add_subcommand("analyze", "canonical-frame report and admissibility classification");
    add_common(analyze, ca);
    CLI::App* validate = app.add_subcommand("validate", "check the nine admissibility conditions of a datum file");
    add_common(validate, cd);
    CLI::App* braid = app.add_subcommand("braid", "apply a braid word to a monodromy datum");
    add_common(braid, cb);
    braid->add_option("--word", braid_word, "braid word, e.g. 'b1 b2 -b1'")->required();
    braid->add_option("--orbit", orbit, "bounded orbit enumeration depth")->envname("ORIFOLD_ORBIT");
    CLI::App* cohft = app.add_subcommand("cohft", "correlator table and Keel/Manin relation report");
    add_common(cohft, cc);
    cohft->add_option("--tails", tails, "number of tails");
    cohft->add_option("--max-edges", max_edges, "maximal edge count");

    CLI11_PARSE(app, argc, argv);

    orf_ctx* ctx = orf_ctx_new();
    int rc = ORF_ERROR;
    try {
        Common* c = nullptr;
        if (verify->parsed()) c = &cv;
        if (analyze->parsed()) c = &ca;
        if (validate->parsed()) c = &cd;
        if (braid->parsed()) c = &cb;
        if (cohft->parsed()) c = &cc;
        if (apply_common(ctx, *c) != ORF_OK) {
            std::fprintf(stderr, "orifold: bad option: %s\n", orf_last_error());
            orf_ctx_free(ctx);
            return ORF_ERROR;
        }
        if (braid->parsed()) orf_ctx_set(ctx, "orbit", orbit.c_str());

        std::string text = read_file(c->input);
        orf_doc* doc = orf_doc_parse(text.c_str());
        if (!doc) {
            std::fprintf(stderr, "orifold: parse error: %s\n", orf_last_error());
            orf_ctx_free(ctx);
            return ORF_ERROR;
        }
        int status = ORF_ERROR;
        char* report = nullptr;
        if (verify->parsed()) report = orf_verify(ctx, doc, &status);
        if (analyze->parsed()) report = orf_analyze(ctx, doc, &status);
        if (validate->parsed()) report = orf_validate(ctx, doc, &status);
        if (braid->parsed()) report = orf_braid(ctx, doc, braid_word.c_str(), &status);
        if (cohft->parsed()) report = orf_cohft(ctx, doc, tails, max_edges, &status);
        rc = finish(report, status, *c);
        orf_doc_free(doc);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "orifold: %s\n", e.what());
        rc = ORF_ERROR;
    }
    orf_ctx_free(ctx);
    return rc;
}
