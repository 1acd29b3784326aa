#include "orifold/orifold.h"

#include "io/reports.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

using orifold::json;

struct orf_ctx_s {
    orifold::RunConfig cfg;
};

struct orf_doc_s {
    json j;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(const std::string& msg) { g_last_error = msg; }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ','))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

template <class Fn>
char* guarded(int* status, Fn&& fn) {
    g_last_error.clear();
    try {
        json rep = fn();
        if (status) *status = orifold::report_exit_code(rep);
        return dup_string(rep.dump(2) + "\n");
    } catch (const std::exception& e) {
        set_error(e.what());
        if (status) *status = ORF_ERROR;
        return nullptr;
    }
}

}  // namespace

extern "C" {

orf_ctx* orf_ctx_new(void) { return new (std::nothrow) orf_ctx_s(); }

void orf_ctx_free(orf_ctx* ctx) { delete ctx; }

int orf_ctx_set(orf_ctx* ctx, const char* key, const char* value) {
    if (!ctx || !key || !value) {
        set_error("null argument");
        return ORF_ERROR;
    }
    try {
        std::string k(key), v(value);
        auto& cfg = ctx->cfg;
        if (k == "order")
            cfg.order = std::stoi(v);
        else if (k == "u-order")
            cfg.u_order = std::stoi(v);
        else if (k == "z-order")
            cfg.z_order = std::stoi(v);
        else if (k == "mode") {
            if (v != "exact" && v != "float") throw std::invalid_argument("mode: exact|float");
            cfg.mode = v;
        } else if (k == "bits")
            cfg.bits = std::stol(v);
        else if (k == "tol")
            cfg.tol = std::stod(v);
        else if (k == "perm")
            cfg.perm = parse_int_list(v);
        else if (k == "tau") {
            auto comma = v.find(',');
            cfg.tau.pi_mult = orifold::Rat::parse(comma == std::string::npos ? v : v.substr(0, comma));
            cfg.tau.offset =
                comma == std::string::npos ? orifold::Rat(0) : orifold::Rat::parse(v.substr(comma + 1));
        } else if (k == "workers")
            cfg.workers = std::max(1, std::stoi(v));
        else if (k == "orbit")
            cfg.orbit = std::stoi(v);
        else
            throw std::invalid_argument("unknown configuration key: " + k);
        return ORF_OK;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ORF_ERROR;
    }
}

const char* orf_last_error(void) { return g_last_error.c_str(); }

orf_doc* orf_doc_parse(const char* json_text) {
    g_last_error.clear();
    if (!json_text) {
        set_error("null document text");
        return nullptr;
    }
    try {
        auto* doc = new orf_doc_s();
        doc->j = json::parse(json_text);
        return doc;
    } catch (const std::exception& e) {
        set_error(std::string("parse error: ") + e.what());
        return nullptr;
    }
}

char* orf_doc_to_json(const orf_doc* doc) {
    if (!doc) {
        set_error("null document");
        return nullptr;
    }
    return dup_string(doc->j.dump(2) + "\n");
}

void orf_doc_free(orf_doc* doc) { delete doc; }

void orf_string_free(char* s) { std::free(s); }

char* orf_verify(orf_ctx* ctx, const orf_doc* doc, int* status) {
    if (!ctx || !doc) {
        set_error("null argument");
        if (status) *status = ORF_ERROR;
        return nullptr;
    }
    return guarded(status, [&] { return orifold::run_verify(ctx->cfg, doc->j); });
}

char* orf_analyze(orf_ctx* ctx, const orf_doc* doc, int* status) {
    if (!ctx || !doc) {
        set_error("null argument");
        if (status) *status = ORF_ERROR;
        return nullptr;
    }
    return guarded(status, [&] { return orifold::run_analyze(ctx->cfg, doc->j); });
}

char* orf_validate(orf_ctx* ctx, const orf_doc* doc, int* status) {
    if (!ctx || !doc) {
        set_error("null argument");
        if (status) *status = ORF_ERROR;
        return nullptr;
    }
    return guarded(status, [&] { return orifold::run_validate(ctx->cfg, doc->j); });
}

char* orf_braid(orf_ctx* ctx, const orf_doc* doc, const char* word, int* status) {
    if (!ctx || !doc || !word) {
        set_error("null argument");
        if (status) *status = ORF_ERROR;
        return nullptr;
    }
    std::string w(word);
    return guarded(status, [&] { return orifold::run_braid(ctx->cfg, doc->j, w); });
}

char* orf_cohft(orf_ctx* ctx, const orf_doc* doc, int tails, int max_edges, int* status) {
    if (!ctx || !doc) {
        set_error("null argument");
        if (status) *status = ORF_ERROR;
        return nullptr;
    }
    return guarded(status, [&] { return orifold::run_cohft(ctx->cfg, doc->j, tails, max_edges); });
}

const char* orf_version(void) { return "orifold 1.0.0"; }

}  // extern "C"
