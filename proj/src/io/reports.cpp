#include "io/reports.hpp"

#include "cohft/correlator.hpp"
#include "frame/frame.hpp"
#include "monodromy/braid.hpp"

#include <set>

namespace orifold {

json RunConfig::to_json() const {
    json j;
    j["order"] = order;
    j["u_order"] = u_order;
    j["z_order"] = z_order;
    j["mode"] = mode;
    j["bits"] = bits;
    j["tol"] = tol;
    j["perm"] = perm;
    j["tau"] = json{{"pi_mult", tau.pi_mult.str()}, {"offset", tau.offset.str()}};
    j["workers"] = workers;
    j["orbit"] = orbit;
    return j;
}

static json residual_json(const ResidualReport& rep, const std::string& name) {
    json j;
    j["name"] = name;
    j["pass"] = rep.all_zero();
    j["first_failing_order"] = rep.first_failing_order();
    j["failing"] = rep.failing_labels();
    return j;
}

json run_verify(const RunConfig& cfg, const json& structure_doc) {
    FlatFStructure s = structure_from_json(structure_doc);
    json rep;
    rep["command"] = "verify";
    rep["config"] = cfg.to_json();
    json axioms = json::array();
    ResidualReport oa = oa_residual(s);
    axioms.push_back(residual_json(oa, "oriented-associativity"));
    bool pass = oa.all_zero();
    if (s.euler()) {
        ResidualReport eu = euler_residual(s);
        axioms.push_back(residual_json(eu, "euler-homogeneity"));
        pass = pass && eu.all_zero();
    }
    rep["axioms"] = axioms;
    FrobeniusMetric fm = frobenius_metric(s);
    json frob;
    frob["solution_space_dim"] = fm.basis.size();
    frob["nondegenerate_found"] = fm.nondegenerate.has_value();
    if (fm.nondegenerate) frob["eta"] = matrix_to_json(*fm.nondegenerate);
    rep["frobenius"] = frob;
    rep["pass"] = pass;
    return rep;
}

json run_analyze(const RunConfig& cfg, const json& structure_doc) {
    FlatFStructure s = structure_from_json(structure_doc);
    int max_k = s.order() - 4;
    int k = std::min(cfg.u_order, max_k);
    if (k < 1) throw std::domain_error("analyze: potential order too low for a frame");
    std::vector<int> perm;
    for (int p : cfg.perm) perm.push_back(p - 1);
    CanonicalFrame fr = build_frame(s, k, perm);
    json rep;
    rep["command"] = "analyze";
    rep["config"] = cfg.to_json();
    json u0 = json::array(), deltas = json::array(), lam = json::array(), mu = json::array();
    for (const auto& x : fr.u0) u0.push_back(scalar_to_json(x));
    for (const auto& x : fr.deltas) deltas.push_back(scalar_to_json(x));
    for (const auto& x : fr.formal_monodromy_diag()) lam.push_back(scalar_to_json(x));
    for (const auto& x : s.mu_lambda()) mu.push_back(scalar_to_json(x));
    rep["u0"] = u0;
    rep["deltas"] = deltas;
    rep["lambda_diag"] = lam;
    rep["mu_lambda"] = mu;
    rep["gamma0"] = matrix_to_json(fr.gamma.constant_term());
    rep["gamma_tilde0"] = matrix_to_json(fr.gamma_tilde.constant_term());
    json cls;
    cls["semisimple"] = true;  // build_frame established it
    cls["tame"] = !fr.coalescing();
    cls["coalescing"] = fr.coalescing();
    cls["resonant"] = fr.resonant();
    cls["doubly_resonant"] = fr.doubly_resonant();
    cls["admissible"] = !fr.doubly_resonant();
    rep["classification"] = cls;
    // z = 0 resonance pairs
    SpectrumData sp = spectrum(s);
    json pairs = json::array();
    for (auto [a, b] : sp.resonance_pairs) pairs.push_back(json::array({a + 1, b + 1}));
    rep["resonance_pairs"] = pairs;
    rep["pass"] = !fr.doubly_resonant();
    if (fr.doubly_resonant())
        rep["note"] = "doubly resonant: monodromy reconstruction refused for this germ";
    return rep;
}

json run_validate(const RunConfig& cfg, const json& datum_doc) {
    MonodromyDatum m = datum_from_json(datum_doc);
    if (cfg.mode == "float") m.mode = NumericMode::Float;
    ValidationReport rep = validate_datum(m);
    json j;
    j["command"] = "validate";
    j["config"] = cfg.to_json();
    json conditions = json::array();
    for (const auto& c : rep.conditions) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["exact"] = c.exact;
        cj["witness"] = c.witness;
        conditions.push_back(cj);
    }
    j["conditions"] = conditions;
    j["pass"] = rep.pass();
    if (m.eta) {
        ValidationReport fr = validate_frobenius_flags(m);
        json fj = json::array();
        for (const auto& c : fr.conditions)
            fj.push_back(json{{"name", c.name}, {"pass", c.pass}, {"exact", c.exact}, {"witness", c.witness}});
        j["frobenius_flags"] = fj;
    }
    return j;
}

json run_braid(const RunConfig& cfg, const json& datum_doc, const std::string& word_text) {
    MonodromyDatum m = datum_from_json(datum_doc);
    BraidWord word = parse_braid_word(word_text);
    MonodromyDatum out = braid_on_datum_word(m, word);
    json j;
    j["command"] = "braid";
    j["config"] = cfg.to_json();
    j["word"] = word;
    j["datum"] = datum_to_json(out);
    j["input_valid"] = validate_datum(m).pass();
    j["output_valid"] = validate_datum(out).pass();
    if (cfg.orbit > 0) {
        std::set<std::string> seen{datum_to_json(m).dump()};
        std::vector<MonodromyDatum> frontier{m};
        for (int depth = 0; depth < cfg.orbit; ++depth) {
            std::vector<MonodromyDatum> next;
            for (const auto& cur : frontier)
                for (int g = 1; g <= m.n - 1; ++g)
                    for (int sgn : {1, -1}) {
                        MonodromyDatum img = braid_on_datum(cur, sgn * g);
                        std::string key = datum_to_json(img).dump();
                        if (seen.insert(key).second) next.push_back(img);
                    }
            frontier = std::move(next);
            if (frontier.empty()) break;
        }
        j["orbit"] = json{{"depth", cfg.orbit}, {"size", seen.size()}};
    }
    j["pass"] = j["output_valid"].get<bool>();
    return j;
}

json run_cohft(const RunConfig& cfg, const json& structure_doc, int tails, int max_edges) {
    FlatFStructure s = structure_from_json(structure_doc);
    if (s.order() < tails)
        throw std::domain_error("cohft: potential order too low for the requested tails");
    int max_points = std::min(s.order(), tails + max_edges + 1);
    CorrelatorTable table = correlators_from_potential(s, max_points);
    RelationReport rel = check_relation_preservation(table, tails, max_edges, cfg.workers);
    json j;
    j["command"] = "cohft";
    j["config"] = cfg.to_json();
    j["tails"] = tails;
    j["max_edges"] = max_edges;
    json entries = json::array();
    for (const auto& [key, value] : table.entries()) {
        json e;
        e["upper"] = key.first;
        e["lower"] = key.second;
        e["value"] = scalar_to_json(value);
        entries.push_back(e);
    }
    j["correlators"] = json{{"dim", table.dim()}, {"max_points", table.max_points()}, {"entries", entries}};
    json relj;
    relj["checked"] = rel.checked;
    relj["pass"] = rel.pass();
    json vio = json::array();
    for (const auto& v : rel.violations) {
        json vj;
        vj["tree"] = v.tree_key;
        vj["rho"] = v.rho;
        vj["detail"] = v.detail;
        vio.push_back(vj);
        if (vio.size() >= 10) break;
    }
    relj["violations"] = vio;
    j["relations"] = relj;
    j["pass"] = rel.pass();
    return j;
}

int report_exit_code(const json& report) {
    if (report.contains("pass") && report.at("pass").is_boolean())
        return report.at("pass").get<bool>() ? 0 : 1;
    return 0;
}

}  // namespace orifold
