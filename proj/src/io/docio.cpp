#include "io/docio.hpp"

#include <stdexcept>

namespace orifold {

json scalar_to_json(const Scalar& s) {
    if (s.is_real()) return s.re().str();
    return json{{"re", s.re().str()}, {"im", s.im().str()}};
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar(Rat::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rat(j.get<long>()));
    if (j.is_object()) {
        Rat re = j.contains("re") ? Rat::parse(j.at("re").get<std::string>()) : Rat(0);
        Rat im = j.contains("im") ? Rat::parse(j.at("im").get<std::string>()) : Rat(0);
        return Scalar(re, im);
    }
    throw std::invalid_argument("scalar: expected \"p/q\" or {re, im}");
}

json series_to_json(const FormalSeries& s) {
    json arr = json::array();
    for (const auto& [m, c] : s.terms()) {
        json term;
        term["exp"] = m.exponents();
        term["coeff"] = scalar_to_json(c);
        arr.push_back(term);
    }
    return arr;
}

FormalSeries series_from_json(const json& j, int nvars, int order) {
    FormalSeries s(nvars, order);
    if (!j.is_array()) throw std::invalid_argument("series: expected array of terms");
    for (const auto& term : j) {
        std::vector<uint32_t> e = term.at("exp").get<std::vector<uint32_t>>();
        if (static_cast<int>(e.size()) != nvars)
            throw std::invalid_argument("series: exponent arity mismatch");
        MultiIndex m(e);
        if (m.degree() > order)
            throw std::invalid_argument("series: term beyond the declared order");
        s.set_coeff(m, scalar_from_json(term.at("coeff")));
    }
    return s;
}

json matrix_to_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ScalarMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    ScalarMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j.at(static_cast<size_t>(r)).size()) != cols)
            throw std::invalid_argument("matrix: ragged rows");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = scalar_from_json(j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)));
    }
    return m;
}

json structure_to_json(const FlatFStructure& s) {
    json j;
    j["version"] = kDocVersion;
    j["type"] = "structure";
    j["n"] = s.n();
    j["order"] = s.order();
    json pots = json::array();
    for (const auto& f : s.potentials()) pots.push_back(series_to_json(f));
    j["potentials"] = pots;
    json unit = json::array();
    for (const auto& a : s.unit()) unit.push_back(scalar_to_json(a));
    j["unit"] = unit;
    if (s.euler()) {
        json q = json::array(), r = json::array();
        for (const auto& x : s.euler()->q) q.push_back(scalar_to_json(x));
        for (const auto& x : s.euler()->r) r.push_back(scalar_to_json(x));
        j["euler"] = json{{"q", q}, {"r", r}};
    } else {
        j["euler"] = nullptr;
    }
    j["lambda"] = scalar_to_json(s.lambda());
    return j;
}

FlatFStructure structure_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int order = j.at("order").get<int>();
    std::vector<FormalSeries> pots;
    for (const auto& p : j.at("potentials")) pots.push_back(series_from_json(p, n, order));
    if (static_cast<int>(pots.size()) != n)
        throw std::invalid_argument("structure: expected n potentials");
    std::vector<Scalar> unit;
    for (const auto& a : j.at("unit")) unit.push_back(scalar_from_json(a));
    std::optional<EulerData> euler;
    if (j.contains("euler") && !j.at("euler").is_null()) {
        EulerData ed;
        for (const auto& x : j.at("euler").at("q")) ed.q.push_back(scalar_from_json(x));
        for (const auto& x : j.at("euler").at("r")) ed.r.push_back(scalar_from_json(x));
        euler = ed;
    }
    Scalar lambda = j.contains("lambda") ? scalar_from_json(j.at("lambda")) : Scalar();
    return FlatFStructure(std::move(pots), std::move(unit), std::move(euler), lambda);
}

json datum_to_json(const MonodromyDatum& m) {
    json j;
    j["version"] = kDocVersion;
    j["type"] = "datum";
    j["n"] = m.n;
    json u = json::array();
    for (const auto& x : m.u) u.push_back(scalar_to_json(x));
    j["u"] = u;
    j["tau"] = json{{"pi_mult", m.tau.pi_mult.str()}, {"offset", m.tau.offset.str()}};
    j["B"] = matrix_to_json(m.B);
    j["D"] = matrix_to_json(m.D);
    j["L"] = matrix_to_json(m.L);
    j["S1"] = matrix_to_json(m.S1);
    j["S2"] = matrix_to_json(m.S2);
    j["C"] = matrix_to_json(m.C);
    j["mode"] = m.mode == NumericMode::Exact ? "exact" : "float";
    j["float_bits"] = static_cast<long>(m.float_bits);
    j["tol"] = m.tol;
    if (m.eta) j["eta"] = matrix_to_json(*m.eta);
    return j;
}

MonodromyDatum datum_from_json(const json& j) {
    MonodromyDatum m;
    m.n = j.at("n").get<int>();
    for (const auto& x : j.at("u")) m.u.push_back(scalar_from_json(x));
    m.tau.pi_mult = Rat::parse(j.at("tau").at("pi_mult").get<std::string>());
    m.tau.offset = j.at("tau").contains("offset")
                       ? Rat::parse(j.at("tau").at("offset").get<std::string>())
                       : Rat(0);
    m.B = matrix_from_json(j.at("B"));
    m.D = matrix_from_json(j.at("D"));
    m.L = matrix_from_json(j.at("L"));
    m.S1 = matrix_from_json(j.at("S1"));
    m.S2 = matrix_from_json(j.at("S2"));
    m.C = matrix_from_json(j.at("C"));
    if (j.contains("mode"))
        m.mode = j.at("mode").get<std::string>() == "float" ? NumericMode::Float : NumericMode::Exact;
    if (j.contains("float_bits")) m.float_bits = j.at("float_bits").get<long>();
    if (j.contains("tol")) m.tol = j.at("tol").get<double>();
    if (j.contains("eta") && !j.at("eta").is_null()) m.eta = matrix_from_json(j.at("eta"));
    if (static_cast<int>(m.u.size()) != m.n) throw std::invalid_argument("datum: u size mismatch");
    return m;
}

json dejet_to_json(const DEJet& jet) {
    json j;
    j["version"] = kDocVersion;
    j["type"] = "dejet";
    j["n"] = jet.n;
    j["order"] = jet.order;
    json u0 = json::array(), deltas = json::array();
    for (const auto& x : jet.u0) u0.push_back(scalar_to_json(x));
    for (const auto& x : jet.deltas) deltas.push_back(scalar_to_json(x));
    j["u0"] = u0;
    j["deltas"] = deltas;
    json g;
    for (int i = 0; i < jet.n; ++i)
        for (int k = 0; k < jet.n; ++k) {
            if (i == k) continue;
            g[std::to_string(i + 1) + "," + std::to_string(k + 1)] =
                series_to_json(jet.gamma.at(i, k));
        }
    j["gamma"] = g;
    return j;
}

DEJet dejet_from_json(const json& j) {
    DEJet jet;
    jet.n = j.at("n").get<int>();
    jet.order = j.at("order").get<int>();
    for (const auto& x : j.at("u0")) jet.u0.push_back(scalar_from_json(x));
    for (const auto& x : j.at("deltas")) jet.deltas.push_back(scalar_from_json(x));
    jet.gamma = SeriesMatrix(jet.n, jet.n, jet.n, jet.order);
    for (const auto& [key, val] : j.at("gamma").items()) {
        auto comma = key.find(',');
        int i = std::stoi(key.substr(0, comma)) - 1;
        int k = std::stoi(key.substr(comma + 1)) - 1;
        jet.gamma.at(i, k) = series_from_json(val, jet.n, jet.order);
    }
    return jet;
}

std::string doc_type(const json& j) {
    if (!j.is_object() || !j.contains("type")) return "";
    return j.at("type").get<std::string>();
}

}  // namespace orifold

namespace orifold {

json tree_to_json(const StableTree& t) {
    json j;
    j["version"] = kDocVersion;
    j["type"] = "tree";
    j["n"] = t.ntails();
    j["vertices"] = t.nvertices();
    json edges = json::array();
    for (int h = 0; h < t.nhalf(); ++h)
        if (t.mate(h) > h) edges.push_back(json::array({t.vertex_of(h), t.vertex_of(t.mate(h))}));
    j["edges"] = edges;
    json tails;
    for (int h = 0; h < t.nhalf(); ++h)
        if (t.tail_label(h) > 0) tails[std::to_string(t.tail_label(h))] = t.vertex_of(h);
    j["tails"] = tails;
    return j;
}

StableTree tree_from_json(const json& j) {
    int nv = j.at("vertices").get<int>();
    StableTree t;
    for (int v = 0; v < nv; ++v) t.add_vertex();
    for (const auto& [label, vertex] : j.at("tails").items())
        t.add_tail(vertex.get<int>(), std::stoi(label));
    for (const auto& e : j.at("edges")) t.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return t;
}

json loglaurent_to_json(const LogLaurentSeries& s) {
    json j;
    j["version"] = kDocVersion;
    j["type"] = "zseries";
    j["z_min_power"] = s.zmin();
    j["z_max_power"] = s.zmax();
    j["log_max_power"] = s.max_lpow();
    json terms = json::array();
    for (const auto& [key, m] : s.terms()) {
        json term;
        term["z"] = key.first;
        term["log"] = key.second;
        term["matrix"] = matrix_to_json(m);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

}  // namespace orifold
