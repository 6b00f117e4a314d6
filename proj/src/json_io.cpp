#include "novikov/json_io.hpp"

namespace nov {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

int to_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<int>();
}

int degree_key(const std::string& k, const std::string& where) {
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(k, &used);
    } catch (const std::exception&) {
        bad(where, "degree key '" + k + "' is not an integer");
    }
    if (used != k.size()) bad(where, "degree key '" + k + "' is not an integer");
    return n;
}

std::string str(const BigInt& b) { return b.str(); }

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
    Json a = Json::array();
    for (const auto& [m, c] : p.terms()) a.push_back({{"c", str(c)}, {"x", m.ex}, {"y", m.ey}});
    return a;
}

LaurentPoly poly_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where, "a polynomial is an array of terms");
    LaurentPoly p;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string w = where + "/" + std::to_string(i);
        const Json& t = j[i];
        if (!t.is_object() || !t.contains("c") || !t.contains("x") || !t.contains("y"))
            bad(w, "a term needs keys c, x, y");
        BigInt c;
        if (t["c"].is_string()) {
            const std::string& s = t["c"].get_ref<const std::string&>();
            std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
                bad(w + "/c", "'" + s + "' is not an integer");
            c = BigInt(s[0] == '+' ? s.substr(1) : s);
        } else if (t["c"].is_number_integer()) {
            c = t["c"].get<long long>();
        } else {
            bad(w + "/c", "expected an integer string");
        }
        p.add_term({to_int(t["x"], w + "/x"), to_int(t["y"], w + "/y")}, c);
    }
    return p;
}

Json complex_to_json(const FreeComplex& c) {
    Json j;
    j["flavor"] = c.flavor.name();
    Json ranks = Json::object();
    for (int n : c.degrees()) ranks[std::to_string(n)] = c.rank(n);
    j["ranks"] = ranks;
    Json diff = Json::object();
    for (const auto& [n, m] : c.diff) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < m.cols(); ++k) row.push_back(poly_to_json(m(i, k)));
            rows.push_back(row);
        }
        diff[std::to_string(n)] = rows;
    }
    j["diff"] = diff;
    return j;
}

FreeComplex complex_from_json(const Json& j) {
    if (!j.is_object()) bad("", "a complex is an object");
    FreeComplex c;
    if (j.contains("flavor")) {
        if (!j["flavor"].is_string()) bad("/flavor", "expected a string");
        try {
            c.flavor = flavor_from_name(j["flavor"].get<std::string>());
        } catch (const std::exception& e) {
            bad("/flavor", e.what());
        }
    }
    if (!j.contains("ranks") || !j["ranks"].is_object()) bad("/ranks", "expected an object of ranks");
    for (const auto& [k, v] : j["ranks"].items()) {
        std::string w = "/ranks/" + k;
        int r = to_int(v, w);
        if (r < 0) bad(w, "negative rank");
        if (r > 0) c.ranks[degree_key(k, w)] = r;
    }
    if (j.contains("diff")) {
        if (!j["diff"].is_object()) bad("/diff", "expected an object of matrices");
        for (const auto& [k, v] : j["diff"].items()) {
            std::string w = "/diff/" + k;
            int n = degree_key(k, w);
            int rows = c.rank(n + 1), cols = c.rank(n);
            if (!v.is_array() || int(v.size()) != rows)
                bad(w, "expected " + std::to_string(rows) + " rows");
            PolyMat m(rows, cols);
            for (int i = 0; i < rows; ++i) {
                std::string wi = w + "/" + std::to_string(i);
                if (!v[i].is_array() || int(v[i].size()) != cols)
                    bad(wi, "expected " + std::to_string(cols) + " entries");
                for (int l = 0; l < cols; ++l) m(i, l) = poly_from_json(v[i][l], wi + "/" + std::to_string(l));
            }
            if (rows > 0 && cols > 0) c.diff[n] = m;
        }
    }
    ValidationReport rep = validate(c);
    if (!rep.ok) bad("", rep.problems.front());
    return c;
}

FreeComplex complex_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return complex_from_json(j);
}

Json verdict_to_json(const FlavorVerdict& v) {
    Json j;
    j["flavor"] = v.flavor.name();
    j["outcome"] = outcome_name(v.outcome);
    j["window"] = v.window;
    j["radius"] = v.radius;
    Json piv = Json::array();
    for (const Pivot& p : v.pivots)
        piv.push_back({{"degree", p.degree},
                       {"row", p.row},
                       {"col", p.col},
                       {"leading", {{"x", p.leading.ex}, {"y", p.leading.ey}}},
                       {"entry", p.entry.str()}});
    j["pivots"] = piv;
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (!v.ranks.empty()) {
        Json r = Json::object();
        for (const auto& [n, k] : v.ranks) r[std::to_string(n)] = k;
        j["ranks"] = r;
    }
    return j;
}

Json report_to_json(const DominationReport& r) {
    Json j;
    j["overall"] = overall_name(r.overall);
    if (r.failing) j["failing"] = r.failing->name();
    j["window"] = r.window;
    Json fl = Json::array();
    for (const auto& v : r.flavors) fl.push_back(verdict_to_json(v));
    j["flavors"] = fl;
    return j;
}

Json homology_to_json(const std::map<int, HomologyGroup>& h) {
    Json j = Json::object();
    for (const auto& [n, g] : h) {
        Json t = Json::array();
        for (const auto& b : g.torsion) t.push_back(b.str());
        j[std::to_string(n)] = {{"betti", g.betti}, {"torsion", t}};
    }
    return j;
}

Json witness_to_json(const Witness& w) {
    Json j;
    Json k = Json::object();
    for (const auto& [t, v] : w.bprime.ext.k) k[std::to_string(t)] = v;
    j["k"] = k;
    Json ranks = Json::object();
    for (int n : w.bprime.complex.degrees()) ranks[std::to_string(n)] = w.bprime.complex.rank(n);
    j["ranks"] = ranks;
    j["homology"] = homology_to_json(w.homology);
    Json tr = Json::array();
    for (const auto& [name, ok] : w.transcript) tr.push_back({{"check", name}, {"ok", ok}});
    j["transcript"] = tr;
    j["passed"] = w.passed();
    return j;
}

}  // namespace nov
