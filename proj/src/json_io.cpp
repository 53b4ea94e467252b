#include "maghom/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace maghom {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.num_vertices();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need {\"n\", \"edges\"}");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edges must be [u, v] pairs");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(j.at("n").get<int>(), std::move(edges));
}

json complex_to_json(const SimplicialComplex& k) {
    json j;
    j["facets"] = json::array();
    for (const auto& f : k.facets()) j["facets"].push_back(f);
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw std::invalid_argument("complex json: need {\"facets\"}");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex::from_facets(std::move(facets));
}

namespace {
json int_to_json(const Int& v) {
    // invariant factors fit in 64 bits at desk scale; fall back to a decimal
    // string beyond that
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}
} // namespace

json table_to_json(const BigradedTable& t) {
    json j;
    switch (t.mode) {
    case CoeffMode::Z: j["mode"] = "Z"; break;
    case CoeffMode::Q: j["mode"] = "Q"; break;
    case CoeffMode::Fp:
        j["mode"] = "Fp";
        j["p"] = t.p;
        break;
    }
    j["cells"] = json::array();
    for (const auto& c : t.cells) {
        json cell;
        cell["k"] = c.k;
        cell["l"] = c.l;
        if (c.skipped) {
            cell["skipped"] = true;
        } else {
            cell["rank"] = c.group.free_rank;
            cell["torsion"] = json::array();
            for (const Int& d : c.group.torsion) cell["torsion"].push_back(int_to_json(d));
        }
        j["cells"].push_back(std::move(cell));
    }
    return j;
}

BigradedTable table_from_json(const json& j) {
    BigradedTable t;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "Z")
        t.mode = CoeffMode::Z;
    else if (mode == "Q")
        t.mode = CoeffMode::Q;
    else if (mode == "Fp") {
        t.mode = CoeffMode::Fp;
        t.p = j.at("p").get<std::uint64_t>();
    } else
        throw std::invalid_argument("table json: unknown mode");
    for (const auto& cj : j.at("cells")) {
        CellEntry c;
        c.k = cj.at("k").get<int>();
        c.l = cj.at("l").get<int>();
        if (cj.contains("skipped") && cj.at("skipped").get<bool>()) {
            c.skipped = true;
        } else {
            c.group.free_rank = cj.at("rank").get<long long>();
            for (const auto& d : cj.at("torsion"))
                c.group.torsion.push_back(d.is_string() ? Int(d.get<std::string>()) : Int(d.get<std::int64_t>()));
        }
        t.kmax = std::max(t.kmax, c.k);
        t.lmax = std::max(t.lmax, c.l);
        t.cells.push_back(std::move(c));
    }
    std::sort(t.cells.begin(), t.cells.end(),
              [](const CellEntry& a, const CellEntry& b) { return std::pair{a.l, a.k} < std::pair{b.l, b.k}; });
    return t;
}

json series_to_json(const TruncatedSeries& s) {
    // coefficients as decimal strings: path counts outgrow doubles quickly
    json arr = json::array();
    for (int i = 0; i <= s.truncation(); ++i) arr.push_back(s[i].str());
    return arr;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << text;
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("JSON parse error in " + path + ": " + e.what());
    }
}

} // namespace maghom
