#include "colorfan/json_io.hpp"

#include <json.hpp>

#include <fstream>

namespace colorfan {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        auto q = parse_rational(j.get<std::string>());
        if (!q) throw input_error("bad rational '" + j.get<std::string>() + "'");
        return *q;
    }
    throw input_error("rational must be an integer or a \"p/q\" string");
}

Json rational_to_json(const Rational& q) { return to_string(q); }

GroundSet ground_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("blocks"))
        throw input_error("ground set JSON needs a \"blocks\" array");
    std::vector<std::vector<std::string>> blocks;
    for (const auto& blk : j.at("blocks")) {
        std::vector<std::string> labels;
        for (const auto& lab : blk) labels.push_back(lab.get<std::string>());
        blocks.push_back(std::move(labels));
    }
    return GroundSet(std::move(blocks));
}

Json ground_to_json(const GroundSet& g) { return Json{{"blocks", g.blocks()}}; }

int set_from_json(const Poset& poset, const Json& j) {
    if (!j.is_array()) throw input_error("colored set must be a label array");
    std::vector<std::string> labels;
    for (const auto& lab : j) labels.push_back(lab.get<std::string>());
    return poset.id_of_labels(labels);
}

Json set_to_json(const Poset& poset, int id) { return poset.labels_of(id); }

Chain chain_from_json(const Poset& poset, const Json& j) {
    if (!j.is_array()) throw input_error("chain must be an array of colored sets");
    Chain chain;
    for (const auto& set : j) chain.push_back(set_from_json(poset, set));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i] == chain[i + 1] || !poset.subset(chain[i], chain[i + 1]))
            throw input_error("chain is not strictly increasing");
    return chain;
}

Json chain_to_json(const Poset& poset, const Chain& chain) {
    Json out = Json::array();
    for (int id : chain) out.push_back(set_to_json(poset, id));
    return out;
}

RankFunction rank_from_json(PosetPtr poset, const Json& j) {
    if (!j.is_object() || !j.contains("ranks"))
        throw input_error("rank function JSON needs a \"ranks\" array");
    std::map<int, Rational> values;
    for (const auto& entry : j.at("ranks")) {
        int id = set_from_json(*poset, entry.at("set"));
        values[id] = rational_from_json(entry.at("rank"));
    }
    if (values.count(poset->empty_id()) && values[poset->empty_id()] != 0)
        throw input_error("rk(empty) must be 0");
    values.erase(poset->empty_id());
    // every nonempty set needs a value to make the function total; missing
    // entries default to 0, which keeps candidates representable
    return make_rank(std::move(poset), values);
}

Json rank_to_json(const RankFunction& rk) {
    Json ranks = Json::array();
    for (int id = 1; id < rk.poset->set_count(); ++id)
        ranks.push_back(Json{{"set", set_to_json(*rk.poset, id)},
                             {"rank", rational_to_json(rk.values[id])}});
    return Json{{"ranks", std::move(ranks)}};
}

Divisor divisor_from_json(PosetPtr poset, const Json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("coefficients"))
        throw input_error("divisor JSON needs \"basis\" and \"coefficients\"");
    Basis basis = basis_from_name(j.at("basis").get<std::string>());
    std::map<int, Rational> coeffs;
    for (const auto& entry : j.at("coefficients")) {
        int id = set_from_json(*poset, entry.at("set"));
        coeffs[id] = rational_from_json(entry.at("value"));
    }
    return make_divisor(std::move(poset), basis, std::move(coeffs));
}

Json divisor_to_json(const Divisor& d) {
    Json coeffs = Json::array();
    for (const auto& [id, c] : d.coeffs)
        coeffs.push_back(Json{{"set", set_to_json(*d.poset, id)},
                              {"value", rational_to_json(c)}});
    return Json{{"basis", basis_name(d.basis)}, {"coefficients", std::move(coeffs)}};
}

Json polytope_to_json(const ExactPolytope& p) {
    Json out;
    out["dim"] = p.dim;
    Json rows = Json::array();
    for (int i = 0; i < p.A.rows(); ++i) {
        Json row;
        Json a = Json::array();
        for (int j = 0; j < p.dim; ++j) a.push_back(rational_to_json(p.A(i, j)));
        row["a"] = std::move(a);
        row["b"] = rational_to_json(p.b(i));
        rows.push_back(std::move(row));
    }
    out["hrep"] = std::move(rows);
    if (p.verts) {
        Json verts = Json::array();
        for (const auto& v : *p.verts) {
            Json pt = Json::array();
            for (int i = 0; i < p.dim; ++i) pt.push_back(rational_to_json(v(i)));
            verts.push_back(std::move(pt));
        }
        out["vrep"] = std::move(verts);
    }
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace colorfan
