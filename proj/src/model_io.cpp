#include "permod/model_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace permod {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw Error("unknown key '" + it.key() + "' in " + where);
}

cxd parse_complex(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw Error("expected {re, im} object in " + where);
    reject_unknown_keys(obj, {"re", "im"}, where);
    if (!obj.contains("re") || !obj.contains("im"))
        throw Error("expected both re and im in " + where);
    return {obj.at("re").get<double>(), obj.at("im").get<double>()};
}

Eigen::MatrixXcd parse_matrix(const json& rows, int n, const std::string& where) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw Error(where + " must have one row per label");
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error(where + " row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) m(i, j) = parse_complex(row.at(j), where);
    }
    return m;
}

ordered_json dump_complex(cxd z) {
    ordered_json o;
    o["re"] = z.real();
    o["im"] = z.imag();
    return o;
}

} // namespace

AnyonModel load_model(const std::string& text, bool verify, double tol) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("model parse error: ") + e.what());
    }
    if (!doc.is_object()) throw Error("model document must be a JSON object");
    reject_unknown_keys(doc, {"labels", "unit", "dual", "fusion", "F", "R", "twist", "qdim",
                              "S", "T"}, "model document");
    for (const char* key : {"labels", "unit", "dual", "fusion", "F", "R", "twist", "qdim",
                            "S", "T"})
        if (!doc.contains(key)) throw Error(std::string("model document missing key '") + key + "'");

    AnyonModel m;
    for (const json& l : doc.at("labels")) m.labels.push_back(l.get<std::string>());
    if (m.labels.empty()) throw Error("model has no labels");
    {
        std::set<std::string> names(m.labels.begin(), m.labels.end());
        if (names.size() != m.labels.size()) throw Error("duplicate label names");
    }
    m.unit = m.label_index(doc.at("unit").get<std::string>());

    m.dual.assign(m.labels.size(), -1);
    for (auto it = doc.at("dual").begin(); it != doc.at("dual").end(); ++it)
        m.dual[m.label_index(it.key())] = m.label_index(it.value().get<std::string>());
    for (std::size_t a = 0; a < m.labels.size(); ++a)
        if (m.dual[a] < 0) throw Error("dual map missing label " + m.labels[a]);

    for (const json& triple : doc.at("fusion")) {
        if (!triple.is_array() || triple.size() != 3)
            throw Error("fusion entries must be [a,b,c] triples");
        const int a = m.label_index(triple.at(0).get<std::string>());
        const int b = m.label_index(triple.at(1).get<std::string>());
        const int c = m.label_index(triple.at(2).get<std::string>());
        auto [it, inserted] = m.fusion.emplace(std::array<int, 3>{a, b, c}, 1);
        if (!inserted)
            throw Error("multiplicity error: fusion triple (" + m.labels[a] + "," +
                        m.labels[b] + "," + m.labels[c] + ") listed twice (N must be <= 1)");
    }

    for (const json& entry : doc.at("F")) {
        reject_unknown_keys(entry, {"a", "b", "c", "d", "e", "f", "re", "im"}, "F entry");
        std::array<int, 6> key{};
        const char* names[6] = {"a", "b", "c", "d", "e", "f"};
        for (int i = 0; i < 6; ++i) key[i] = m.label_index(entry.at(names[i]).get<std::string>());
        const cxd val(entry.at("re").get<double>(), entry.at("im").get<double>());
        if (!m.f_symbols.emplace(key, val).second) throw Error("F-symbol listed twice");
    }
    for (const json& entry : doc.at("R")) {
        reject_unknown_keys(entry, {"a", "b", "c", "re", "im"}, "R entry");
        std::array<int, 3> key{};
        const char* names[3] = {"a", "b", "c"};
        for (int i = 0; i < 3; ++i) key[i] = m.label_index(entry.at(names[i]).get<std::string>());
        const cxd val(entry.at("re").get<double>(), entry.at("im").get<double>());
        if (!m.r_symbols.emplace(key, val).second) throw Error("R-symbol listed twice");
    }

    m.twists.assign(m.labels.size(), cxd(0.0));
    for (auto it = doc.at("twist").begin(); it != doc.at("twist").end(); ++it)
        m.twists[m.label_index(it.key())] = parse_complex(it.value(), "twist");
    m.qdims.assign(m.labels.size(), 0.0);
    for (auto it = doc.at("qdim").begin(); it != doc.at("qdim").end(); ++it)
        m.qdims[m.label_index(it.key())] = it.value().get<double>();

    const int n = m.n_labels();
    m.s_matrix = parse_matrix(doc.at("S"), n, "S");
    m.t_matrix = parse_matrix(doc.at("T"), n, "T");

    m.finalize(verify, tol);
    return m;
}

AnyonModel load_model_file(const std::string& path, bool verify, double tol) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_model(ss.str(), verify, tol);
}

std::string model_to_json(const AnyonModel& model) {
    ordered_json doc;
    doc["labels"] = model.labels;
    doc["unit"] = model.labels[model.unit];
    ordered_json dual;
    for (int a = 0; a < model.n_labels(); ++a)
        dual[model.labels[a]] = model.labels[model.dual[a]];
    doc["dual"] = dual;
    ordered_json fusion = ordered_json::array();
    for (const auto& [key, mult] : model.fusion) {
        if (!mult) continue;
        fusion.push_back({model.labels[key[0]], model.labels[key[1]], model.labels[key[2]]});
    }
    doc["fusion"] = fusion;
    ordered_json fs = ordered_json::array();
    for (const auto& [key, val] : model.f_symbols) {
        ordered_json e;
        const char* names[6] = {"a", "b", "c", "d", "e", "f"};
        for (int i = 0; i < 6; ++i) e[names[i]] = model.labels[key[i]];
        e["re"] = val.real();
        e["im"] = val.imag();
        fs.push_back(e);
    }
    doc["F"] = fs;
    ordered_json rs = ordered_json::array();
    for (const auto& [key, val] : model.r_symbols) {
        ordered_json e;
        const char* names[3] = {"a", "b", "c"};
        for (int i = 0; i < 3; ++i) e[names[i]] = model.labels[key[i]];
        e["re"] = val.real();
        e["im"] = val.imag();
        rs.push_back(e);
    }
    doc["R"] = rs;
    ordered_json twist;
    for (int a = 0; a < model.n_labels(); ++a)
        twist[model.labels[a]] = dump_complex(model.twists[a]);
    doc["twist"] = twist;
    ordered_json qdim;
    for (int a = 0; a < model.n_labels(); ++a) qdim[model.labels[a]] = model.qdims[a];
    doc["qdim"] = qdim;
    auto dump_matrix = [&](const Eigen::MatrixXcd& m) {
        ordered_json rows = ordered_json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(dump_complex(m(i, j)));
            rows.push_back(row);
        }
        return rows;
    };
    doc["S"] = dump_matrix(model.s_matrix);
    doc["T"] = dump_matrix(model.t_matrix);
    return doc.dump(2) + "\n";
}

AnyonModel resolve_model(const std::string& ref, bool verify) {
    // built-ins are verified at construction regardless
    if (is_builtin_name(ref)) return builtin_model(ref);
    return load_model_file(ref, verify);
}

} // namespace permod
