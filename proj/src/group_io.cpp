#include "permod/group_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace permod {

using nlohmann::json;

namespace {

std::string strip(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

} // namespace

Perm parse_group_word(const PermutationAction& action, const std::string& word) {
    const std::string w = strip(word);
    if (w.empty()) throw Error("empty group word");
    Perm result = identity_perm(action.size());
    // Left-to-right composition: in "a*b" the right factor b acts first,
    // matching the global product convention.
    std::vector<std::string> tokens;
    std::stringstream ss(w);
    std::string tok;
    while (std::getline(ss, tok, '*')) tokens.push_back(strip(tok));
    for (const std::string& t : tokens) {
        if (t.empty()) throw Error("empty factor in group word '" + word + "'");
        if (t == "1") continue;
        std::string name = t;
        long long power = 1;
        const auto caret = t.find('^');
        if (caret != std::string::npos) {
            name = strip(t.substr(0, caret));
            try {
                power = std::stoll(strip(t.substr(caret + 1)));
            } catch (const std::exception&) {
                throw Error("bad exponent in group word factor '" + t + "'");
            }
        }
        const Perm* gen = action.find_generator(name);
        if (!gen) throw Error("unknown generator '" + name + "' in group word");
        result = compose(result, perm_power(*gen, power));
    }
    return result;
}

Perm GroupFile::resolve(const std::string& name_or_word) const {
    for (const auto& [name, word] : elements)
        if (name == name_or_word) return parse_group_word(action, word);
    return parse_group_word(action, name_or_word);
}

GroupFile load_group(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("group parse error: ") + e.what());
    }
    if (!doc.is_object()) throw Error("group document must be a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        if (key != "x" && key != "generators" && key != "elements")
            throw Error("unknown key '" + key + "' in group document");
    }
    if (!doc.contains("x") || !doc.contains("generators"))
        throw Error("group document needs keys 'x' and 'generators'");

    GroupFile gf;
    for (const json& l : doc.at("x")) gf.action.x_labels.push_back(l.get<std::string>());
    for (auto it = doc.at("generators").begin(); it != doc.at("generators").end(); ++it) {
        Perm p;
        for (const json& v : it.value()) p.push_back(v.get<int>());
        gf.action.generators.emplace_back(it.key(), std::move(p));
    }
    gf.action.validate();
    if (doc.contains("elements"))
        for (auto it = doc.at("elements").begin(); it != doc.at("elements").end(); ++it)
            gf.elements.emplace_back(it.key(), it.value().get<std::string>());
    // Fail early on malformed element words.
    for (const auto& [name, word] : gf.elements) parse_group_word(gf.action, word);
    return gf;
}

GroupFile load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_group(ss.str());
}

} // namespace permod
