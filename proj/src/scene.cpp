#include "qv/scene.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qv {

namespace {

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        if (line[k] == '"') quoted = !quoted;
        if (line[k] == '#' && !quoted) return line.substr(0, k);
    }
    return line;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// splits "... := payload cite "note"" into payload and citation
void split_payload(const std::string& text, const std::string& where, std::string& payload,
                   std::string& citation) {
    std::size_t cpos = text.rfind(" cite ");
    if (cpos == std::string::npos) {
        payload = trim(text);
        citation.clear();
        return;
    }
    payload = trim(text.substr(0, cpos));
    std::string rest = trim(text.substr(cpos + 6));
    if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"')
        throw error("scene: malformed citation at " + where);
    citation = rest.substr(1, rest.size() - 2);
    if (citation.empty()) throw error("scene: empty citation at " + where);
}

const std::vector<std::string>& known_kinds() {
    static const std::vector<std::string> kinds = {
        "element-equal", "ideal-member", "ideal-equal",
        "hilbert-equal", "series-equal", "table-equal",
        "series-input", // cited series data consumed by a computation
    };
    return kinds;
}

std::string g_scene_dir;

} // namespace

const Poly& Scene::poly(const std::string& key) const {
    auto it = defs.find(key);
    if (it == defs.end()) throw error("scene " + target + ": no definition for '" + key + "'");
    return it->second;
}

std::vector<Poly> Scene::ideal(const std::string& key) const {
    auto it = ideals.find(key);
    if (it == ideals.end()) throw error("scene " + target + ": no ideal named '" + key + "'");
    std::vector<Poly> out;
    for (const std::string& k : it->second) out.push_back(poly(k));
    return out;
}

const Expectation& Scene::expectation(const std::string& kind, const std::string& key) const {
    for (const Expectation& e : expects)
        if (e.kind == kind && e.key == key) return e;
    throw error("scene " + target + ": no expectation " + kind + " '" + key + "'");
}

std::vector<Expectation> Scene::of_kind(const std::string& kind) const {
    std::vector<Expectation> out;
    for (const Expectation& e : expects)
        if (e.kind == kind) out.push_back(e);
    return out;
}

bool Scene::has(const std::string& key) const { return defs.count(key) != 0; }

Poly Scene::resolve(const std::string& token) const {
    auto it = defs.find(token);
    if (it != defs.end()) return it->second;
    if (!vars) throw error("scene " + target + ": no vars declared");
    return parse_poly(vars, token);
}

Scene load_scene(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw error("scene: cannot open " + file);
    Scene sc;
    sc.path = file;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = file + ":" + std::to_string(lineno);
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        std::istringstream is(body);
        std::string word;
        is >> word;
        if (word == "target") {
            is >> sc.target;
            if (sc.target.empty()) throw error("scene: missing target name at " + where);
        } else if (word == "vars") {
            std::string rest;
            std::getline(is, rest);
            sc.vars = make_vars(trim(rest));
        } else if (word == "let" || word == "input") {
            std::string key, assign;
            is >> key >> assign;
            if (assign != ":=") throw error("scene: expected ':=' at " + where);
            std::string rest;
            std::getline(is, rest);
            std::string payload, citation;
            split_payload(rest, where, payload, citation);
            if (word == "input" && citation.empty())
                throw error("scene: input without citation at " + where);
            if (!sc.vars) throw error("scene: definition before vars at " + where);
            if (sc.defs.count(key)) throw error("scene: duplicate key '" + key + "' at " + where);
            sc.defs.emplace(key, parse_poly(sc.vars, payload));
            sc.def_kind[key] = word;
        } else if (word == "ideal") {
            std::string key, assign;
            is >> key >> assign;
            if (assign != ":=") throw error("scene: expected ':=' at " + where);
            std::vector<std::string> names;
            std::string n;
            while (is >> n) names.push_back(n);
            if (names.empty()) throw error("scene: empty ideal at " + where);
            if (sc.ideals.count(key))
                throw error("scene: duplicate ideal '" + key + "' at " + where);
            for (const std::string& member : names)
                if (!sc.defs.count(member))
                    throw error("scene: ideal '" + key + "' references unknown key '" +
                                member + "' at " + where);
            sc.ideals[key] = names;
        } else if (word == "expect") {
            Expectation e;
            std::string assign;
            is >> e.kind >> e.key >> assign;
            if (assign != ":=") throw error("scene: expected ':=' at " + where);
            if (std::find(known_kinds().begin(), known_kinds().end(), e.kind) ==
                known_kinds().end())
                throw error("scene: unknown check kind '" + e.kind + "' at " + where);
            std::string rest;
            std::getline(is, rest);
            split_payload(rest, where, e.payload, e.citation);
            if (e.citation.empty()) throw error("scene: expectation without citation at " + where);
            sc.expects.push_back(std::move(e));
        } else {
            throw error("scene: unknown statement '" + word + "' at " + where);
        }
    }
    if (sc.target.empty()) throw error("scene: no target declared in " + file);
    return sc;
}

std::string scene_dir() {
    if (!g_scene_dir.empty()) return g_scene_dir;
    const char* env = std::getenv("QV_SCENE_DIR");
    if (env && *env) return env;
    return std::string(QV_SOURCE_DIR) + "/scenes";
}

void set_scene_dir(const std::string& dir) { g_scene_dir = dir; }

Scene load_scene_by_name(const std::string& name) {
    return load_scene(scene_dir() + "/" + name + ".scene");
}

} // namespace qv
