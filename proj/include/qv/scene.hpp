#pragma once

#include "qv/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace qv {

// A scene file declares the constants a verification target consumes and the
// identities it must certify. Line-oriented format:
//
//   target <name>
//   vars <name:degree> ...
//   let <key> := <polynomial>
//   input <key> := <polynomial> cite "<source note>"
//   ideal <key> := <key> <key> ...
//   expect <kind> <key> := <payload> cite "<source note>"
//
// '#' starts a comment. Every `input` and `expect` carries a citation note.
struct Expectation {
    std::string kind;
    std::string key;
    std::string payload;
    std::string citation;
};

struct Scene {
    std::string target;
    std::string path;
    VarTablePtr vars;
    std::map<std::string, Poly> defs;
    std::map<std::string, std::string> def_kind; // "let" or "input"
    std::map<std::string, std::vector<std::string>> ideals;
    std::vector<Expectation> expects;

    const Poly& poly(const std::string& key) const;
    std::vector<Poly> ideal(const std::string& key) const;
    const Expectation& expectation(const std::string& kind, const std::string& key) const;
    std::vector<Expectation> of_kind(const std::string& kind) const;
    bool has(const std::string& key) const;
    // payload token: a defined key, else parsed as a polynomial literal
    Poly resolve(const std::string& token) const;
};

Scene load_scene(const std::string& file);

// scene directory: QV_SCENE_DIR env override, else <source>/scenes
std::string scene_dir();
void set_scene_dir(const std::string& dir);
Scene load_scene_by_name(const std::string& name);

} // namespace qv
