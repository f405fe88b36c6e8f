#pragma once

#include "matcat/approximation.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace matcat {

using json = nlohmann::ordered_json;

// quiver, relations, named modules / morphisms / bimodules / generator lists
struct Workspace {
    std::string source;
    AlgebraPtr alg;
    std::map<std::string, Module> modules;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, Bimodule> bimodules;
    std::map<std::string, std::vector<std::string>> subcategories;

    // a named module, or P:x / I:x / S:x for the representable, injective or simple at vertex x
    Module module(const std::string& name) const;
    Morphism morphism(const std::string& name) const;
    Bimodule bimodule(const std::string& name) const;
    // a named generator list, or a comma separated list of module names
    std::vector<Module> generators(const std::string& spec) const;
    int vertex(const std::string& label) const;
};

Field parse_field_spec(const std::string& s);
json field_to_json(const Field& F);
Field field_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& F, std::size_t rows, std::size_t cols, const json& j, const std::string& where);

json algebra_to_json(const PathAlgebra& A);
AlgebraPtr algebra_from_json(const json& j, const std::optional<Field>& field_override = std::nullopt);

json module_to_json(const Module& X);
Module module_from_json(const AlgebraPtr& A, const json& j, const std::string& where);
json morphism_to_json(const Morphism& f);
Morphism morphism_from_json(const Module& src, const Module& tgt, const json& comps, const std::string& where);

// parse errors become InputError carrying "line L, column C"
json parse_json_text(const std::string& text, const std::string& source);
Workspace parse_workspace(const json& j, const std::string& source, const std::optional<Field>& field_override);
// builtin:A2, builtin:A3, builtin:delta5, or a file path
Workspace load_workspace(const std::string& where, const std::optional<Field>& field_override = std::nullopt);
json workspace_to_json(const Workspace& w);

}  // namespace matcat
