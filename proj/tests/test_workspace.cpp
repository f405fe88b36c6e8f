#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcat/builtin.hpp"
#include "matcat/workspace.hpp"

using namespace matcat;

namespace {

const char* kA2 = R"({
  "field": {"kind": "Q"},
  "quiver": {"vertices": ["1", "2"], "arrows": [{"name": "a", "source": "1", "target": "2"}]},
  "relations": [],
  "modules": {"M": {"dims": {"1": 1, "2": 1}, "maps": {"a": [["3/2"]]}}},
  "morphisms": {"f": {"source": "S:2", "target": "M", "components": {"2": [["2"]]}}},
  "subcategories": {"Y": ["M", "P:1"]}
})";

std::string error_of(const std::string& text)
{
    try {
        parse_workspace(parse_json_text(text, "ws"), "ws", std::nullopt);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("workspace parse and round trip")
{
    Workspace w = parse_workspace(parse_json_text(kA2, "ws"), "ws", std::nullopt);
    CHECK(w.alg->num_vertices() == 2);
    Module M = w.module("M");
    CHECK(M.maps[0](0, 0) == Scalar(3, 2));
    CHECK(w.generators("Y").size() == 2);
    CHECK(modules_equal(w.module("P:1"), projective(w.alg, 0)));
    CHECK(morphisms_equal(w.morphism("f"), morphism_from_json(w.module("S:2"), M, morphism_to_json(w.morphism("f")), "")));

    json out = workspace_to_json(w);
    Workspace w2 = parse_workspace(parse_json_text(out.dump(), "again"), "again", std::nullopt);
    CHECK(workspace_to_json(w2) == out);
    CHECK(out.dump() == workspace_to_json(w2).dump());
    CHECK(modules_equal(w2.module("M"), M));
}

TEST_CASE("field override and finite fields")
{
    Workspace w = parse_workspace(parse_json_text(kA2, "ws"), "ws", parse_field_spec("Fp:5"));
    CHECK(field_to_json(w.alg->field()) == json{{"kind", "Fp"}, {"p", 5}});
    CHECK(w.module("M").maps[0](0, 0) == w.alg->field().parse("4"));
    CHECK(matrix_to_json(w.module("M").maps[0]) == json::parse(R"([["4"]])"));
    CHECK_THROWS_AS(parse_field_spec("Fp:6"), InputError);
}

TEST_CASE("input errors")
{
    std::string e = error_of("{\n  \"quiver\": {\n    \"vertices\": [1,\n");
    CHECK(e.find("line 4, column 1") != std::string::npos);
    CHECK(error_of(R"({"quiver": {"vertices": ["1"], "arrows": [{"name": "a", "source": "1", "target": "9"}]}})")
              .find("unknown vertex '9'") != std::string::npos);
    CHECK(error_of(R"({"quiver": {"vertices": ["1"], "arrows": []}, "subcategories": {"Y": ["Q7"]}})")
              .find("unknown module 'Q7'") != std::string::npos);
    CHECK(error_of(R"({"quiver": {"vertices": ["1","2"], "arrows": [{"name": "a", "source": "1", "target": "2"}]},
                      "modules": {"M": {"dims": {"1": 1, "2": 1}, "maps": {"a": [["1", "2"]]}}}})")
              .find("arrow a") != std::string::npos);
    CHECK(error_of(R"({"quiver": {"vertices": ["1","2"], "arrows": [{"name": "a", "source": "1", "target": "2"}]},
                      "relations": [[{"coeff": "1", "path": ["b"]}]]})")
              .find("unknown arrow 'b'") != std::string::npos);
    // a morphism that does not commute with the arrow
    CHECK(!error_of(R"({"quiver": {"vertices": ["1","2"], "arrows": [{"name": "a", "source": "1", "target": "2"}]},
                       "morphisms": {"f": {"source": "P:1", "target": "P:1", "components": {"1": [["1"]]}}}})")
               .empty());
}

TEST_CASE("builtin workspaces")
{
    Workspace w = load_workspace("builtin:delta5");
    CHECK(w.alg->num_vertices() == 6);
    CHECK(w.generators("projectives").size() == 6);
    CHECK_THROWS_AS(load_workspace("builtin:B7"), InputError);
    Workspace a = load_workspace("builtin:A2");
    CHECK(algebra_to_json(*algebra_from_json(algebra_to_json(*a.alg))) == algebra_to_json(*a.alg));
}

TEST_CASE("the doubled algebra re-parses")
{
    for (auto* name : {"builtin:A2", "builtin:A3", "builtin:delta5"}) {
        Workspace w = load_workspace(name);
        json out = algebra_to_json(*doubled_maps_algebra(w.alg).alg);
        CHECK(out.contains("allow_short_terms"));
        AlgebraPtr L = algebra_from_json(json::parse(out.dump()));
        CHECK(algebra_to_json(*L) == out);
        CHECK(L->total_dim() == doubled_maps_algebra(w.alg).alg->total_dim());
    }
    json a2 = algebra_to_json(*doubled_maps_algebra(linear_quiver(2)).alg);
    CHECK(a2["quiver"]["vertices"].size() == 4);
    CHECK(a2["quiver"]["arrows"].size() == 5);
    CHECK(a2["relations"].size() == 2);
    a2.erase("allow_short_terms");
    CHECK_THROWS_AS(algebra_from_json(a2), InputError);
}
