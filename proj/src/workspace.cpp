#include "matcat/workspace.hpp"

#include "matcat/builtin.hpp"

#include <fstream>
#include <sstream>

namespace matcat {

namespace {

std::string scalar_string(const json& v, const std::string& where)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw InputError(where + ": matrix entries must be strings or integers");
}

int label_index(const PathAlgebra& A, const std::string& lab, const std::string& where)
{
    for (int x = 0; x < A.num_vertices(); ++x)
        if (A.label(x) == lab)
            return x;
    throw InputError(where + ": unknown vertex '" + lab + "'");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

Field parse_field_spec(const std::string& s)
{
    if (s == "Q" || s == "q")
        return Field::rationals();
    std::string digits = s;
    for (const char* pre : {"Fp:", "F_", "F", "GF"})
        if (digits.rfind(pre, 0) == 0) {
            digits = digits.substr(std::string(pre).size());
            break;
        }
    try {
        std::size_t pos = 0;
        long p = std::stol(digits, &pos);
        if (pos != digits.size())
            throw InputError("bad field '" + s + "'");
        return Field::prime(p);
    } catch (const std::logic_error&) {
        throw InputError("bad field '" + s + "' (expected Q or Fp:<prime>)");
    }
}

json field_to_json(const Field& F)
{
    if (F.is_rational())
        return json{{"kind", "Q"}};
    return json{{"kind", "Fp"}, {"p", F.characteristic()}};
}

Field field_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind"))
        throw InputError("field: expected {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": <prime>}");
    std::string k = j.at("kind").get<std::string>();
    if (k == "Q")
        return Field::rationals();
    if (k == "Fp") {
        if (!j.contains("p") || !j.at("p").is_number_integer())
            throw InputError("field: Fp needs an integer p");
        return Field::prime(j.at("p").get<long>());
    }
    throw InputError("field: unknown kind '" + k + "'");
}

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(m.field().format(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

Matrix matrix_from_json(const Field& F, std::size_t rows, std::size_t cols, const json& j, const std::string& where)
{
    Matrix m(F, rows, cols);
    if (!j.is_array())
        throw InputError(where + ": matrix must be an array of rows");
    if (rows * cols == 0 && j.empty())
        return m;
    if (j.size() != rows)
        throw DimensionError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    for (std::size_t i = 0; i < rows; ++i) {
        const json& r = j[i];
        if (!r.is_array() || r.size() != cols)
            throw DimensionError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) +
                                 " entries");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = F.parse(scalar_string(r[c], where));
    }
    return m;
}

json algebra_to_json(const PathAlgebra& A)
{
    json q;
    q["vertices"] = A.labels();
    json arrows = json::array();
    for (auto& a : A.arrows())
        arrows.push_back({{"name", a.name}, {"source", A.label(a.source)}, {"target", A.label(a.target)}});
    q["arrows"] = arrows;
    json rels = json::array();
    for (auto& r : A.relations()) {
        json terms = json::array();
        for (auto& t : r) {
            json path = json::array();
            for (int a : t.path)
                path.push_back(A.arrows()[a].name);
            terms.push_back({{"coeff", A.field().format(t.coeff)}, {"path", path}});
        }
        rels.push_back(terms);
    }
    json out;
    out["field"] = field_to_json(A.field());
    out["quiver"] = q;
    out["relations"] = rels;
    out["bound"] = A.bound();
    for (auto& r : A.relations())
        for (auto& t : r)
            if (t.path.size() < 2)
                out["allow_short_terms"] = true;
    return out;
}

AlgebraPtr algebra_from_json(const json& j, const std::optional<Field>& field_override)
{
    Field F = field_override ? *field_override : (j.contains("field") ? field_from_json(j.at("field")) : Field());
    if (!j.contains("quiver"))
        throw InputError("workspace: missing \"quiver\"");
    const json& jq = j.at("quiver");
    Quiver q;
    for (auto& v : jq.at("vertices"))
        q.vertices.push_back(v.get<std::string>());
    auto vidx = [&](const std::string& lab) {
        for (std::size_t i = 0; i < q.vertices.size(); ++i)
            if (q.vertices[i] == lab)
                return static_cast<int>(i);
        throw InputError("quiver: unknown vertex '" + lab + "'");
    };
    if (jq.contains("arrows"))
        for (auto& a : jq.at("arrows"))
            q.arrows.push_back({a.at("name").get<std::string>(), vidx(a.at("source").get<std::string>()),
                                vidx(a.at("target").get<std::string>())});
    auto aidx = [&](const std::string& name) {
        for (std::size_t i = 0; i < q.arrows.size(); ++i)
            if (q.arrows[i].name == name)
                return static_cast<int>(i);
        throw InputError("relations: unknown arrow '" + name + "'");
    };
    std::vector<Relation> rels;
    if (j.contains("relations"))
        for (auto& r : j.at("relations")) {
            Relation rel;
            for (auto& t : r) {
                PathTerm pt;
                pt.coeff = F.parse(t.contains("coeff") ? scalar_string(t.at("coeff"), "relation") : "1");
                for (auto& a : t.at("path"))
                    pt.path.push_back(aidx(a.get<std::string>()));
                rel.push_back(pt);
            }
            rels.push_back(rel);
        }
    int bound = j.contains("bound") ? j.at("bound").get<int>() : static_cast<int>(q.vertices.size()) + 1;
    BuildOptions bo;
    bo.allow_short_terms = j.contains("allow_short_terms") && j.at("allow_short_terms").get<bool>();
    return build_path_algebra(q, rels, bound, F, bo);
}

json module_to_json(const Module& X)
{
    const PathAlgebra& A = *X.alg;
    json dims = json::object();
    for (int x = 0; x < A.num_vertices(); ++x)
        dims[A.label(x)] = X.dim(x);
    json maps = json::object();
    for (std::size_t a = 0; a < A.arrows().size(); ++a)
        maps[A.arrows()[a].name] = matrix_to_json(X.maps[a]);
    return json{{"dims", dims}, {"maps", maps}};
}

Module module_from_json(const AlgebraPtr& A, const json& j, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": module must be an object");
    for (const char* kind : {"projective", "injective", "simple"})
        if (j.contains(kind)) {
            int x = label_index(*A, j.at(kind).get<std::string>(), where);
            std::string k = kind;
            return k == "projective" ? projective(A, x) : k == "injective" ? injective(A, x) : simple(A, x);
        }
    if (!j.contains("dims"))
        throw InputError(where + ": module needs \"dims\"");
    std::vector<std::size_t> dims(A->num_vertices(), 0);
    const json& jd = j.at("dims");
    if (jd.is_array()) {
        if (jd.size() != dims.size())
            throw DimensionError(where + ": dims array has the wrong length");
        for (std::size_t i = 0; i < dims.size(); ++i)
            dims[i] = jd[i].get<std::size_t>();
    } else {
        for (auto it = jd.begin(); it != jd.end(); ++it)
            dims[label_index(*A, it.key(), where)] = it.value().get<std::size_t>();
    }
    std::vector<Matrix> maps;
    const json empty = json::object();
    const json& jm = j.contains("maps") ? j.at("maps") : empty;
    for (auto it = jm.begin(); it != jm.end(); ++it)
        if (A->arrow_index(it.key()) < 0)
            throw InputError(where + ": unknown arrow '" + it.key() + "'");
    for (auto& a : A->arrows()) {
        std::size_t r = dims[a.target], c = dims[a.source];
        if (jm.contains(a.name))
            maps.push_back(matrix_from_json(A->field(), r, c, jm.at(a.name), where + ", arrow " + a.name));
        else
            maps.push_back(Matrix(A->field(), r, c));
    }
    Module X(A, dims, maps);
    if (auto e = check_module(X); !e.empty())
        throw InputError(where + ": " + e);
    return X;
}

json morphism_to_json(const Morphism& f)
{
    const PathAlgebra& A = *f.src.alg;
    json comps = json::object();
    for (int x = 0; x < A.num_vertices(); ++x)
        comps[A.label(x)] = matrix_to_json(f.at(x));
    return comps;
}

Morphism morphism_from_json(const Module& src, const Module& tgt, const json& comps, const std::string& where)
{
    const AlgebraPtr& A = src.alg;
    Morphism f = zero_morphism(src, tgt);
    if (!comps.is_object())
        throw InputError(where + ": components must be an object keyed by vertex");
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        int x = label_index(*A, it.key(), where);
        f.comp[x] = matrix_from_json(A->field(), tgt.dim(x), src.dim(x), it.value(), where + ", vertex " + it.key());
    }
    if (auto e = check_morphism(f); !e.empty())
        throw InputError(where + ": " + e);
    return f;
}

json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        std::size_t upto = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto p = msg.find("syntax error");
        throw InputError(source + ": malformed JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + (p == std::string::npos ? "" : ": " + msg.substr(p)));
    }
}

namespace {

Bimodule bimodule_from_json(const AlgebraPtr& A, const json& j, const std::string& where)
{
    std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "explicit";
    if (kind == "hom")
        return hom_bimodule(A);
    if (kind == "zero")
        return zero_bimodule(A, A);
    if (kind != "explicit")
        throw InputError(where + ": unknown bimodule kind '" + kind + "'");
    const int n = A->num_vertices();
    const Field& F = A->field();
    Bimodule M(A, A);
    if (j.contains("dims"))
        for (auto it = j.at("dims").begin(); it != j.at("dims").end(); ++it) {
            auto parts = split(it.key(), '|');
            if (parts.size() != 2)
                throw InputError(where + ": dims keys are \"u|t\"");
            M.set_dim(label_index(*A, parts[0], where), label_index(*A, parts[1], where),
                      it.value().get<std::size_t>());
        }
    auto table = [&](const std::string& section, const std::string& key, std::size_t count, std::size_t r,
                     std::size_t c) {
        std::vector<Matrix> out(count, Matrix(F, r, c));
        if (j.contains(section) && j.at(section).contains(key)) {
            const json& arr = j.at(section).at(key);
            if (!arr.is_array() || arr.size() != count)
                throw DimensionError(where + ": " + section + " \"" + key + "\" needs " + std::to_string(count) +
                                     " matrices");
            for (std::size_t k = 0; k < count; ++k)
                out[k] = matrix_from_json(F, r, c, arr[k], where + ", " + section + " " + key);
        }
        return out;
    };
    for (int u = 0; u < n; ++u)
        for (int u2 = 0; u2 < n; ++u2)
            for (int t = 0; t < n; ++t)
                M.set_left(u, u2, t,
                           table("left", A->label(u) + "|" + A->label(u2) + "|" + A->label(t), A->dim(u, u2),
                                 M.dim(u2, t), M.dim(u, t)));
    for (int u = 0; u < n; ++u)
        for (int t = 0; t < n; ++t)
            for (int t2 = 0; t2 < n; ++t2)
                M.set_right(u, t, t2,
                            table("right", A->label(u) + "|" + A->label(t) + "|" + A->label(t2), A->dim(t2, t),
                                  M.dim(u, t2), M.dim(u, t)));
    if (auto e = M.check_axioms(); !e.empty())
        throw InputError(where + ": " + e);
    return M;
}

void add_standard_modules(Workspace& w)
{
    const AlgebraPtr& A = w.alg;
    std::vector<std::string> ps, is, ss;
    for (int x = 0; x < A->num_vertices(); ++x) {
        const std::string& l = A->label(x);
        w.modules["P" + l] = projective(A, x);
        w.modules["I" + l] = injective(A, x);
        w.modules["S" + l] = simple(A, x);
        ps.push_back("P" + l);
        is.push_back("I" + l);
        ss.push_back("S" + l);
    }
    w.subcategories["projectives"] = ps;
    w.subcategories["injectives"] = is;
    w.subcategories["simples"] = ss;
}

}  // namespace

Workspace parse_workspace(const json& j, const std::string& source, const std::optional<Field>& field_override)
{
    try {
        if (!j.is_object())
            throw InputError("workspace must be a JSON object");
        Workspace w;
        w.source = source;
        w.alg = algebra_from_json(j, field_override);
        if (j.contains("modules"))
            for (auto it = j.at("modules").begin(); it != j.at("modules").end(); ++it)
                w.modules[it.key()] = module_from_json(w.alg, it.value(), "module " + it.key());
        if (j.contains("morphisms"))
            for (auto it = j.at("morphisms").begin(); it != j.at("morphisms").end(); ++it) {
                const json& m = it.value();
                std::string where = "morphism " + it.key();
                if (!m.contains("source") || !m.contains("target"))
                    throw InputError(where + ": needs \"source\" and \"target\"");
                auto ref = [&](const json& r) {
                    return r.is_string() ? w.module(r.get<std::string>()) : module_from_json(w.alg, r, where);
                };
                Module s = ref(m.at("source")), t = ref(m.at("target"));
                w.morphisms[it.key()] =
                    morphism_from_json(s, t, m.contains("components") ? m.at("components") : json::object(), where);
            }
        if (j.contains("bimodules"))
            for (auto it = j.at("bimodules").begin(); it != j.at("bimodules").end(); ++it)
                w.bimodules[it.key()] = bimodule_from_json(w.alg, it.value(), "bimodule " + it.key());
        if (j.contains("subcategories"))
            for (auto it = j.at("subcategories").begin(); it != j.at("subcategories").end(); ++it) {
                std::vector<std::string> names;
                for (auto& n : it.value()) {
                    names.push_back(n.get<std::string>());
                    w.module(names.back());
                }
                w.subcategories[it.key()] = names;
            }
        return w;
    } catch (const json::exception& e) {
        throw InputError(source + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    } catch (const DimensionError& e) {
        throw InputError(source + ": " + e.what());
    }
}

Workspace load_workspace(const std::string& where, const std::optional<Field>& field_override)
{
    if (where.rfind("builtin:", 0) == 0) {
        std::string name = where.substr(8);
        Field F = field_override ? *field_override : Field();
        Workspace w;
        w.source = where;
        if (name == "A2")
            w.alg = linear_quiver(2, F);
        else if (name == "A3")
            w.alg = linear_quiver(3, F);
        else if (name == "A4")
            w.alg = linear_quiver(4, F);
        else if (name == "delta5")
            w.alg = truncated_delta(5, F);
        else
            throw InputError("unknown builtin workspace '" + name + "' (A2, A3, A4, delta5)");
        add_standard_modules(w);
        w.bimodules["hom"] = hom_bimodule(w.alg);
        return w;
    }
    std::ifstream in(where);
    if (!in)
        throw InputError("cannot open workspace '" + where + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_workspace(parse_json_text(ss.str(), where), where, field_override);
}

json workspace_to_json(const Workspace& w)
{
    json out = algebra_to_json(*w.alg);
    json mods = json::object();
    for (auto& [k, v] : w.modules)
        mods[k] = module_to_json(v);
    out["modules"] = mods;
    json mors = json::object();
    for (auto& [k, v] : w.morphisms)
        mors[k] = json{{"source", module_to_json(v.src)}, {"target", module_to_json(v.tgt)},
                       {"components", morphism_to_json(v)}};
    out["morphisms"] = mors;
    json subs = json::object();
    for (auto& [k, v] : w.subcategories)
        subs[k] = v;
    out["subcategories"] = subs;
    return out;
}

Module Workspace::module(const std::string& name) const
{
    if (auto it = modules.find(name); it != modules.end())
        return it->second;
    if (name.size() > 2 && name[1] == ':') {
        int x = vertex(name.substr(2));
        switch (name[0]) {
        case 'P':
            return projective(alg, x);
        case 'I':
            return injective(alg, x);
        case 'S':
            return simple(alg, x);
        default:
            break;
        }
    }
    throw InputError("unknown module '" + name + "'");
}

Morphism Workspace::morphism(const std::string& name) const
{
    if (auto it = morphisms.find(name); it != morphisms.end())
        return it->second;
    throw InputError("unknown morphism '" + name + "'");
}

Bimodule Workspace::bimodule(const std::string& name) const
{
    if (auto it = bimodules.find(name); it != bimodules.end())
        return it->second;
    if (name == "hom")
        return hom_bimodule(alg);
    if (name == "zero")
        return zero_bimodule(alg, alg);
    throw InputError("unknown bimodule '" + name + "'");
}

std::vector<Module> Workspace::generators(const std::string& spec) const
{
    if (spec == "all")
        return enumerate_indecomposables(alg);
    std::vector<Module> out;
    if (auto it = subcategories.find(spec); it != subcategories.end()) {
        for (auto& n : it->second)
            out.push_back(module(n));
        return out;
    }
    for (auto& n : split(spec, ','))
        out.push_back(module(trim(n)));
    return out;
}

int Workspace::vertex(const std::string& label) const { return label_index(*alg, label, "workspace"); }

}  // namespace matcat
