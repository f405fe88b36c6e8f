#include "matcat/acceptance.hpp"
#include "matcat/approximation.hpp"
#include "matcat/maps.hpp"
#include "matcat/recollement.hpp"
#include "matcat/workspace.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace matcat;

namespace {

struct Opts {
    std::string workspace = "builtin:A2";
    std::string module;
    std::string field;
    bool json_out = false;

    std::string to;              // hom
    bool inverse = false;        // tau
    std::string object;          // maps-tau: morphism name
    std::string shape = "identity";
    bool closed_form = false;
    bool maps = false;           // ar-seq
    int variant = 0;
    std::string seq;             // verify-ar
    std::string subset;          // recollement-check
    std::string bimodule;
    std::string gens = "projectives";  // approx
    std::string dir = "right";
    std::string candidate;
    std::string fault;           // selftest
    std::vector<int> only;
};

std::string dims_text(const Module& X)
{
    std::ostringstream os;
    os << "{";
    for (int x = 0; x < X.alg->num_vertices(); ++x)
        os << (x ? ", " : "") << X.alg->label(x) << ":" << X.dim(x);
    os << "}";
    return os.str();
}

std::string matrix_text(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return "0 (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.field().format(m(i, j));
    }
    os << "]";
    return os.str();
}

void print_module(std::ostream& os, const Module& X, const std::string& indent = "  ")
{
    os << indent << "dims " << dims_text(X) << "\n";
    for (std::size_t a = 0; a < X.alg->arrows().size(); ++a)
        os << indent << X.alg->arrows()[a].name << ": " << matrix_text(X.maps[a]) << "\n";
}

void print_morphism(std::ostream& os, const Morphism& f, const std::string& indent = "  ")
{
    for (int x = 0; x < f.src.alg->num_vertices(); ++x)
        os << indent << "at " << f.src.alg->label(x) << ": " << matrix_text(f.at(x)) << "\n";
}

MapsObject maps_input(const Workspace& w, const Opts& o)
{
    if (!o.object.empty())
        return maps_object(w.morphism(o.object));
    if (o.module.empty())
        throw InputError("need -m <module> or --object <morphism>");
    Module M = w.module(o.module);
    if (o.shape == "identity")
        return maps_identity_object(M);
    if (o.shape == "top")
        return maps_top_object(M);
    if (o.shape == "bottom")
        return maps_bottom_object(M);
    throw InputError("unknown shape '" + o.shape + "' (identity, top, bottom)");
}

json maps_object_json(const MapsObject& X)
{
    return json{{"A1", module_to_json(X.A1)}, {"A0", module_to_json(X.A0)}, {"f", morphism_to_json(X.f)}};
}

void print_maps_object(std::ostream& os, const MapsObject& X)
{
    os << "A1:\n";
    print_module(os, X.A1);
    os << "A0:\n";
    print_module(os, X.A0);
    os << "f:\n";
    print_morphism(os, X.f);
}

json ses_json(const ShortExactSequence& s)
{
    return json{{"left", module_to_json(s.j.src)},   {"middle", module_to_json(s.j.tgt)},
                {"right", module_to_json(s.p.tgt)},  {"j", morphism_to_json(s.j)},
                {"p", morphism_to_json(s.p)}};
}

ShortExactSequence ses_from_json(const AlgebraPtr& A, const json& j, const std::string& where)
{
    for (const char* k : {"left", "middle", "right", "j", "p"})
        if (!j.contains(k))
            throw InputError(where + ": sequence needs \"" + std::string(k) + "\"");
    Module L = module_from_json(A, j.at("left"), where + ", left");
    Module M = module_from_json(A, j.at("middle"), where + ", middle");
    Module R = module_from_json(A, j.at("right"), where + ", right");
    return {morphism_from_json(L, M, j.at("j"), where + ", j"), morphism_from_json(M, R, j.at("p"), where + ", p")};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json cert_json(const ApproximationCertificate& c)
{
    json w = json::array();
    for (auto& x : c.witnesses) {
        json co = json::array();
        for (auto& s : x.coeffs)
            co.push_back(s.get_str());
        w.push_back(json{{"generator", x.generator}, {"basis_index", x.basis_index}, {"ok", x.ok}, {"coeffs", co}});
    }
    return json{{"direction", direction_name(c.dir)}, {"ok", c.ok},      {"tested", c.tested},
                {"refutation", c.refutation},         {"witnesses", w}};
}

// ---------------------------------------------------------------- subcommands

int cmd_hom(const Workspace& w, const Opts& o, std::ostream& os)
{
    Module X = w.module(o.module), Y = w.module(o.to);
    auto H = hom_space(X, Y);
    if (o.json_out) {
        json b = json::array();
        for (auto& h : H)
            b.push_back(morphism_to_json(h));
        os << json{{"source", o.module}, {"target", o.to}, {"dim", H.size()}, {"basis", b}}.dump(2) << "\n";
        return 0;
    }
    os << "dim Hom(" << o.module << ", " << o.to << ") = " << H.size() << "\n";
    for (std::size_t i = 0; i < H.size(); ++i) {
        os << "basis " << i << ":\n";
        print_morphism(os, H[i]);
    }
    return 0;
}

int cmd_tau(const Workspace& w, const Opts& o, std::ostream& os)
{
    Module X = w.module(o.module);
    Module T = o.inverse ? tau_inverse(X) : tau(X);
    std::string name = std::string(o.inverse ? "tau^-1(" : "tau(") + o.module + ")";
    if (o.json_out) {
        os << json{{"input", o.module}, {"inverse", o.inverse}, {"result", module_to_json(T)}}.dump(2) << "\n";
        return 0;
    }
    os << name << " = module with dims " << dims_text(T) << "\n";
    print_module(os, T);
    return 0;
}

int cmd_maps_tau(const Workspace& w, const Opts& o, std::ostream& os)
{
    MapsObject X = maps_input(w, o);
    MapsObject T = maps_Tau(X);
    TauClosedForm cf;
    if (o.closed_form)
        cf = check_tau_closed_form(X);
    int code = o.closed_form && cf.applicable && !cf.ok ? 1 : 0;
    if (o.json_out) {
        json out{{"input", maps_object_json(X)}, {"Tau", maps_object_json(T)}};
        if (o.closed_form)
            out["closed_form"] = json{{"applicable", cf.applicable},
                                      {"ok", cf.ok},
                                      {"up_to_projective", cf.up_to_projective},
                                      {"failure", cf.failure},
                                      {"certificate", cf.certificate}};
        os << out.dump(2) << "\n";
        return code;
    }
    os << "Tau of " << X.dim_string() << " = " << T.dim_string() << "\n";
    print_maps_object(os, T);
    if (o.closed_form) {
        if (!cf.applicable)
            os << "closed form: not applicable (coker f is zero or projective)\n";
        else if (cf.ok)
            os << "closed form: verified\n";
        else
            os << "closed form: refuted: " << cf.failure << "\n";
        for (auto& c : cf.certificate)
            os << "  " << c << "\n";
    }
    return code;
}

int cmd_ar_seq(const Workspace& w, const Opts& o, std::ostream& os)
{
    Module X = w.module(o.module);
    if (!is_indecomposable(X))
        throw InputError("module '" + o.module + "' is not indecomposable");
    if (tau(X).is_zero())
        throw InputError("module '" + o.module + "' is projective; no almost split sequence ends in it");
    ShortExactSequence s = almost_split_sequence(X);
    if (o.maps) {
        if (o.variant < 0 || o.variant > 3)
            throw InputError("variant must be 0..3");
        MapsSES S = ar_sequence_from_module(s, o.variant);
        MapsContext ctx(w.alg);
        if (o.json_out) {
            json out{{"variant", ar_variant_name(o.variant)},
                     {"left", maps_object_json(S.j.src)},
                     {"middle", maps_object_json(S.j.tgt)},
                     {"right", maps_object_json(S.p.tgt)},
                     {"lambda", ses_json(ctx.to_matrix_ses(S))}};
            os << out.dump(2) << "\n";
            return 0;
        }
        os << "maps almost split sequence (" << ar_variant_name(o.variant) << "): " << S.j.src.dim_string() << " => "
           << S.j.tgt.dim_string() << " => " << S.p.tgt.dim_string() << "\n";
        os << "left:\n";
        print_maps_object(os, S.j.src);
        os << "middle:\n";
        print_maps_object(os, S.j.tgt);
        os << "right:\n";
        print_maps_object(os, S.p.tgt);
        return 0;
    }
    if (o.json_out) {
        os << ses_json(s).dump(2) << "\n";
        return 0;
    }
    os << "0 -> " << dims_text(s.j.src) << " -> " << dims_text(s.j.tgt) << " -> " << dims_text(s.p.tgt) << " -> 0\n";
    os << "left:\n";
    print_module(os, s.j.src);
    os << "middle:\n";
    print_module(os, s.j.tgt);
    os << "j:\n";
    print_morphism(os, s.j);
    os << "p:\n";
    print_morphism(os, s.p);
    return 0;
}

int cmd_verify_ar(const Workspace& w, const Opts& o, std::ostream& os)
{
    if (o.seq.empty())
        throw InputError("need --seq <file>");
    ShortExactSequence s = ses_from_json(w.alg, parse_json_text(read_file(o.seq), o.seq), o.seq);
    std::string ex = check_exact(s);
    VerifyReport rep;
    if (ex.empty())
        rep = verify_almost_split(s, enumerate_indecomposables(w.alg));
    else
        rep.failure = "not exact: " + ex;
    if (o.json_out) {
        os << json{{"ok", rep.ok}, {"failure", rep.failure}, {"certificate", rep.certificate}}.dump(2) << "\n";
    } else {
        os << (rep.ok ? "almost split: verified" : "refuted: " + rep.failure) << "\n";
        for (auto& c : rep.certificate)
            os << "  " << c << "\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_maps_algebra(const Workspace& w, const Opts& o, std::ostream& os)
{
    TriangularAlgebra L = doubled_maps_algebra(w.alg);
    json out = algebra_to_json(*L.alg);
    if (o.json_out) {
        os << out.dump(2) << "\n";
        return 0;
    }
    os << out.dump(2) << "\n";
    std::cerr << L.alg->num_vertices() << " vertices, " << L.alg->arrows().size() << " arrows, "
       << L.alg->relations().size() << " relations, dimension " << L.alg->total_dim() << "\n";
    return 0;
}

int cmd_recollement(const Workspace& w, const Opts& o, std::ostream& os)
{
    if (o.subset.empty())
        throw InputError("need -B <vertex labels>");
    std::vector<int> B;
    std::stringstream ss(o.subset);
    for (std::string lab; std::getline(ss, lab, ',');)
        B.push_back(w.vertex(lab));
    Recollement r(w.alg, B);
    std::vector<RecollementReport> reps{check_recollement(r)};
    if (!o.bimodule.empty()) {
        Bimodule M = restrict_left(w.bimodule(o.bimodule), r.sub(), r.subset());
        InducedRecollement ind(r, M);
        reps.push_back(ind.check());
    }
    bool ok = true;
    for (auto& rep : reps)
        ok = ok && rep.ok();
    if (o.json_out) {
        json out = json::array();
        for (auto& rep : reps) {
            json items = json::array();
            for (auto& it : rep.items)
                items.push_back(json{{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
            out.push_back(json{{"header", rep.header}, {"ok", rep.ok()}, {"items", items}});
        }
        os << json{{"ok", ok}, {"reports", out}}.dump(2) << "\n";
    } else {
        for (auto& rep : reps) {
            os << rep.header << "\n";
            for (auto& it : rep.items)
                os << "  " << (it.ok ? "ok   " : "FAIL ") << it.name << (it.detail.empty() ? "" : ": " + it.detail)
                   << "\n";
        }
        os << (ok ? "recollement verified" : "recollement refuted") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_approx(const Workspace& w, const Opts& o, std::ostream& os)
{
    Direction dir;
    if (o.dir == "right")
        dir = Direction::Right;
    else if (o.dir == "left")
        dir = Direction::Left;
    else
        throw InputError("unknown direction '" + o.dir + "' (left, right)");
    auto gens = w.generators(o.gens);
    ApproximationCertificate cert;
    std::optional<ModuleApproximation> a;
    if (!o.candidate.empty()) {
        cert = certify_approximation(w.morphism(o.candidate), gens, dir);
    } else {
        a = approximate_addG(w.module(o.module), gens, dir);
        cert = a->cert;
    }
    if (o.json_out) {
        json out{{"generators", o.gens}, {"certificate", cert_json(cert)}};
        if (a) {
            out["object"] = module_to_json(a->obj);
            out["map"] = morphism_to_json(a->map);
        }
        os << out.dump(2) << "\n";
    } else {
        if (a) {
            os << direction_name(dir) << " add(" << o.gens << ")-approximation of " << o.module << ":\n";
            os << "object:\n";
            print_module(os, a->obj);
            os << "map:\n";
            print_morphism(os, a->map);
        }
        os << (cert.ok ? "certified" : "refuted: " + cert.refutation) << " (" << cert.tested
           << " basis morphisms tested)\n";
    }
    return cert.ok ? 0 : 1;
}

int cmd_selftest(const Opts& o, std::ostream& os)
{
    if (!o.fault.empty() && o.fault != "relation" && o.fault != "counit" && o.fault != "approx")
        throw InputError("unknown fault '" + o.fault + "' (relation, counit, approx)");
    AcceptanceOptions ao;
    ao.fault = o.fault;
    ao.only = o.only;
    auto results = run_acceptance(ao);
    bool ok = true;
    for (auto& r : results)
        ok = ok && r.ok;
    if (o.json_out) {
        json arr = json::array();
        for (auto& r : results)
            arr.push_back(json{{"id", r.id}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        os << json{{"ok", ok}, {"fault", o.fault}, {"criteria", arr}}.dump(2) << "\n";
    } else {
        for (auto& r : results)
            os << format_result(r) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"matcat: exact computations with modules, maps categories, recollements and approximations"};
    app.require_subcommand(1);
    Opts o;

    auto common = [&](CLI::App* s, bool module) {
        s->add_option("-w,--workspace", o.workspace, "workspace JSON file or builtin:A2|A3|A4|delta5");
        s->add_option("--field", o.field, "override the field (Q or Fp:<p>)");
        s->add_flag("--json", o.json_out, "machine readable output");
        if (module)
            s->add_option("-m,--module", o.module, "module name, or P:x / I:x / S:x");
    };

    auto* hom = app.add_subcommand("hom", "basis of Hom(M, N)");
    common(hom, true);
    hom->add_option("--to", o.to, "target module")->required();
    hom->get_option("-m")->required();

    auto* tau_c = app.add_subcommand("tau", "Auslander-Reiten translate of a module");
    common(tau_c, true);
    tau_c->get_option("-m")->required();
    tau_c->add_flag("--inverse", o.inverse, "compute the inverse translate");

    auto* mtau = app.add_subcommand("maps-tau", "Tau of an object of the maps category");
    common(mtau, true);
    mtau->add_option("--object", o.object, "morphism A1 -> A0 from the workspace");
    mtau->add_option("--shape", o.shape, "with -m: identity (M,1,M), top (M,0,0) or bottom (0,0,M)");
    mtau->add_flag("--closed-form", o.closed_form, "check the closed form for Tau against the computed one");

    auto* ar = app.add_subcommand("ar-seq", "almost split sequence ending in a module");
    common(ar, true);
    ar->get_option("-m")->required();
    ar->add_flag("--maps", o.maps, "build the induced sequence in the maps category");
    ar->add_option("--variant", o.variant, "maps variant 0..3");

    auto* var = app.add_subcommand("verify-ar", "verify that a sequence is almost split");
    common(var, false);
    var->add_option("--seq", o.seq, "sequence JSON (left, middle, right, j, p)")->required();

    auto* ma = app.add_subcommand("maps-algebra", "the triangular matrix algebra modelling the maps category");
    common(ma, false);

    auto* rc = app.add_subcommand("recollement-check", "check the recollement attached to a set of vertices");
    common(rc, false);
    rc->add_option("-B,--subset", o.subset, "comma separated vertex labels")->required();
    rc->add_option("--bimodule", o.bimodule, "also check the induced matrix recollement for this bimodule");

    auto* ap = app.add_subcommand("approx", "add(G) approximations with certificates");
    common(ap, true);
    ap->add_option("-G,--generators", o.gens, "subcategory name, comma separated module names, or all");
    ap->add_option("--dir", o.dir, "left or right");
    ap->add_option("--candidate", o.candidate, "certify this morphism instead of constructing one");

    auto* st = app.add_subcommand("selftest", "run the acceptance suite");
    st->add_flag("--json", o.json_out, "machine readable output");
    st->add_option("--fault", o.fault, "inject a fault: relation, counit or approx");
    st->add_option("--only", o.only, "criterion numbers to run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (st->parsed())
            return cmd_selftest(o, std::cout);
        if (ap->parsed() && o.module.empty() && o.candidate.empty())
            throw InputError("need -m <module> or --candidate <morphism>");
        std::optional<Field> F;
        if (!o.field.empty())
            F = parse_field_spec(o.field);
        Workspace w = load_workspace(o.workspace, F);
        if (hom->parsed())
            return cmd_hom(w, o, std::cout);
        if (tau_c->parsed())
            return cmd_tau(w, o, std::cout);
        if (mtau->parsed())
            return cmd_maps_tau(w, o, std::cout);
        if (ar->parsed())
            return cmd_ar_seq(w, o, std::cout);
        if (var->parsed())
            return cmd_verify_ar(w, o, std::cout);
        if (ma->parsed())
            return cmd_maps_algebra(w, o, std::cout);
        if (rc->parsed())
            return cmd_recollement(w, o, std::cout);
        if (ap->parsed())
            return cmd_approx(w, o, std::cout);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
