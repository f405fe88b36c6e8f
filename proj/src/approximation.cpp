#include "matcat/approximation.hpp"

#include <algorithm>
#include <sstream>

namespace matcat {

std::string direction_name(Direction d) { return d == Direction::Left ? "left" : "right"; }

namespace {

// hom(a, b), composition, flattening and linear combination for one category
template <class Obj, class Mor>
struct CatOps {
    std::function<std::vector<Mor>(const Obj&, const Obj&)> hom;
    std::function<Mor(const Mor&, const Mor&)> comp;  // a o b
    std::function<Vec(const Mor&)> flat;
    std::function<Mor(const std::vector<Mor>&, const Vec&)> combine;
    std::function<bool(const Mor&, const Mor&)> equal;
    std::function<std::string(const Obj&)> name;
};

template <class Obj, class Mor>
ApproximationCertificate certify_generic(const CatOps<Obj, Mor>& ops, const Obj& M, const Obj& X, const Mor& cand,
                                         const std::vector<Obj>& gens, Direction dir, const Field& F)
{
    ApproximationCertificate cert;
    cert.dir = dir;
    cert.ok = true;
    for (std::size_t z = 0; z < gens.size(); ++z) {
        const Obj& Z = gens[z];
        std::vector<Mor> H = dir == Direction::Right ? ops.hom(Z, M) : ops.hom(M, Z);
        if (H.empty())
            continue;
        std::vector<Mor> W = dir == Direction::Right ? ops.hom(Z, X) : ops.hom(X, Z);
        std::vector<Mor> images;
        for (auto& w : W)
            images.push_back(dir == Direction::Right ? ops.comp(cand, w) : ops.comp(w, cand));
        std::size_t len = ops.flat(H[0]).size();
        Matrix A(F, len, images.size());
        for (std::size_t c = 0; c < images.size(); ++c) {
            Vec v = ops.flat(images[c]);
            for (std::size_t r = 0; r < len; ++r)
                A(r, c) = v[r];
        }
        for (std::size_t i = 0; i < H.size(); ++i) {
            FactorWitness w;
            w.generator = z;
            w.basis_index = i;
            Vec h = ops.flat(H[i]);
            if (W.empty()) {
                w.ok = std::all_of(h.begin(), h.end(), [](const Scalar& s) { return s == 0; });
            } else {
                auto sol = solve_linear(A, Matrix::column(F, h));
                if (sol) {
                    w.coeffs = sol->col_vec(0);
                    Mor fac = ops.combine(W, w.coeffs);
                    Mor back = dir == Direction::Right ? ops.comp(cand, fac) : ops.comp(fac, cand);
                    w.ok = ops.equal(back, H[i]);
                }
            }
            ++cert.tested;
            if (!w.ok && cert.ok) {
                cert.ok = false;
                std::ostringstream os;
                os << "basis morphism #" << i << (dir == Direction::Right ? " from" : " to") << " generator #" << z
                   << " " << ops.name(Z) << " does not factor";
                cert.refutation = os.str();
            }
            cert.witnesses.push_back(std::move(w));
        }
    }
    return cert;
}

CatOps<Module, Morphism> module_ops()
{
    CatOps<Module, Morphism> o;
    o.hom = [](const Module& a, const Module& b) { return hom_space(a, b); };
    o.comp = [](const Morphism& a, const Morphism& b) { return compose(a, b); };
    o.flat = [](const Morphism& f) { return flatten(f); };
    o.combine = [](const std::vector<Morphism>& B, const Vec& c) {
        return linear_combination(B[0].src, B[0].tgt, B, c);
    };
    o.equal = [](const Morphism& a, const Morphism& b) { return morphisms_equal(a, b); };
    o.name = [](const Module& X) { return X.dim_string(); };
    return o;
}

Vec concat(Vec a, const Vec& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

CatOps<MapsObject, MapsMorphism> maps_ops()
{
    CatOps<MapsObject, MapsMorphism> o;
    o.hom = [](const MapsObject& a, const MapsObject& b) { return maps_hom(a, b); };
    o.comp = [](const MapsMorphism& a, const MapsMorphism& b) { return maps_compose(a, b); };
    o.flat = [](const MapsMorphism& m) { return concat(flatten(m.h1), flatten(m.h0)); };
    o.combine = [](const std::vector<MapsMorphism>& B, const Vec& c) {
        MapsMorphism r = maps_zero(B[0].src, B[0].tgt);
        for (std::size_t i = 0; i < B.size(); ++i) {
            r.h1 = r.h1 + scale(B[i].h1, c[i]);
            r.h0 = r.h0 + scale(B[i].h0, c[i]);
        }
        return r;
    };
    o.equal = [](const MapsMorphism& a, const MapsMorphism& b) { return maps_morphisms_equal(a, b); };
    o.name = [](const MapsObject& X) { return X.dim_string(); };
    return o;
}

CatOps<GCommaObject, GCommaMorphism> comma_ops(const GComma& cat)
{
    CatOps<GCommaObject, GCommaMorphism> o;
    o.hom = [&cat](const GCommaObject& a, const GCommaObject& b) { return cat.hom(a, b); };
    o.comp = [&cat](const GCommaMorphism& a, const GCommaMorphism& b) { return cat.compose(a, b); };
    o.flat = [](const GCommaMorphism& m) { return concat(flatten(m.lambda), flatten(m.phi)); };
    o.combine = [](const std::vector<GCommaMorphism>& B, const Vec& c) {
        GCommaMorphism r{B[0].src, B[0].tgt, zero_morphism(B[0].src.B, B[0].tgt.B),
                         zero_morphism(B[0].src.A, B[0].tgt.A)};
        for (std::size_t i = 0; i < B.size(); ++i) {
            r.lambda = r.lambda + scale(B[i].lambda, c[i]);
            r.phi = r.phi + scale(B[i].phi, c[i]);
        }
        return r;
    };
    o.equal = [](const GCommaMorphism& a, const GCommaMorphism& b) {
        return morphisms_equal(a.lambda, b.lambda) && morphisms_equal(a.phi, b.phi);
    };
    o.name = [](const GCommaObject& X) { return X.dim_string(); };
    return o;
}

}  // namespace

ApproximationCertificate certify_approximation(const Morphism& candidate, const std::vector<Module>& gens,
                                               Direction dir)
{
    const Module& M = dir == Direction::Right ? candidate.tgt : candidate.src;
    const Module& X = dir == Direction::Right ? candidate.src : candidate.tgt;
    return certify_generic(module_ops(), M, X, candidate, gens, dir, M.field());
}

ModuleApproximation approximate_addG(const Module& M, const std::vector<Module>& gens, Direction dir)
{
    std::vector<Module> parts;
    std::vector<Morphism> maps;
    for (auto& Z : gens) {
        auto H = dir == Direction::Right ? hom_space(Z, M) : hom_space(M, Z);
        for (auto& h : H) {
            parts.push_back(Z);
            maps.push_back(h);
        }
    }
    ModuleApproximation r;
    if (parts.empty()) {
        r.obj = zero_module(M.alg);
        r.map = dir == Direction::Right ? zero_morphism(r.obj, M) : zero_morphism(M, r.obj);
    } else {
        DirectSum S = direct_sum(parts);
        r.obj = S.obj;
        r.map = dir == Direction::Right ? sum_map_out(S, M, maps) : sum_map_in(S, M, maps);
    }
    r.cert = certify_approximation(r.map, gens, dir);
    return r;
}

// ---------------------------------------------------------------- maps(mod C)

ApproximationCertificate certify_maps_approximation(const MapsMorphism& candidate,
                                                    const std::vector<MapsObject>& gens, Direction dir)
{
    const MapsObject& M = dir == Direction::Right ? candidate.tgt : candidate.src;
    const MapsObject& X = dir == Direction::Right ? candidate.src : candidate.tgt;
    return certify_generic(maps_ops(), M, X, candidate, gens, dir, M.A1.field());
}

std::vector<MapsObject> maps_indecomposables(const AlgebraPtr& C)
{
    MapsContext ctx(C);
    std::vector<MapsObject> out;
    for (auto& Y : enumerate_indecomposables(ctx.lambda()))
        out.push_back(ctx.from_matrix_module(Y));
    return out;
}

std::vector<MapsObject> epi_generators(const AlgebraPtr& C)
{
    std::vector<MapsObject> out;
    for (auto& X : maps_indecomposables(C))
        if (is_epi(X.f))
            out.push_back(X);
    return out;
}

std::vector<MapsObject> mono_generators(const AlgebraPtr& C)
{
    std::vector<MapsObject> out;
    for (auto& X : maps_indecomposables(C))
        if (is_mono(X.f))
            out.push_back(X);
    return out;
}

MapsApproximation approximate_epi_maps(const MapsObject& X, Direction dir, const std::vector<MapsObject>& gens)
{
    MapsApproximation r;
    if (dir == Direction::Right) {
        ImageFactorization im = image(X.f);
        r.obj = maps_object(im.epi);
        r.map = MapsMorphism{r.obj, X, identity_morphism(X.A1), im.mono};
    } else {
        Morphism eps = projective_cover(X.A0);
        DirectSum S = direct_sum({X.A1, eps.src});
        r.obj = maps_object(sum_map_out(S, X.A0, {X.f, eps}));
        r.map = MapsMorphism{X, r.obj, S.inj[0], identity_morphism(X.A0)};
    }
    if (!is_epi(r.obj.f))
        throw Error("epi approximation: constructed object is not epi");
    r.cert = certify_maps_approximation(r.map, gens, dir);
    return r;
}

MapsApproximation approximate_mono_maps(const MapsObject& X, Direction dir, const std::vector<MapsObject>& gens)
{
    MapsApproximation r;
    if (dir == Direction::Left) {
        SubObject K = kernel(X.f);
        SubObject Q = quotient(X.A1, K.map.comp);
        auto fbar = solve_right_factor(X.f, Q.map);
        if (!fbar)
            throw Error("mono approximation: f does not factor through the coimage");
        r.obj = maps_object(*fbar);
        r.map = MapsMorphism{X, r.obj, Q.map, identity_morphism(X.A0)};
    } else {
        Morphism i = injective_envelope(X.A1);
        DirectSum S = direct_sum({X.A0, i.tgt});
        r.obj = maps_object(sum_map_in(S, X.A1, {X.f, i}));
        r.map = MapsMorphism{r.obj, X, identity_morphism(X.A1), S.proj[0]};
    }
    if (!is_mono(r.obj.f))
        throw Error("mono approximation: constructed object is not mono");
    r.cert = certify_maps_approximation(r.map, gens, dir);
    return r;
}

MapsApproximation approximate_epi_maps(const MapsObject& X, Direction dir)
{
    return approximate_epi_maps(X, dir, epi_generators(X.alg()));
}

MapsApproximation approximate_mono_maps(const MapsObject& X, Direction dir)
{
    return approximate_mono_maps(X, dir, mono_generators(X.alg()));
}

// ---------------------------------------------------------------- comma category (G(B), A)

std::string GComma::check(const GCommaObject& X) const
{
    if (auto e = check_module(X.B); !e.empty())
        return "B: " + e;
    if (auto e = check_module(X.A); !e.empty())
        return "A: " + e;
    if (!modules_equal(X.g.src, G_.obj(X.B)) || !modules_equal(X.g.tgt, X.A))
        return "structure map has the wrong source or target";
    return check_morphism(X.g);
}

std::string GComma::check(const GCommaMorphism& m) const
{
    if (auto e = check_morphism(m.lambda); !e.empty())
        return "lambda: " + e;
    if (auto e = check_morphism(m.phi); !e.empty())
        return "phi: " + e;
    if (!morphisms_equal(matcat::compose(m.phi, m.src.g), matcat::compose(m.tgt.g, G_.mor(m.lambda))))
        return "square does not commute";
    return {};
}

std::vector<GCommaMorphism> GComma::hom(const GCommaObject& X, const GCommaObject& Y) const
{
    const Field& F = X.A.field();
    auto HL = hom_space(X.B, Y.B);
    auto HP = hom_space(X.A, Y.A);
    std::vector<Vec> cols;
    for (auto& l : HL) {
        Vec v = flatten(matcat::compose(Y.g, G_.mor(l)));
        for (auto& s : v)
            s = F.neg(s);
        cols.push_back(std::move(v));
    }
    for (auto& p : HP)
        cols.push_back(flatten(matcat::compose(p, X.g)));
    std::vector<GCommaMorphism> out;
    if (cols.empty())
        return out;
    Matrix S(F, cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r)
            S(r, c) = cols[c][r];
    Matrix K = kernel_basis(S);
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Vec v = K.col_vec(c);
        Vec a(v.begin(), v.begin() + HL.size()), b(v.begin() + HL.size(), v.end());
        out.push_back({X, Y, linear_combination(X.B, Y.B, HL, a), linear_combination(X.A, Y.A, HP, b)});
    }
    return out;
}

GCommaMorphism GComma::compose(const GCommaMorphism& a, const GCommaMorphism& b) const
{
    return {b.src, a.tgt, matcat::compose(a.lambda, b.lambda), matcat::compose(a.phi, b.phi)};
}

std::vector<GCommaObject> GComma::generators(const std::vector<Module>& Ygens, const std::vector<Module>& Xgens) const
{
    std::vector<Module> Ys = Ygens, Xs = Xgens;
    AlgebraPtr src = !Ygens.empty() ? Ygens[0].alg : nullptr;
    if (src)
        Ys.push_back(zero_module(src));
    Xs.push_back(zero_module(G_.tgt));
    std::vector<GCommaObject> out;
    for (auto& Y : Ys)
        for (auto& X : Xs) {
            if (Y.is_zero() && X.is_zero())
                continue;
            Module GY = G_.obj(Y);
            out.push_back({Y, X, zero_morphism(GY, X)});
            auto H = hom_space(GY, X);
            for (auto& h : H)
                out.push_back({Y, X, h});
            if (H.size() > 1) {
                Morphism s = H[0];
                for (std::size_t i = 1; i < H.size(); ++i)
                    s = s + H[i];
                out.push_back({Y, X, s});
            }
        }
    return out;
}

ApproximationCertificate certify_comma_approximation(const GComma& cat, const GCommaMorphism& candidate,
                                                     const std::vector<GCommaObject>& gens, Direction dir)
{
    const GCommaObject& M = dir == Direction::Right ? candidate.tgt : candidate.src;
    const GCommaObject& X = dir == Direction::Right ? candidate.src : candidate.tgt;
    return certify_generic(comma_ops(cat), M, X, candidate, gens, dir, M.A.field());
}

namespace {

struct SmaloCore {
    ModuleApproximation alpha, beta;
    Module C;
    Morphism g_prime, delta;
    GCommaObject obj;
    GCommaMorphism map;
};

SmaloCore smalo_core(const GComma& cat, const GCommaObject& X, const std::vector<Module>& Ygens,
                     const std::vector<Module>& Xgens)
{
    SmaloCore s;
    s.alpha = approximate_addG(X.B, Ygens, Direction::Left);
    Morphism Ga = cat.functor().mor(s.alpha.map);
    Pushout po = pushout(Ga, X.g);
    s.C = po.obj;
    s.g_prime = po.g_prime;
    s.delta = po.f_prime;
    s.beta = approximate_addG(s.C, Xgens, Direction::Left);
    s.obj = GCommaObject{s.alpha.obj, s.beta.obj, compose(s.beta.map, s.g_prime)};
    s.map = GCommaMorphism{X, s.obj, s.alpha.map, compose(s.beta.map, s.delta)};
    return s;
}

}  // namespace

SmaloResult smalo_comma_approximation(const GComma& cat, const GCommaObject& X, const std::vector<Module>& Ygens,
                                      const std::vector<Module>& Xgens)
{
    if (Ygens.empty() || Xgens.empty())
        throw InputError("comma approximation needs nonempty generator lists");
    if (auto e = cat.check(X); !e.empty())
        throw InputError("comma object: " + e);
    SmaloCore s = smalo_core(cat, X, Ygens, Xgens);
    SmaloResult r;
    r.alpha = s.alpha;
    r.beta = s.beta;
    r.C = s.C;
    r.g_prime = s.g_prime;
    r.delta = s.delta;
    r.obj = s.obj;
    r.map = s.map;
    if (auto e = cat.check(r.map); !e.empty())
        throw Error("comma approximation: " + e);
    r.cert = certify_comma_approximation(cat, r.map, cat.generators(Ygens, Xgens), Direction::Left);

    Module Z = zero_module(cat.functor().tgt);
    GCommaObject B0{X.B, Z, zero_morphism(cat.functor().obj(X.B), Z)};
    SmaloCore s0 = smalo_core(cat, B0, Ygens, Xgens);
    ApproximationCertificate c0 =
        certify_comma_approximation(cat, s0.map, cat.generators(Ygens, Xgens), Direction::Left);
    r.converse = certify_approximation(s0.map.lambda, Ygens, Direction::Left);
    if (!c0.ok) {
        r.converse.ok = false;
        r.converse.refutation = "approximation of (B, 0, 0) failed: " + c0.refutation;
    }
    return r;
}

ModFunctor hom_functor(const CommaSide& s)
{
    return ModFunctor{"G", s.T(), [s](const Module& A) { return s.G(A); },
                      [s](const Morphism& g) { return s.G(g); }};
}

}  // namespace matcat
