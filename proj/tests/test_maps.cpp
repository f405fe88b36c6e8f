#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcat/builtin.hpp"
#include "matcat/maps.hpp"

#include <random>

using namespace matcat;

namespace {

std::vector<std::size_t> dv(std::initializer_list<std::size_t> l) { return l; }

Morphism random_morphism(const Module& X, const Module& Y, std::mt19937& rng)
{
    auto H = hom_space(X, Y);
    std::uniform_int_distribution<int> v(-3, 3);
    Vec c(H.size());
    for (auto& x : c)
        x = v(rng);
    return linear_combination(X, Y, H, c);
}

}  // namespace

TEST_CASE("doubled algebra round trip")
{
    auto C = linear_quiver(2);
    MapsContext ctx(C);
    std::mt19937 rng(7);
    auto inds = enumerate_indecomposables(C);
    for (auto& a : inds)
        for (auto& b : inds) {
            MapsObject X = maps_object(random_morphism(a, b, rng));
            Module Y = ctx.to_matrix_module(X);
            CHECK(check_module(Y) == "");
            MapsObject Z = ctx.from_matrix_module(Y);
            CHECK(morphisms_equal(Z.f, X.f));
        }
}

TEST_CASE("maps hom agrees with hom over the doubled algebra")
{
    std::mt19937 rng(11);
    for (int n : {2, 3}) {
        auto C = linear_quiver(n);
        MapsContext ctx(C);
        auto inds = enumerate_indecomposables(C);
        for (int t = 0; t < 15; ++t) {
            auto pick = [&]() { return inds[rng() % inds.size()]; };
            MapsObject X = maps_object(random_morphism(pick(), pick(), rng));
            MapsObject Y = maps_object(random_morphism(pick(), pick(), rng));
            auto H = maps_hom(X, Y);
            CHECK(H.size() == hom_dim(ctx.to_matrix_module(X), ctx.to_matrix_module(Y)));
            for (auto& h : H)
                CHECK(check_maps_morphism(h) == "");
        }
    }
}

TEST_CASE("maps projectives are the projectives of the doubled algebra")
{
    auto C = linear_quiver(2);
    MapsContext ctx(C);
    const auto& L = ctx.doubled();
    for (int x = 0; x < 2; ++x) {
        CHECK(isomorphic(ctx.to_matrix_module(maps_projective(C, {x}, {})), projective(L.alg, L.t_vertex[x])));
        CHECK(isomorphic(ctx.to_matrix_module(maps_projective(C, {}, {x})), projective(L.alg, L.u_vertex[x])));
    }
    auto P = maps_projectives(C);
    CHECK(P.size() == 4);
    for (auto& X : P)
        for (auto& Y : P) {
            std::size_t h = hom_dim(ctx.to_matrix_module(X), ctx.to_matrix_module(Y));
            std::size_t r = radical_hom(ctx.to_matrix_module(X), ctx.to_matrix_module(Y)).size();
            CHECK(r == h - (isomorphic(ctx.to_matrix_module(X), ctx.to_matrix_module(Y)) ? 1 : 0));
        }
}

TEST_CASE("star of maps projective morphisms is an involution")
{
    auto C = linear_quiver(2);
    auto P = maps_projectives(C);
    std::mt19937 rng(5);
    for (auto& X : P)
        for (auto& Y : P)
            for (auto& h : maps_hom(X, Y)) {
                CHECK(check_maps_morphism(maps_star(h)) == "");
                MapsMorphism back = maps_star(maps_star(h));
                CHECK(maps_morphisms_equal(back, h));
            }
}

TEST_CASE("maps covers and Tau agree with the doubled algebra")
{
    for (int n : {2, 3}) {
        auto C = linear_quiver(n);
        MapsContext ctx(C);
        auto inds = enumerate_indecomposables(ctx.lambda());
        for (auto& Y : inds) {
            MapsObject X = ctx.from_matrix_module(Y);
            MapsMorphism c = maps_projective_cover(X);
            CHECK(check_maps_morphism(c) == "");
            CHECK(is_epi(c.h1));
            CHECK(is_epi(c.h0));
            CHECK(isomorphic(ctx.to_matrix_module(c.src), projective_cover(Y).src));
            MapsObject T = maps_Tau(X);
            CHECK(same_algebra(T.alg(), C));
            CHECK(isomorphic(ctx.to_matrix_module(T), tau(Y)));
        }
    }
}

TEST_CASE("A2 Tau values")
{
    auto C = linear_quiver(2);
    Module S1 = simple(C, 0), S2 = simple(C, 1);
    MapsObject T = maps_Tau(maps_identity_object(S1));
    CHECK(isomorphic(T.A1, S2));
    CHECK(T.A0.is_zero());
    MapsObject U = maps_Tau(maps_bottom_object(S1));
    CHECK(isomorphic(U.A1, S2));
    CHECK(isomorphic(U.A0, S2));
    CHECK(is_iso(U.f));
}

TEST_CASE("Tau closed form")
{
    for (int n : {2, 3}) {
        auto C = linear_quiver(n);
        MapsContext ctx(C);
        int applicable = 0, literal = 0;
        std::vector<std::string> failures;
        for (auto& Y : enumerate_indecomposables(ctx.lambda())) {
            auto r = check_tau_closed_form(ctx.from_matrix_module(Y));
            if (!r.applicable)
                continue;
            ++applicable;
            CHECK(r.up_to_projective);
            if (r.ok)
                ++literal;
            else
                failures.push_back(r.failure);
        }
        CHECK(applicable > 0);
        MESSAGE("n=" << n << " applicable " << applicable << " literal " << literal);
        // over A3 the object (P2, f, I2) with coker f = S1 picks up a projective summand in A'
        CHECK(failures.size() == (n == 2 ? 0u : 1u));
    }
}

TEST_CASE("almost split sequences of maps from module sequences")
{
    for (int n : {2, 3}) {
        auto C = linear_quiver(n);
        MapsContext ctx(C);
        auto linds = enumerate_indecomposables(ctx.lambda());
        for (auto& M : enumerate_indecomposables(C)) {
            if (tau(M).is_zero())
                continue;
            auto s = almost_split_sequence(M);
            for (int v = 0; v < 4; ++v) {
                MapsSES S = ar_sequence_from_module(s, v);
                CHECK(check_maps_exact(S) == "");
                auto rep = verify_maps_almost_split(ctx, S, linds);
                std::string msg = ar_variant_name(v) + ": " + rep.failure;
                CHECK_MESSAGE(rep.ok, msg);
            }
        }
    }
}

TEST_CASE("A2 variant end terms")
{
    auto C = linear_quiver(2);
    auto s = almost_split_sequence(simple(C, 0));
    MapsSES a = ar_sequence_from_module(s, 2);
    CHECK(isomorphic(a.p.tgt.A1, simple(C, 0)));
    CHECK(a.p.tgt.A0.is_zero());
    MapsSES b = ar_sequence_from_module(s, 3);
    CHECK(b.j.src.A1.is_zero());
    CHECK(isomorphic(b.j.src.A0, simple(C, 1)));
    CHECK(isomorphic(b.p.tgt.A1, projective(C, 1)));
    CHECK(isomorphic(b.p.tgt.A0, projective(C, 0)));
    CHECK(is_mono(b.p.tgt.f));
}

TEST_CASE("Auslander algebra and Phi")
{
    auto C = linear_quiver(2);
    AuslanderData G = auslander_algebra(C);
    CHECK(G.gens.size() == 3);
    CHECK(G.alg->total_dim() == 5);
    MapsContext ctx(C);
    for (auto& Y : enumerate_indecomposables(ctx.lambda())) {
        MapsObject X = ctx.from_matrix_module(Y);
        Module P = phi_transfer(G, X);
        CHECK(check_module(P) == "");
        // Phi of (M,0,0) vanishes
        if (X.A0.is_zero())
            CHECK(P.is_zero());
    }
    Module M = projective(C, 0);
    Module P = phi_transfer(G, maps_bottom_object(M));
    std::size_t tot = 0;
    for (auto& g : G.gens)
        tot += hom_dim(g, M);
    CHECK(P.total_dim() == tot);
    (void)dv;
}
