#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcat/approximation.hpp"
#include "matcat/builtin.hpp"

using namespace matcat;

namespace {

std::vector<Module> projectives(const AlgebraPtr& C)
{
    std::vector<Module> out;
    for (int x = 0; x < C->num_vertices(); ++x)
        out.push_back(projective(C, x));
    return out;
}

std::vector<Module> injectives(const AlgebraPtr& C)
{
    std::vector<Module> out;
    for (int x = 0; x < C->num_vertices(); ++x)
        out.push_back(injective(C, x));
    return out;
}

}  // namespace

TEST_CASE("add(G) approximations")
{
    auto C = linear_quiver(3);
    auto inds = enumerate_indecomposables(C);
    for (auto& M : inds) {
        auto r = approximate_addG(M, inds, Direction::Right);
        CHECK(r.cert.ok);
        CHECK(is_split_epi(r.map));
        auto l = approximate_addG(M, inds, Direction::Left);
        CHECK(l.cert.ok);
        CHECK(is_split_mono(l.map));
        auto p = approximate_addG(M, projectives(C), Direction::Right);
        CHECK(p.cert.ok);
        CHECK(is_epi(p.map));
        auto q = approximate_addG(M, injectives(C), Direction::Left);
        CHECK(q.cert.ok);
        CHECK(is_mono(q.map));
    }
    // the left injective approximation of S(1) over A2 factors the envelope
    auto A2 = linear_quiver(2);
    Module S1 = simple(A2, 0);
    auto l = approximate_addG(S1, injectives(A2), Direction::Left);
    REQUIRE(l.cert.ok);
    Morphism env = injective_envelope(S1);
    CHECK(solve_right_factor(env, l.map).has_value());
}

TEST_CASE("certify_approximation on trivial candidates")
{
    auto C = linear_quiver(2);
    Module M = projective(C, 0);
    auto c = certify_approximation(identity_morphism(M), {M, simple(C, 1)}, Direction::Right);
    CHECK(c.ok);
    auto bad = certify_approximation(zero_morphism(M, M), {M}, Direction::Right);
    CHECK_FALSE(bad.ok);
    CHECK(bad.refutation.find("does not factor") != std::string::npos);
    auto badl = certify_approximation(zero_morphism(M, M), {M}, Direction::Left);
    CHECK_FALSE(badl.ok);
}

TEST_CASE("epi and mono approximations over A2 and A3")
{
    for (int n : {2, 3}) {
        auto C = linear_quiver(n);
        auto all = maps_indecomposables(C);
        auto epis = epi_generators(C), monos = mono_generators(C);
        CHECK(!epis.empty());
        CHECK(!monos.empty());
        for (auto& X : all)
            for (auto d : {Direction::Left, Direction::Right}) {
                auto e = approximate_epi_maps(X, d, epis);
                INFO("n=" << n << " " << X.dim_string() << " " << direction_name(d) << " " << e.cert.refutation);
                CHECK(e.cert.ok);
                auto m = approximate_mono_maps(X, d, monos);
                INFO(m.cert.refutation);
                CHECK(m.cert.ok);
            }
    }
}

TEST_CASE("epi and mono approximation examples over A2")
{
    auto C = linear_quiver(2);
    Module S1 = simple(C, 0);
    auto r = approximate_epi_maps(maps_bottom_object(S1), Direction::Right);
    CHECK(r.obj.is_zero());
    auto l = approximate_epi_maps(maps_bottom_object(S1), Direction::Left);
    CHECK(isomorphic(l.obj.A1, projective(C, 0)));
    CHECK(l.map.h1.is_zero());
    CHECK(total_matrix(l.map.h0).is_identity());
    auto m = approximate_mono_maps(maps_top_object(S1), Direction::Left);
    CHECK(m.obj.is_zero());
    auto mr = approximate_mono_maps(maps_top_object(S1), Direction::Right);
    CHECK(isomorphic(mr.obj.A0, injective(C, 0)));
    CHECK(is_mono(mr.obj.f));
    CHECK(mr.cert.ok);
    // already epi: the image inclusion is an isomorphism
    auto id = approximate_epi_maps(maps_identity_object(projective(C, 0)), Direction::Right);
    CHECK(is_iso(id.map.h0));
    auto idm = approximate_mono_maps(maps_identity_object(projective(C, 0)), Direction::Left);
    CHECK(is_iso(idm.map.h1));
}

TEST_CASE("comma approximation by the pushout construction")
{
    auto C = linear_quiver(2);
    CommaSide s(hom_bimodule(C));
    GComma cat(hom_functor(s));
    auto indsU = enumerate_indecomposables(s.U());
    auto indsT = enumerate_indecomposables(s.T());
    std::vector<Module> Y{projective(s.U(), 0)}, X{injective(s.T(), 1)};
    std::size_t runs = 0;
    for (auto& B : indsU)
        for (auto& A : indsT) {
            Module GB = cat.functor().obj(B);
            std::vector<Morphism> gs{zero_morphism(GB, A)};
            auto H = hom_space(GB, A);
            gs.insert(gs.end(), H.begin(), H.end());
            for (auto& g : gs) {
                GCommaObject Z{B, A, g};
                REQUIRE(cat.check(Z) == "");
                auto r = smalo_comma_approximation(cat, Z, Y, X);
                INFO(Z.dim_string() << " " << r.cert.refutation << " " << r.converse.refutation);
                CHECK(cat.check(r.obj) == "");
                CHECK(r.cert.ok);
                CHECK(r.converse.ok);
                auto full = smalo_comma_approximation(cat, Z, indsU, indsT);
                CHECK(full.cert.ok);
                ++runs;
            }
        }
    CHECK(runs >= 9);

    // objects of the subcategory are approximated by their identity
    GCommaObject D{Y[0], X[0], zero_morphism(cat.functor().obj(Y[0]), X[0])};
    GCommaMorphism id{D, D, identity_morphism(D.B), identity_morphism(D.A)};
    CHECK(certify_comma_approximation(cat, id, cat.generators(Y, X), Direction::Left).ok);
    GCommaMorphism zero{D, D, zero_morphism(D.B, D.B), zero_morphism(D.A, D.A)};
    CHECK_FALSE(certify_comma_approximation(cat, zero, cat.generators(Y, X), Direction::Left).ok);
}
