#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcat/builtin.hpp"
#include "matcat/recollement.hpp"

using namespace matcat;

namespace {

std::vector<std::size_t> dv(std::initializer_list<std::size_t> l) { return l; }

Module one_dim(const AlgebraPtr& A) { return simple(A, 0); }

}  // namespace

TEST_CASE("quotient and full subcategory of A2")
{
    auto C = linear_quiver(2);
    auto Q = quotient_category(C, {1});
    REQUIRE(Q.alg->num_vertices() == 1);
    CHECK(Q.alg->dim(0, 0) == 1);
    CHECK(Q.vertices == std::vector<int>{0});
    auto B = full_subcategory(C, {1});
    CHECK(B->num_vertices() == 1);
    CHECK(B->dim(0, 0) == 1);

    // ideal through vertex 1 of A3 kills the long path only between 0 and 2
    auto C3 = linear_quiver(3);
    auto Q3 = quotient_category(C3, {1});
    REQUIRE(Q3.alg->num_vertices() == 2);
    CHECK(Q3.alg->dim(0, 1) == 0);
    CHECK(Q3.ideal_dims[0 * 3 + 2] == 1);
    std::size_t total = 0, ideal = 0;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            total += C3->dim(x, y);
            ideal += Q3.ideal_dims[x * 3 + y];
        }
    CHECK(Q3.alg->total_dim() + ideal == total);
}

TEST_CASE("functors on A2 with B = {2}")
{
    auto C = linear_quiver(2);
    Recollement r(C, {1});
    Module K = one_dim(r.sub());
    CHECK(r.j_shriek(K).dims == dv({0, 1}));
    CHECK(r.j_push(K).dims == dv({1, 1}));
    CHECK(check_module(r.j_push(K)) == "");
    CHECK(isomorphic(r.j_push(K), injective(C, 1)));
    CHECK(isomorphic(r.j_shriek(K), projective(C, 1)));
    Module S = one_dim(r.quotient());
    CHECK(isomorphic(r.i_push(S), simple(C, 0)));
    CHECK(r.j_pull(simple(C, 0)).is_zero());
    CHECK(isomorphic(r.i_pull(projective(C, 0)), S));
    CHECK(r.i_shriek(projective(C, 0)).is_zero());
    CHECK(isomorphic(r.i_shriek(injective(C, 0)), S));
}

TEST_CASE("recollement checks pass for every singleton")
{
    for (int n : {2, 3}) {
        auto C = linear_quiver(n);
        for (int b = 0; b < n; ++b) {
            Recollement r(C, {b});
            auto rep = check_recollement(r);
            INFO("A" << n << " B={" << b << "}\n" << rep.failures());
            CHECK(rep.ok());
        }
    }
    auto D = truncated_delta(2);
    Recollement r(D, {0, 2});
    auto rep = check_recollement(r);
    INFO(rep.failures());
    CHECK(rep.ok());
}

TEST_CASE("fault injection breaks a triangle identity")
{
    Recollement r(linear_quiver(2), {1});
    r.fault = 1;
    auto rep = check_recollement(r);
    CHECK_FALSE(rep.ok());
    bool found = false;
    for (auto& it : rep.items)
        if (it.name == "R1 (j_!, j^!)")
            found = !it.ok;
    CHECK(found);
}

TEST_CASE("restriction after j_! is the identity")
{
    Recollement r(linear_quiver(3), {0, 2});
    for (auto& N : enumerate_indecomposables(r.sub())) {
        Module M = r.j_pull(r.j_shriek(N));
        CHECK(is_iso(r.unit_j_shriek(N)));
        CHECK(M.dims == N.dims);
    }
}

TEST_CASE("induced bimodules")
{
    auto C = linear_quiver(2);
    Recollement r(C, {1});
    Bimodule M = restrict_left(hom_bimodule(C), r.sub(), {1});
    CHECK(M.check_axioms() == "");
    CHECK(M.dim(0, 0) == 1);
    CHECK(M.dim(0, 1) == 1);

    ModFunctor id{"id", r.sub(), [](const Module& X) { return X; }, [](const Morphism& f) { return f; }};
    Bimodule same = induce_bimodule(id, M);
    for (int t = 0; t < 2; ++t)
        CHECK(modules_equal(bimodule_column(same, t), bimodule_column(M, t)));

    Bimodule N = induce_bimodule(r.functor("j_shriek"), M);
    CHECK(N.check_axioms() == "");
    for (int t = 0; t < 2; ++t)
        CHECK(modules_equal(bimodule_column(N, t), r.j_shriek(bimodule_column(M, t))));
    CHECK(isomorphic(bimodule_column(N, 0), projective(C, 1)));
    Bimodule Np = induce_bimodule(r.functor("j_push"), M);
    CHECK(Np.check_axioms() == "");
    CHECK(isomorphic(bimodule_column(Np, 0), injective(C, 1)));
}

TEST_CASE("induced recollement on A2")
{
    auto C = linear_quiver(2);
    Recollement r(C, {1});
    Bimodule M = restrict_left(hom_bimodule(C), r.sub(), {1});
    InducedRecollement ind(r, M);
    CHECK(ind.lambda().alg->num_vertices() == 3);
    CHECK(ind.lambda_shriek().alg->num_vertices() == 4);
    auto rep = ind.check();
    INFO(rep.failures());
    CHECK(rep.ok());
    CHECK(rep.items.size() >= 12);

    Recollement r3(linear_quiver(3), {2});
    InducedRecollement ind0(r3, zero_bimodule(r3.sub(), linear_quiver(2)));
    auto rep0 = ind0.check();
    INFO(rep0.failures());
    CHECK(rep0.ok());
}

TEST_CASE("comma hom agrees with module hom over the triangular algebra")
{
    auto C = linear_quiver(2);
    Recollement r(C, {1});
    Bimodule M = restrict_left(hom_bimodule(C), r.sub(), {1});
    CommaSide s(M);
    auto objs = s.sample_objects(enumerate_indecomposables(M.T()), enumerate_indecomposables(M.U()), 20);
    CHECK(objs.size() >= 6);
    for (auto& X : objs) {
        CHECK(s.check(X) == "");
        CHECK(s.hom(X, X).size() >= 1);
        CHECK(s.check(s.identity(X)) == "");
    }
}
