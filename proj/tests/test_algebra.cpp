#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "matcat/algebra.hpp"
#include "matcat/builtin.hpp"

#include <functional>

using namespace matcat;

namespace {

// oracle: count nonzero path classes for monomial relations by explicit enumeration
std::size_t count_paths(const Quiver& q, const std::vector<std::vector<int>>& zero_paths, int bound, int x, int y)
{
    std::size_t cnt = 0;
    std::function<void(int, std::vector<int>&)> rec = [&](int v, std::vector<int>& p) {
        for (auto& z : zero_paths)
            if (p.size() >= z.size() && std::equal(z.begin(), z.end(), p.end() - z.size()))
                return;
        if (static_cast<int>(p.size()) >= bound)
            return;
        if (v == y)
            ++cnt;
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            if (q.arrows[a].source == v) {
                p.push_back(static_cast<int>(a));
                rec(q.arrows[a].target, p);
                p.pop_back();
            }
    };
    std::vector<int> p;
    rec(x, p);
    return cnt;
}

void check_associativity(const PathAlgebra& A)
{
    int n = A.num_vertices();
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (std::size_t i = 0; i < A.dim(w, x); ++i)
                        for (std::size_t j = 0; j < A.dim(x, y); ++j)
                            for (std::size_t k = 0; k < A.dim(y, z); ++k) {
                                Vec f = A.basis_vector(w, x, i), g = A.basis_vector(x, y, j),
                                    h = A.basis_vector(y, z, k);
                                Vec l = A.compose(w, y, z, A.compose(w, x, y, f, g), h);
                                Vec r = A.compose(w, x, z, f, A.compose(x, y, z, g, h));
                                REQUIRE(l == r);
                            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (std::size_t i = 0; i < A.dim(x, y); ++i) {
                Vec f = A.basis_vector(x, y, i);
                CHECK(A.compose(x, x, y, A.identity(x), f) == f);
                CHECK(A.compose(x, y, y, f, A.identity(y)) == f);
            }
}

}  // namespace

TEST_CASE("A2 dimensions")
{
    auto A = linear_quiver(2);
    CHECK(A->dim(0, 0) == 1);
    CHECK(A->dim(0, 1) == 1);
    CHECK(A->dim(1, 0) == 0);
    CHECK(A->dim(1, 1) == 1);
    CHECK(A->total_dim() == 3);
    check_associativity(*A);
}

TEST_CASE("loop with square zero")
{
    auto A = dual_numbers();
    CHECK(A->dim(0, 0) == 2);
    check_associativity(*A);
}

TEST_CASE("truncated delta hom dimensions match path enumeration")
{
    for (int n = 1; n <= 5; ++n) {
        auto A = truncated_delta(n);
        Quiver q;
        q.vertices = A->labels();
        q.arrows = A->arrows();
        std::vector<std::vector<int>> zero;
        for (int i = 1; i < n; ++i)
            zero.push_back({i - 1, i});
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                CHECK(A->dim(i, j) == count_paths(q, zero, 3, i, j));
                CHECK(A->dim(i, j) == ((j - i == 0 || j - i == 1) ? 1u : 0u));
            }
        check_associativity(*A);
    }
}

TEST_CASE("non-admissible relation rejected")
{
    Quiver q{{"1", "2"}, {{"a", 0, 1}}};
    CHECK_THROWS_AS(build_path_algebra(q, {{{Scalar(1), {0}}}}, 4, Field::rationals()), InputError);
    CHECK_THROWS_AS(build_path_algebra(q, {}, 1, Field::rationals()), InputError);
    Quiver bad{{"1", "1"}, {}};
    CHECK_THROWS_AS(build_path_algebra(bad, {}, 3, Field::rationals()), InputError);
    Quiver loops{{"1"}, {{"x", 0, 0}, {"y", 0, 0}}};
    BuildOptions opt;
    opt.dim_cap = 20;
    CHECK_THROWS_AS(build_path_algebra(loops, {}, 8, Field::rationals(), opt), DimensionError);
}

TEST_CASE("commutative square")
{
    Quiver q{{"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}}};
    // c a - d b
    auto A = build_path_algebra(q, {{{Scalar(1), {0, 2}}, {Scalar(-1), {1, 3}}}}, 4, Field::rationals());
    CHECK(A->dim(0, 3) == 1);
    CHECK(A->total_dim() == 9);
    auto B = A->opposite();
    CHECK(B->total_dim() == 9);
    check_associativity(*A);
    check_associativity(*B);
}

TEST_CASE("opposite is an involution on the same object")
{
    auto A = linear_quiver(3);
    auto B = A->opposite();
    CHECK(B->dim(1, 0) == 1);
    CHECK(B->dim(0, 1) == 0);
    CHECK(B->opposite() == A);
    CHECK(A->opposite() == B);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            CHECK(A->dim(x, y) == B->dim(y, x));
}

TEST_CASE("hom bimodule")
{
    auto A = linear_quiver(2);
    Bimodule M = hom_bimodule(A);
    CHECK(M.dim(1, 0) == 1);
    CHECK(M.dim(0, 1) == 0);
    CHECK(M.check_axioms() == "");
    CHECK(hom_bimodule(linear_quiver(3)).check_axioms() == "");
}

TEST_CASE("doubled maps algebra over A2")
{
    auto C = linear_quiver(2);
    auto L = doubled_maps_algebra(C);
    CHECK(L.alg->num_vertices() == 4);
    CHECK(L.alg->arrows().size() == 5);
    CHECK(L.alg->relations().size() == 2);
    CHECK(L.alg->total_dim() == 9);
    std::vector<std::string> names;
    for (auto& a : L.alg->arrows())
        names.push_back(a.name);
    CHECK(names == std::vector<std::string>{"(a,1)", "(a,2)", "beta_1", "gamma_a", "beta_2"});
    check_associativity(*L.alg);
}

TEST_CASE("doubled algebra of a point is A2")
{
    Quiver q{{"1"}, {}};
    auto C = build_path_algebra(q, {}, 2, Field::rationals());
    auto L = doubled_maps_algebra(C);
    CHECK(L.alg->num_vertices() == 2);
    CHECK(L.alg->total_dim() == 3);
}

TEST_CASE("triangular block formula and zero bimodule")
{
    auto T = linear_quiver(2), U = linear_quiver(3);
    auto L = triangular_matrix_algebra(T, U, zero_bimodule(U, T));
    CHECK(L.alg->total_dim() == T->total_dim() + U->total_dim());
    auto C = linear_quiver(3);
    auto D = doubled_maps_algebra(C);
    CHECK(D.alg->total_dim() == 3 * C->total_dim());
    for (int t = 0; t < 3; ++t)
        for (int u = 0; u < 3; ++u)
            CHECK(D.alg->dim(D.t_vertex[t], D.u_vertex[u]) == C->dim(t, u));
    check_associativity(*D.alg);
}

TEST_CASE("table algebra reproduces a path algebra")
{
    auto A = linear_quiver(3);
    TableSpec s;
    s.field = A->field();
    s.labels = A->labels();
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            s.dims.push_back(A->dim(x, y));
    s.product = [&](int x, int y, int z, std::size_t i, std::size_t j) {
        return A->compose(x, y, z, A->basis_vector(x, y, i), A->basis_vector(y, z, j));
    };
    auto B = build_table_algebra(s);
    CHECK(B->total_dim() == A->total_dim());
    check_associativity(*B);
}
