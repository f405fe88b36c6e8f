#pragma once

#include "matcat/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace matcat {

// A finite-dimensional representation: one space per vertex, one matrix per arrow
// (dim target x dim source).
struct Module {
    AlgebraPtr alg;
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
    // set when the module is literally a direct sum of representables P(v) in this order
    std::optional<std::vector<int>> proj_summands;

    Module() = default;
    Module(AlgebraPtr A, std::vector<std::size_t> d, std::vector<Matrix> m);

    const Field& field() const { return alg->field(); }
    std::size_t dim(int x) const { return dims.at(x); }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    // the linear map X(x) -> X(y) induced by c in Hom(x,y)
    Matrix act(int x, int y, const Vec& c) const;
    Matrix act_word(int x, const std::vector<int>& word) const;
    std::string dim_string() const;
};

Module zero_module(const AlgebraPtr& A);
// empty string when valid
std::string check_module(const Module& X);
void validate_module(const Module& X);
bool modules_equal(const Module& X, const Module& Y);

struct Morphism {
    Module src, tgt;
    std::vector<Matrix> comp;

    Matrix at(int x) const { return comp.at(x); }
    bool is_zero() const;
};

Morphism identity_morphism(const Module& X);
Morphism zero_morphism(const Module& X, const Module& Y);
Morphism compose(const Morphism& g, const Morphism& f);  // g o f
Morphism operator+(const Morphism& a, const Morphism& b);
Morphism operator-(const Morphism& a, const Morphism& b);
Morphism scale(const Morphism& a, const Scalar& s);
bool morphisms_equal(const Morphism& a, const Morphism& b);
std::string check_morphism(const Morphism& f);

Vec flatten(const Morphism& f);
Morphism unflatten(const Module& X, const Module& Y, const Vec& v);
Matrix total_matrix(const Morphism& f);  // block diagonal over vertices
Morphism linear_combination(const Module& X, const Module& Y, const std::vector<Morphism>& basis, const Vec& c);

// ---------------------------------------------------------------- hom spaces and factor solvers

std::vector<Morphism> hom_space(const Module& X, const Module& Y);
std::size_t hom_dim(const Module& X, const Module& Y);

// h with p o h = f
std::optional<Morphism> solve_left_factor(const Morphism& f, const Morphism& p);
// h with h o j = f
std::optional<Morphism> solve_right_factor(const Morphism& f, const Morphism& j);
// coordinates of f in the given basis (throws if not in the span)
Vec hom_coordinates(const std::vector<Morphism>& basis, const Morphism& f);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);
std::optional<Morphism> inverse_morphism(const Morphism& f);

// ---------------------------------------------------------------- exactness

struct SubObject {
    Module obj;
    Morphism map;  // inclusion or projection
};

SubObject kernel(const Morphism& f);
SubObject cokernel(const Morphism& f);
struct ImageFactorization {
    Module obj;
    Morphism epi;   // src -> image
    Morphism mono;  // image -> tgt
};
ImageFactorization image(const Morphism& f);

struct DirectSum {
    Module obj;
    std::vector<Morphism> inj, proj;
};
DirectSum direct_sum(const std::vector<Module>& parts);
Morphism sum_map_out(const DirectSum& S, const Module& Y, const std::vector<Morphism>& comps);  // [f1 ... fn]
Morphism sum_map_in(const DirectSum& S, const Module& X, const std::vector<Morphism>& comps);   // (f1; ...; fn)

// smallest submodule containing the given per-vertex subspaces (columns)
SubObject generated_submodule(const Module& X, const std::vector<Matrix>& gens);
// submodule given by per-vertex subspaces that are already closed
SubObject submodule(const Module& X, const std::vector<Matrix>& spaces);
SubObject quotient(const Module& X, const std::vector<Matrix>& spaces);

struct Pushout {
    Module obj;
    Morphism f_prime;  // cod g -> P
    Morphism g_prime;  // cod f -> P
    DirectSum sum;      // cod f (+) cod g
    Morphism quotient;  // sum -> P
};
Pushout pushout(const Morphism& f, const Morphism& g);

struct ShortExactSequence {
    Morphism j, p;
};
std::string check_exact(const ShortExactSequence& s);

// ---------------------------------------------------------------- projectives, injectives, duality

Module projective(const AlgebraPtr& A, int x);
Module projective_sum(const AlgebraPtr& A, const std::vector<int>& vs);
Module injective(const AlgebraPtr& A, int x);
Module simple(const AlgebraPtr& A, int x);
// Yoneda: the morphism P(x) -> X sending e_x to v
Morphism yoneda_map(const Module& X, int x, const Vec& v);
// morphism between projective sums; elems[j][i] in Hom(w_j, v_i) for source P(v_i), target P(w_j)
Morphism proj_morphism(const AlgebraPtr& A, const std::vector<int>& vs, const std::vector<int>& ws,
                       const std::vector<std::vector<Vec>>& elems);
// inverse of proj_morphism; requires proj_summands on both ends
std::vector<std::vector<Vec>> proj_elements(const Morphism& h);

Module dual(const Module& X);
Morphism dual(const Morphism& f);
Morphism star(const Morphism& h);

struct Radical {
    SubObject rad;   // inclusion rad X -> X
    SubObject top;   // projection X -> top X
    SubObject soc;   // inclusion soc X -> X
};
Radical radical_top_socle(const Module& X);

Morphism projective_cover(const Module& X);
struct Presentation {
    Morphism d1;  // P1 -> P0
    Morphism d0;  // P0 -> X
    Morphism omega_incl;  // ker d0 -> P0
};
Presentation minimal_presentation(const Module& X);
// injective envelope X -> I0 built dually
Morphism injective_envelope(const Module& X);

Module transpose(const Module& X);
Module tau(const Module& X);
Module tau_inverse(const Module& X);

// ---------------------------------------------------------------- endomorphisms, decomposition

// basis of the Jacobson radical of End(X) (rationals only)
std::vector<Morphism> end_radical(const Module& X, const std::vector<Morphism>& end_basis);
bool is_local_endomorphism_ring(const Module& X);
bool is_indecomposable(const Module& X);
std::vector<Morphism> radical_hom(const Module& X, const Module& Y);

std::optional<Morphism> find_isomorphism(const Module& X, const Module& Y);
bool isomorphic(const Module& X, const Module& Y);

struct Summand {
    Module mod;
    int multiplicity = 0;
    std::vector<Morphism> inclusions;   // one per copy, into X
};
std::vector<Summand> decompose(const Module& X);
// split epi / split mono tests
bool is_split_epi(const Morphism& p);
bool is_split_mono(const Morphism& j);

// ---------------------------------------------------------------- almost split sequences

ShortExactSequence almost_split_sequence(const Module& M);

struct VerifyReport {
    bool ok = false;
    std::string failure;
    std::vector<std::string> certificate;
};
VerifyReport verify_almost_split(const ShortExactSequence& s, const std::vector<Module>& indecomposables);

struct EnumerationOptions {
    std::size_t cap = 400;
};
std::vector<Module> enumerate_indecomposables(const AlgebraPtr& A, const EnumerationOptions& opt = {});

std::vector<int> dim_vector(const Module& X);

}  // namespace matcat
