#pragma once

#include "matcat/module.hpp"

#include <functional>
#include <string>
#include <vector>

namespace matcat {

struct ModFunctor {
    std::string name;
    AlgebraPtr tgt;
    std::function<Module(const Module&)> obj;
    std::function<Morphism(const Morphism&)> mor;
};

// C/I_B on the objects outside B; basis classes are represented by basis elements of C
struct QuotientCategory {
    AlgebraPtr alg;
    std::vector<int> vertices;  // vertex k of alg is vertex vertices[k] of C
    // reps[x*n+y][i]: index in Hom_C of the representative of basis element i
    std::vector<std::vector<std::size_t>> reps;
    // proj[x*n+y]: coordinates of Hom_C(x,y) in the quotient basis
    std::vector<Matrix> proj;
    // dim I_B(x,y) for every pair of vertices of C
    std::vector<std::size_t> ideal_dims;
};
QuotientCategory quotient_category(const AlgebraPtr& C, const std::vector<int>& B);
// the full subcategory on B as a table algebra with the same bases
AlgebraPtr full_subcategory(const AlgebraPtr& C, const std::vector<int>& B);

// Mod(C/I_B) -> Mod(C) -> Mod(B) with
//   i_pull = i^*, i_push = i_* = i_!, i_shriek = i^!, j_shriek = j_!, j_pull = j^! = j^*, j_push = j_*
class Recollement {
public:
    Recollement(AlgebraPtr C, std::vector<int> B);

    const AlgebraPtr& ambient() const { return C_; }
    const AlgebraPtr& sub() const { return Bal_; }
    const AlgebraPtr& quotient() const { return Q_.alg; }
    const QuotientCategory& quotient_data() const { return Q_; }
    const std::vector<int>& subset() const { return B_; }

    // C-module killed by I_B, read as a C/I_B-module
    Module to_quotient(const Module& X) const;
    Morphism to_quotient(const Morphism& f) const;

    Module i_pull(const Module& X) const;
    Morphism i_pull(const Morphism& f) const;
    Module i_push(const Module& N) const;
    Morphism i_push(const Morphism& f) const;
    Module i_shriek(const Module& X) const;
    Morphism i_shriek(const Morphism& f) const;
    Module j_shriek(const Module& N) const;
    Morphism j_shriek(const Morphism& f) const;
    Module j_pull(const Module& X) const;
    Morphism j_pull(const Morphism& f) const;
    Module j_push(const Module& N) const;
    Morphism j_push(const Morphism& f) const;

    Morphism unit_i_pull(const Module& X) const;      // X -> i_* i^* X
    Morphism counit_i_pull(const Module& N) const;    // i^* i_* N -> N
    Morphism unit_i_shriek(const Module& N) const;    // N -> i^! i_* N
    Morphism counit_i_shriek(const Module& X) const;  // i_* i^! X -> X
    Morphism unit_j_shriek(const Module& N) const;    // N -> j^! j_! N
    Morphism counit_j_shriek(const Module& X) const;  // j_! j^! X -> X
    Morphism unit_j_push(const Module& X) const;      // X -> j_* j^! X
    Morphism counit_j_push(const Module& N) const;    // j^! j_* N -> N

    ModFunctor functor(const std::string& name) const;

    // fault injection for tests: 1 scales the counit of (j_!, j^!) by 2
    int fault = 0;

private:
    struct Tensor {
        std::vector<std::size_t> vdims;
        std::vector<Matrix> Q, R;
    };
    Tensor tensor(const Module& N) const;
    Module from_tensor(const Module& N, const Tensor& t) const;
    std::vector<std::vector<Morphism>> push_bases(const Module& N) const;
    Module from_push_bases(const Module& N, const std::vector<std::vector<Morphism>>& H) const;

    AlgebraPtr C_, Bal_;
    std::vector<int> B_;
    QuotientCategory Q_;
    std::vector<Module> restricted_proj_;  // j^!(P(x)) for every vertex x of C
};

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct RecollementReport {
    std::string header;
    std::vector<CheckItem> items;
    bool ok() const;
    std::string failures() const;
};

struct RecollementTestset {
    std::vector<Module> quotient_modules, ambient_modules, sub_modules;
};
RecollementTestset default_testset(const Recollement& r);
RecollementReport check_recollement(const Recollement& r, const RecollementTestset& t);
RecollementReport check_recollement(const Recollement& r);

// N(s,t) = F(M_t)(s)
Bimodule induce_bimodule(const ModFunctor& F, const Bimodule& M);
// M_t as a U-module
Module bimodule_column(const Bimodule& M, int t);
// the U-module map M_{t'} -> M_t given by c in Hom_T(t,t')
Morphism bimodule_column_map(const Bimodule& M, int t, int t2, const Vec& c);
// M restricted to the U-objects in B (U = C, T unchanged)
Bimodule restrict_left(const Bimodule& M, const AlgebraPtr& sub, const std::vector<int>& B);

// ---------------------------------------------------------------- comma categories (Mod T, G Mod U)

struct CommaObject {
    Module D;   // over T
    Module A;   // over U
    Morphism phi;  // D -> G(A)
    std::string dim_string() const { return D.dim_string() + "|" + A.dim_string(); }
};
struct CommaMorphism {
    CommaObject src, tgt;
    Morphism f, g;  // f: D -> D', g: A -> A'
};

class CommaSide {
public:
    CommaSide() = default;
    explicit CommaSide(Bimodule X);
    const Bimodule& bimodule() const { return X_; }
    const AlgebraPtr& T() const { return X_.T(); }
    const AlgebraPtr& U() const { return X_.U(); }
    const Module& column(int t) const { return cols_.at(t); }

    Module G(const Module& A) const;
    Morphism G(const Morphism& g) const;
    // coordinates of alpha: X_t -> A in the basis of G(A)(t)
    Vec coords(const Module& A, int t, const Morphism& alpha) const;
    const std::vector<Morphism>& basis(const Module& A, int t) const;

    CommaObject object(const Module& D, const Morphism& phi, const Module& A) const;
    std::string check(const CommaObject& X) const;
    std::string check(const CommaMorphism& m) const;
    std::vector<CommaMorphism> hom(const CommaObject& X, const CommaObject& Y) const;
    CommaMorphism identity(const CommaObject& X) const;
    CommaMorphism compose(const CommaMorphism& a, const CommaMorphism& b) const;  // a o b
    bool is_zero(const CommaObject& X) const { return X.D.is_zero() && X.A.is_zero(); }
    std::vector<CommaObject> sample_objects(const std::vector<Module>& Ds, const std::vector<Module>& As,
                                            std::size_t limit) const;

private:
    Bimodule X_;
    std::vector<Module> cols_;
    mutable std::vector<std::pair<Module, std::vector<std::vector<Morphism>>>> cache_;
};

bool comma_morphisms_equal(const CommaMorphism& a, const CommaMorphism& b);

struct InducedOptions {
    std::size_t testset_size = 8;
};

// Lambda = [[T,0],[M,R]], Lambda^! = [[T,0],[j_!(M),S]], Lambda^* = [[T,0],[j_*(M),S]]
class InducedRecollement {
public:
    InducedRecollement(const Recollement& rec, Bimodule M);

    const Recollement& base() const { return rec_; }
    const CommaSide& right() const { return s1_; }       // (Mod T, G1 Mod R)
    const CommaSide& left_mid() const { return s2_; }    // (Mod T, G2 Mod S), N = j_!(M)
    const CommaSide& right_mid() const { return s3_; }   // (Mod T, G3 Mod S), N' = j_*(M)
    const TriangularAlgebra& lambda() const { return L_; }
    const TriangularAlgebra& lambda_shriek() const { return Ls_; }
    const TriangularAlgebra& lambda_star() const { return Lt_; }

    Morphism xi(const Module& A) const;        // G1(A) -> G2(j_! A)
    Morphism rho(const Module& L) const;       // G2(L) -> G1(j^! L)
    Morphism xi_r(const Module& L) const;      // G3(L) -> G1(j^* L)
    Morphism rho_r(const Module& A) const;     // G1(A) -> G3(j_* A)

    // left recollement
    CommaObject ti_push(const Module& X) const;
    CommaMorphism ti_push(const Morphism& h) const;
    Module ti_pull(const CommaObject& Z) const;
    Morphism ti_pull(const CommaMorphism& m) const;
    CommaObject tj_shriek(const CommaObject& Z) const;
    CommaMorphism tj_shriek(const CommaMorphism& m) const;
    CommaObject tj_pull(const CommaObject& Z) const;
    CommaMorphism tj_pull(const CommaMorphism& m) const;
    // right recollement
    CommaObject ti_lower_shriek(const Module& X) const;
    CommaMorphism ti_lower_shriek(const Morphism& h) const;
    Module ti_shriek(const CommaObject& Z) const;
    Morphism ti_shriek(const CommaMorphism& m) const;
    CommaObject tj_upper_star(const CommaObject& Z) const;
    CommaMorphism tj_upper_star(const CommaMorphism& m) const;
    CommaObject tj_push(const CommaObject& Z) const;
    CommaMorphism tj_push(const CommaMorphism& m) const;

    RecollementReport check(const InducedOptions& opt = {}) const;

private:
    const Recollement& rec_;
    Bimodule M_;
    CommaSide s1_, s2_, s3_;
    TriangularAlgebra L_, Ls_, Lt_;
    std::vector<Morphism> unit_M_;     // M_t -> j^! j_! M_t
    std::vector<Morphism> counit_inv_; // M_t -> j^! j_* M_t
};

}  // namespace matcat
