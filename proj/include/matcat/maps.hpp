#pragma once

#include "matcat/module.hpp"

#include <memory>
#include <string>
#include <vector>

namespace matcat {

// an object A1 --f--> A0 of maps(mod C)
struct MapsObject {
    Module A1, A0;
    Morphism f;
    // set when the object is literally (P(T), [1;0], P(T) + P(U))
    std::optional<std::pair<std::vector<int>, std::vector<int>>> proj_lists;

    const AlgebraPtr& alg() const { return A1.alg; }
    std::size_t total_dim() const { return A1.total_dim() + A0.total_dim(); }
    bool is_zero() const { return total_dim() == 0; }
    std::string dim_string() const { return A1.dim_string() + "->" + A0.dim_string(); }
};

struct MapsMorphism {
    MapsObject src, tgt;
    Morphism h1, h0;
};

struct MapsSES {
    MapsMorphism j, p;
};

MapsObject maps_object(const Morphism& f);
MapsObject maps_identity_object(const Module& M);        // (M, 1, M)
MapsObject maps_top_object(const Module& M);             // (M, 0, 0)
MapsObject maps_bottom_object(const Module& M);          // (0, 0, M)
std::string check_maps_object(const MapsObject& X);
std::string check_maps_morphism(const MapsMorphism& m);

MapsMorphism maps_identity(const MapsObject& X);
MapsMorphism maps_zero(const MapsObject& X, const MapsObject& Y);
MapsMorphism maps_compose(const MapsMorphism& g, const MapsMorphism& f);
bool maps_morphisms_equal(const MapsMorphism& a, const MapsMorphism& b);

std::vector<MapsMorphism> maps_hom(const MapsObject& X, const MapsObject& Y);

struct MapsDirectSum {
    MapsObject obj;
    std::vector<MapsMorphism> inj, proj;
};
MapsDirectSum maps_direct_sum(const std::vector<MapsObject>& parts);

struct MapsSub {
    MapsObject obj;
    MapsMorphism map;
};
MapsSub maps_kernel(const MapsMorphism& m);
MapsSub maps_cokernel(const MapsMorphism& m);
std::string check_maps_exact(const MapsSES& s);

// ---------------------------------------------------------------- equivalence with mod of the doubled algebra

class MapsContext {
public:
    explicit MapsContext(AlgebraPtr C);
    const AlgebraPtr& C() const { return C_; }
    const TriangularAlgebra& doubled() const { return L_; }
    const AlgebraPtr& lambda() const { return L_.alg; }

    Module to_matrix_module(const MapsObject& X) const;
    MapsObject from_matrix_module(const Module& Y) const;
    Morphism to_matrix_morphism(const MapsMorphism& m) const;
    MapsMorphism from_matrix_morphism(const Morphism& h) const;
    ShortExactSequence to_matrix_ses(const MapsSES& s) const;

private:
    AlgebraPtr C_;
    TriangularAlgebra L_;
};

// ---------------------------------------------------------------- projectives, covers, star, TR, Tau

MapsObject maps_projective(const AlgebraPtr& C, const std::vector<int>& tl, const std::vector<int>& ul);
MapsObject maps_injective_identity(const AlgebraPtr& C, int x);  // (I, 1, I)
MapsObject maps_injective_top(const AlgebraPtr& C, int x);       // (I, 0, 0)
std::vector<MapsObject> maps_projectives(const AlgebraPtr& C);
std::vector<MapsObject> maps_injectives(const AlgebraPtr& C);

// morphism between maps projectives given by the blocks a11: P(T)->P(T'), a12: P(U)->P(T'), a22: P(U)->P(U')
struct MapsProjBlocks {
    std::vector<std::vector<Vec>> a11, a12, a22;
};
MapsProjBlocks maps_proj_blocks(const MapsMorphism& m);
MapsMorphism maps_proj_morphism(const AlgebraPtr& C, const std::pair<std::vector<int>, std::vector<int>>& src,
                                const std::pair<std::vector<int>, std::vector<int>>& tgt, const MapsProjBlocks& b);
MapsMorphism maps_star(const MapsMorphism& m);

MapsMorphism maps_projective_cover(const MapsObject& X);
struct MapsPresentation {
    MapsMorphism d1, d0;
};
MapsPresentation maps_minimal_presentation(const MapsObject& X);

MapsObject maps_dual(const MapsObject& X);  // (DA0, Df, DA1) over the opposite
MapsMorphism maps_dual(const MapsMorphism& m);
MapsObject maps_TR(const MapsObject& X);
MapsObject maps_Tau(const MapsObject& X);

struct TauClosedForm {
    bool applicable = false;  // coker f nonzero and not projective
    bool ok = false;
    // A' is Tr(coker f) plus projective summands (always checked when ok is false)
    bool up_to_projective = false;
    std::string failure;
    std::vector<std::string> certificate;
};
TauClosedForm check_tau_closed_form(const MapsObject& X);

// ---------------------------------------------------------------- almost split sequences

std::string ar_variant_name(int v);
// v: 0 = 1i, 1 = 1ii, 2 = 2i, 3 = 2ii
MapsSES ar_sequence_from_module(const ShortExactSequence& s, int variant);

VerifyReport verify_maps_almost_split(const MapsContext& ctx, const MapsSES& s,
                                      const std::vector<Module>& lambda_indecomposables);

// ---------------------------------------------------------------- Auslander algebra and Phi

struct AuslanderData {
    AlgebraPtr C;
    std::vector<Module> gens;  // indecomposables of mod C
    AlgebraPtr alg;            // Hom(i,j) = Hom_C(G_j, G_i)
    // bases[i*n+j] = basis of Hom_C(G_j, G_i) in the order used by alg
    std::vector<std::vector<Morphism>> bases;
};
AuslanderData auslander_algebra(const AlgebraPtr& C);

Module phi_transfer(const AuslanderData& G, const MapsObject& X);
Morphism phi_morphism(const AuslanderData& G, const MapsMorphism& m);
ShortExactSequence phi_on_ses(const AuslanderData& G, const MapsSES& s);

}  // namespace matcat
