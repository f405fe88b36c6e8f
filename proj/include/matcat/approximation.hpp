#pragma once

#include "matcat/maps.hpp"
#include "matcat/recollement.hpp"

#include <string>
#include <vector>

namespace matcat {

enum class Direction { Left, Right };
std::string direction_name(Direction d);

// one tested basis morphism and the coefficients of its factorization in the hom basis
struct FactorWitness {
    std::size_t generator = 0;
    std::size_t basis_index = 0;
    bool ok = false;
    Vec coeffs;
};

struct ApproximationCertificate {
    Direction dir = Direction::Right;
    bool ok = false;
    std::size_t tested = 0;
    std::vector<FactorWitness> witnesses;
    // empty when ok; otherwise names the generator and basis morphism that does not factor
    std::string refutation;
};

struct ModuleApproximation {
    Module obj;
    Morphism map;  // obj -> M (right) or M -> obj (left)
    ApproximationCertificate cert;
};

// right: candidate X -> M; left: candidate M -> X
ApproximationCertificate certify_approximation(const Morphism& candidate, const std::vector<Module>& gens,
                                               Direction dir);
// evaluation / coevaluation map over add(G)
ModuleApproximation approximate_addG(const Module& M, const std::vector<Module>& gens, Direction dir);

// ---------------------------------------------------------------- maps(mod C)

struct MapsApproximation {
    MapsObject obj;
    MapsMorphism map;
    ApproximationCertificate cert;
};

ApproximationCertificate certify_maps_approximation(const MapsMorphism& candidate,
                                                    const std::vector<MapsObject>& gens, Direction dir);
// indecomposable objects of maps(mod C) with f epi (mono)
std::vector<MapsObject> epi_generators(const AlgebraPtr& C);
std::vector<MapsObject> mono_generators(const AlgebraPtr& C);
std::vector<MapsObject> maps_indecomposables(const AlgebraPtr& C);

MapsApproximation approximate_epi_maps(const MapsObject& X, Direction dir, const std::vector<MapsObject>& gens);
MapsApproximation approximate_mono_maps(const MapsObject& X, Direction dir, const std::vector<MapsObject>& gens);
MapsApproximation approximate_epi_maps(const MapsObject& X, Direction dir);
MapsApproximation approximate_mono_maps(const MapsObject& X, Direction dir);

// ---------------------------------------------------------------- comma category (G(B), A)

// objects g: G(B) -> A with B over the source of G and A over its target
struct GCommaObject {
    Module B, A;
    Morphism g;
    std::string dim_string() const { return B.dim_string() + "|" + A.dim_string(); }
};
struct GCommaMorphism {
    GCommaObject src, tgt;
    Morphism lambda, phi;  // B -> B', A -> A'
};

class GComma {
public:
    explicit GComma(ModFunctor G) : G_(std::move(G)) {}
    const ModFunctor& functor() const { return G_; }
    std::string check(const GCommaObject& X) const;
    std::string check(const GCommaMorphism& m) const;
    std::vector<GCommaMorphism> hom(const GCommaObject& X, const GCommaObject& Y) const;
    GCommaMorphism compose(const GCommaMorphism& a, const GCommaMorphism& b) const;  // a o b
    // test objects (Y, f, X) with f = 0, each hom basis element and their sum
    std::vector<GCommaObject> generators(const std::vector<Module>& Ygens, const std::vector<Module>& Xgens) const;

private:
    ModFunctor G_;
};

ApproximationCertificate certify_comma_approximation(const GComma& cat, const GCommaMorphism& candidate,
                                                     const std::vector<GCommaObject>& gens, Direction dir);

struct SmaloResult {
    ModuleApproximation alpha;  // left Y-approximation of B
    Module C;                   // pushout corner
    Morphism g_prime, delta;    // G(Y_B) -> C, A -> C
    ModuleApproximation beta;   // left X-approximation of C
    GCommaObject obj;
    GCommaMorphism map;
    ApproximationCertificate cert;
    // the B-component of the approximation of (B, 0, 0) is a left Y-approximation
    ApproximationCertificate converse;
};
SmaloResult smalo_comma_approximation(const GComma& cat, const GCommaObject& X, const std::vector<Module>& Ygens,
                                      const std::vector<Module>& Xgens);

// the functor G(A)(t) = Hom_U(M_t, A) from Mod U to Mod T
ModFunctor hom_functor(const CommaSide& s);

}  // namespace matcat
