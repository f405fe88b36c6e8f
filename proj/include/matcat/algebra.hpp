#pragma once

#include "matcat/linalg.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace matcat {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

// path is stored in traversal order: path[0] is applied first
struct PathTerm {
    Scalar coeff;
    std::vector<int> path;
};
using Relation = std::vector<PathTerm>;

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
};

struct BuildOptions {
    std::size_t dim_cap = 4000;
    std::size_t path_cap = 100000;
    bool allow_short_terms = false;
};

class PathAlgebra;
using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

class PathAlgebra : public std::enable_shared_from_this<PathAlgebra> {
public:
    const Field& field() const { return F_; }
    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const { return labels_; }
    int vertex_index(const std::string& lab) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_index(const std::string& name) const;
    const std::vector<Relation>& relations() const { return rels_; }
    int bound() const { return bound_; }

    std::size_t dim(int x, int y) const { return dims_[x * num_vertices() + y]; }
    std::size_t total_dim() const;
    const std::vector<int>& word(int x, int y, std::size_t i) const { return words_[x * num_vertices() + y][i]; }
    const std::string& basis_name(int x, int y, std::size_t i) const { return names_[x * num_vertices() + y][i]; }

    Vec zero(int x, int y) const { return Vec(dim(x, y)); }
    Vec identity(int x) const;
    Vec basis_vector(int x, int y, std::size_t i) const;
    const Vec& arrow_element(int a) const { return arrow_elem_.at(a); }

    // g o f with f in Hom(x,y), g in Hom(y,z)
    Vec compose(int x, int y, int z, const Vec& f, const Vec& g) const;
    Vec reduce_word(int x, const std::vector<int>& word, int* end = nullptr) const;
    // dim(x,z) x (dim(x,y)*dim(y,z)); column i*dim(y,z)+j holds b_j o b_i
    const Matrix& mult(int x, int y, int z) const { return mult_[(x * num_vertices() + y) * num_vertices() + z]; }

    AlgebraPtr opposite() const;
    bool structurally_equal(const PathAlgebra& o) const;
    const std::string& kind() const { return kind_; }

private:
    friend AlgebraPtr build_path_algebra(const Quiver&, const std::vector<Relation>&, int, const Field&,
                                         const BuildOptions&);
    friend struct TableBuilder;
    friend AlgebraPtr make_opposite(const PathAlgebra&);

    Field F_;
    std::string kind_;
    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> rels_;
    int bound_ = 2;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::vector<int>>> words_;
    std::vector<std::vector<std::string>> names_;
    std::vector<Matrix> mult_;
    std::vector<Vec> arrow_elem_;

    mutable std::mutex mu_;
    mutable AlgebraPtr op_;
    mutable std::weak_ptr<const PathAlgebra> back_;
};

AlgebraPtr build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, int bound, const Field& F,
                              const BuildOptions& opt = {});

// A finite category given by a multiplication table. Basis element 0 of every Hom(x,x) must be
// the identity; the remaining basis elements must span the radical. They become the arrows.
struct TableSpec {
    Field field;
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::string>> names;
    std::function<Vec(int, int, int, std::size_t, std::size_t)> product;
};
AlgebraPtr build_table_algebra(const TableSpec& spec);

std::string path_name(const PathAlgebra& A, const std::vector<int>& word);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// ---------------------------------------------------------------- bimodules

// M in Mod(U (x) T^op): spaces M(u,t), left U-action, right T-action
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(AlgebraPtr U, AlgebraPtr T);

    const AlgebraPtr& U() const { return U_; }
    const AlgebraPtr& T() const { return T_; }
    std::size_t dim(int u, int t) const { return dims_[u * T_->num_vertices() + t]; }
    const std::string& basis_name(int u, int t, std::size_t i) const { return names_[u * T_->num_vertices() + t][i]; }

    // k in Hom_U(u,u'): M(u,t) -> M(u',t)
    Matrix left(int u, int u2, int t, const Vec& k) const;
    // c in Hom_T(t2,t): M(u,t) -> M(u,t2)
    Matrix right(int u, int t, int t2, const Vec& c) const;

    void set_dim(int u, int t, std::size_t d, std::vector<std::string> names = {});
    void set_left(int u, int u2, int t, std::vector<Matrix> per_basis);
    void set_right(int u, int t, int t2, std::vector<Matrix> per_basis);
    const std::vector<Matrix>& left_table(int u, int u2, int t) const;
    const std::vector<Matrix>& right_table(int u, int t, int t2) const;

    // empty string when the axioms hold
    std::string check_axioms() const;
    std::size_t total_dim() const;

private:
    AlgebraPtr U_, T_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<Matrix>> left_;
    std::vector<std::vector<Matrix>> right_;
};

Bimodule hom_bimodule(const AlgebraPtr& C);
Bimodule zero_bimodule(const AlgebraPtr& U, const AlgebraPtr& T);

struct TriangularOptions {
    std::string t_tag = "T";
    std::string u_tag = "U";
    std::string t_arrow_suffix = "T";
    std::string u_arrow_suffix = "U";
    std::function<std::string(int, int, std::size_t)> conn_name;
};

struct TriangularAlgebra {
    AlgebraPtr alg;
    AlgebraPtr T, U;
    Bimodule M;
    std::vector<int> t_vertex, u_vertex;
    std::vector<int> t_arrow, u_arrow;
    // connecting arrow index for basis element i of M(u,t)
    std::vector<std::vector<int>> conn;
    int conn_arrow(int u, int t, std::size_t i) const { return conn[u * T->num_vertices() + t][i]; }
};

TriangularAlgebra triangular_matrix_algebra(const AlgebraPtr& T, const AlgebraPtr& U, const Bimodule& M,
                                            const TriangularOptions& opt = {});
TriangularAlgebra doubled_maps_algebra(const AlgebraPtr& C);

}  // namespace matcat
