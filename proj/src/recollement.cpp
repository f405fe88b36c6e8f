#include "matcat/recollement.hpp"

#include <algorithm>
#include <sstream>

namespace matcat {

namespace {

Vec mat_vec(const Matrix& A, const Vec& v)
{
    const Field& F = A.field();
    Vec r(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (v[j] != 0)
                s = F.add(s, F.mul(A(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

std::size_t element_index(const Vec& e)
{
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            return i;
    throw Error("arrow element is zero");
}

Matrix empty_cols(const Field& F, std::size_t rows) { return Matrix(F, rows, 0); }

bool comps_identity(const Morphism& m)
{
    for (auto& c : m.comp)
        if (c.rows() != c.cols() || !c.is_identity())
            return false;
    return true;
}

std::string join_dims(const Module& X) { return X.dim_string(); }

}  // namespace

// ---------------------------------------------------------------- quotient and full subcategory

QuotientCategory quotient_category(const AlgebraPtr& C, const std::vector<int>& B)
{
    const int n = C->num_vertices();
    const Field& F = C->field();
    std::vector<bool> inB(n, false);
    for (int b : B) {
        if (b < 0 || b >= n)
            throw InputError("subcategory vertex out of range");
        inB[b] = true;
    }
    QuotientCategory Q;
    for (int x = 0; x < n; ++x)
        if (!inB[x])
            Q.vertices.push_back(x);
    Q.reps.assign(n * n, {});
    Q.proj.assign(n * n, Matrix());
    Q.ideal_dims.assign(n * n, 0);
    std::vector<Matrix> ideal(n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<Matrix> cols;
            for (int b : B)
                for (std::size_t i = 0; i < C->dim(x, b); ++i)
                    for (std::size_t j = 0; j < C->dim(b, y); ++j)
                        cols.push_back(Matrix::column(
                            F, C->compose(x, b, y, C->basis_vector(x, b, i), C->basis_vector(b, y, j))));
            Matrix I = cols.empty() ? empty_cols(F, C->dim(x, y)) : image_basis(Matrix::hstack(F, C->dim(x, y), cols));
            Q.ideal_dims[x * n + y] = I.cols();
            ideal[x * n + y] = I;
        }
    const int m = static_cast<int>(Q.vertices.size());
    TableSpec spec;
    spec.field = F;
    spec.dims.assign(m * m, 0);
    spec.names.assign(m * m, {});
    for (int k = 0; k < m; ++k)
        spec.labels.push_back(C->label(Q.vertices[k]));
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            int x = Q.vertices[k], y = Q.vertices[l];
            std::size_t d = C->dim(x, y);
            Matrix S = ideal[x * n + y];
            std::vector<std::size_t> reps;
            for (std::size_t i = 0; i < d; ++i) {
                Matrix e = Matrix::column(F, C->basis_vector(x, y, i));
                if (!in_span(S, e)) {
                    reps.push_back(i);
                    S = Matrix::hstack(F, d, {S, e});
                }
            }
            if (x == y && (reps.empty() || reps[0] != 0))
                throw Error("quotient category: identity lies in the ideal");
            std::vector<Matrix> bcols;
            for (auto i : reps)
                bcols.push_back(Matrix::column(F, C->basis_vector(x, y, i)));
            bcols.push_back(ideal[x * n + y]);
            Matrix full = Matrix::hstack(F, d, bcols);
            Matrix P(F, reps.size(), d);
            if (d > 0) {
                auto inv = inverse(full);
                if (!inv)
                    throw Error("quotient category: basis is not invertible");
                P = inv->block(0, 0, reps.size(), d);
            }
            Q.reps[x * n + y] = reps;
            Q.proj[x * n + y] = P;
            spec.dims[k * m + l] = reps.size();
            for (auto i : reps)
                spec.names[k * m + l].push_back(C->basis_name(x, y, i));
        }
    const auto verts = Q.vertices;
    const auto reps = Q.reps;
    const auto proj = Q.proj;
    spec.product = [C, verts, reps, proj, n](int k, int l, int o, std::size_t i, std::size_t j) {
        int x = verts[k], y = verts[l], z = verts[o];
        Vec v = C->compose(x, y, z, C->basis_vector(x, y, reps[x * n + y][i]),
                           C->basis_vector(y, z, reps[y * n + z][j]));
        return mat_vec(proj[x * n + z], v);
    };
    Q.alg = build_table_algebra(spec);
    return Q;
}

AlgebraPtr full_subcategory(const AlgebraPtr& C, const std::vector<int>& B)
{
    const int m = static_cast<int>(B.size());
    TableSpec spec;
    spec.field = C->field();
    spec.dims.assign(m * m, 0);
    spec.names.assign(m * m, {});
    for (int k = 0; k < m; ++k)
        spec.labels.push_back(C->label(B[k]));
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            spec.dims[k * m + l] = C->dim(B[k], B[l]);
            for (std::size_t i = 0; i < C->dim(B[k], B[l]); ++i)
                spec.names[k * m + l].push_back(C->basis_name(B[k], B[l], i));
        }
    spec.product = [C, B](int k, int l, int o, std::size_t i, std::size_t j) {
        return C->compose(B[k], B[l], B[o], C->basis_vector(B[k], B[l], i), C->basis_vector(B[l], B[o], j));
    };
    return build_table_algebra(spec);
}

// ---------------------------------------------------------------- recollement

Recollement::Recollement(AlgebraPtr C, std::vector<int> B) : C_(std::move(C)), B_(std::move(B))
{
    std::sort(B_.begin(), B_.end());
    B_.erase(std::unique(B_.begin(), B_.end()), B_.end());
    if (B_.empty() || static_cast<int>(B_.size()) >= C_->num_vertices())
        throw InputError("recollement: the subcategory must be a nonempty proper subset of the vertices");
    Q_ = quotient_category(C_, B_);
    Bal_ = full_subcategory(C_, B_);
    for (int x = 0; x < C_->num_vertices(); ++x)
        restricted_proj_.push_back(j_pull(projective(C_, x)));
}

Module Recollement::to_quotient(const Module& X) const
{
    const int n = C_->num_vertices();
    const AlgebraPtr& Q = Q_.alg;
    std::vector<std::size_t> dims;
    for (int x : Q_.vertices)
        dims.push_back(X.dim(x));
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < Q->arrows().size(); ++a) {
        const Arrow& ar = Q->arrows()[a];
        int x = Q_.vertices[ar.source], y = Q_.vertices[ar.target];
        std::size_t i = element_index(Q->arrow_element(static_cast<int>(a)));
        maps.push_back(X.act(x, y, C_->basis_vector(x, y, Q_.reps[x * n + y][i])));
    }
    return Module(Q, dims, maps);
}

Morphism Recollement::to_quotient(const Morphism& f) const
{
    Morphism r{to_quotient(f.src), to_quotient(f.tgt), {}};
    for (int x : Q_.vertices)
        r.comp.push_back(f.at(x));
    return r;
}

namespace {

SubObject pull_data(const AlgebraPtr& C, const std::vector<int>& B, const Module& X)
{
    const Field& F = C->field();
    std::vector<Matrix> gens;
    for (int x = 0; x < C->num_vertices(); ++x)
        gens.push_back(std::find(B.begin(), B.end(), x) != B.end() ? Matrix::identity(F, X.dim(x))
                                                                      : empty_cols(F, X.dim(x)));
    SubObject sub = generated_submodule(X, gens);
    return quotient(X, sub.map.comp);
}

SubObject shriek_data(const AlgebraPtr& C, const std::vector<int>& B, const Module& X)
{
    const Field& F = C->field();
    std::vector<Matrix> spaces;
    for (int x = 0; x < C->num_vertices(); ++x) {
        if (std::find(B.begin(), B.end(), x) != B.end()) {
            spaces.push_back(empty_cols(F, X.dim(x)));
            continue;
        }
        Matrix K = Matrix::identity(F, X.dim(x));
        for (int b : B)
            for (std::size_t i = 0; i < C->dim(x, b); ++i)
                K = subspace_intersection(K, kernel_basis(X.act(x, b, C->basis_vector(x, b, i))));
        spaces.push_back(K);
    }
    return submodule(X, spaces);
}

}  // namespace

Module Recollement::i_pull(const Module& X) const { return to_quotient(pull_data(C_, B_, X).obj); }

Morphism Recollement::i_pull(const Morphism& f) const
{
    SubObject q1 = pull_data(C_, B_, f.src), q2 = pull_data(C_, B_, f.tgt);
    auto g = solve_right_factor(compose(q2.map, f), q1.map);
    if (!g)
        throw Error("i^*: morphism does not descend");
    return to_quotient(*g);
}

Module Recollement::i_push(const Module& N) const
{
    const int n = C_->num_vertices();
    const Field& F = C_->field();
    std::vector<int> idx(n, -1);
    for (std::size_t k = 0; k < Q_.vertices.size(); ++k)
        idx[Q_.vertices[k]] = static_cast<int>(k);
    std::vector<std::size_t> dims(n, 0);
    for (int x = 0; x < n; ++x)
        if (idx[x] >= 0)
            dims[x] = N.dim(idx[x]);
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < C_->arrows().size(); ++a) {
        const Arrow& ar = C_->arrows()[a];
        int s = ar.source, t = ar.target;
        if (idx[s] >= 0 && idx[t] >= 0)
            maps.push_back(N.act(idx[s], idx[t], mat_vec(Q_.proj[s * n + t], C_->arrow_element(static_cast<int>(a)))));
        else
            maps.push_back(Matrix(F, dims[t], dims[s]));
    }
    return Module(C_, dims, maps);
}

Morphism Recollement::i_push(const Morphism& f) const
{
    const Field& F = C_->field();
    Morphism r{i_push(f.src), i_push(f.tgt), {}};
    std::size_t k = 0;
    for (int x = 0; x < C_->num_vertices(); ++x) {
        if (k < Q_.vertices.size() && Q_.vertices[k] == x)
            r.comp.push_back(f.at(static_cast<int>(k++)));
        else
            r.comp.push_back(Matrix(F, 0, 0));
    }
    return r;
}

Module Recollement::i_shriek(const Module& X) const { return to_quotient(shriek_data(C_, B_, X).obj); }

Morphism Recollement::i_shriek(const Morphism& f) const
{
    SubObject s1 = shriek_data(C_, B_, f.src), s2 = shriek_data(C_, B_, f.tgt);
    auto g = solve_left_factor(compose(f, s1.map), s2.map);
    if (!g)
        throw Error("i^!: morphism does not restrict");
    return to_quotient(*g);
}

Module Recollement::j_pull(const Module& X) const
{
    std::vector<std::size_t> dims;
    for (int b : B_)
        dims.push_back(X.dim(b));
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < Bal_->arrows().size(); ++a) {
        const Arrow& ar = Bal_->arrows()[a];
        int x = B_[ar.source], y = B_[ar.target];
        std::size_t i = element_index(Bal_->arrow_element(static_cast<int>(a)));
        maps.push_back(X.act(x, y, C_->basis_vector(x, y, i)));
    }
    return Module(Bal_, dims, maps);
}

Morphism Recollement::j_pull(const Morphism& f) const
{
    Morphism r{j_pull(f.src), j_pull(f.tgt), {}};
    for (int b : B_)
        r.comp.push_back(f.at(b));
    return r;
}

// j_!(N)(x) = (sum_b C(b,x) (x) N(b)) / (c d (x) n - c (x) N(d) n)
Recollement::Tensor Recollement::tensor(const Module& N) const
{
    const Field& F = C_->field();
    const int m = static_cast<int>(B_.size());
    Tensor t;
    for (int x = 0; x < C_->num_vertices(); ++x) {
        std::vector<std::size_t> off(m + 1, 0);
        for (int k = 0; k < m; ++k)
            off[k + 1] = off[k] + C_->dim(B_[k], x) * N.dim(k);
        std::size_t V = off[m];
        std::vector<Vec> rels;
        for (int k2 = 0; k2 < m; ++k2)
            for (int k = 0; k < m; ++k)
                for (std::size_t d = 0; d < C_->dim(B_[k2], B_[k]); ++d) {
                    Matrix Nd = N.act(k2, k, C_->basis_vector(B_[k2], B_[k], d));
                    for (std::size_t c = 0; c < C_->dim(B_[k], x); ++c) {
                        Vec cd = C_->compose(B_[k2], B_[k], x, C_->basis_vector(B_[k2], B_[k], d),
                                             C_->basis_vector(B_[k], x, c));
                        for (std::size_t nn = 0; nn < N.dim(k2); ++nn) {
                            Vec v(V);
                            for (std::size_t r = 0; r < cd.size(); ++r)
                                if (cd[r] != 0)
                                    v[off[k2] + r * N.dim(k2) + nn] = F.add(v[off[k2] + r * N.dim(k2) + nn], cd[r]);
                            for (std::size_t r = 0; r < N.dim(k); ++r)
                                if (Nd(r, nn) != 0) {
                                    auto& e = v[off[k] + c * N.dim(k) + r];
                                    e = F.sub(e, Nd(r, nn));
                                }
                            rels.push_back(std::move(v));
                        }
                    }
                }
        Matrix Rm(F, V, rels.size());
        for (std::size_t j = 0; j < rels.size(); ++j)
            for (std::size_t i = 0; i < V; ++i)
                Rm(i, j) = rels[j][i];
        Matrix Qm = cokernel_projection(Rm);
        t.vdims.push_back(V);
        t.Q.push_back(Qm);
        t.R.push_back(right_inverse(Qm));
    }
    return t;
}

Module Recollement::from_tensor(const Module& N, const Tensor& t) const
{
    const Field& F = C_->field();
    const int m = static_cast<int>(B_.size());
    std::vector<std::size_t> dims;
    for (auto& q : t.Q)
        dims.push_back(q.rows());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < C_->arrows().size(); ++a) {
        const Arrow& ar = C_->arrows()[a];
        int s = ar.source, u = ar.target;
        Matrix V(F, t.vdims[u], t.vdims[s]);
        std::size_t os = 0, ou = 0;
        for (int k = 0; k < m; ++k) {
            std::size_t nd = N.dim(k);
            for (std::size_t i = 0; i < C_->dim(B_[k], s); ++i) {
                Vec ac = C_->compose(B_[k], s, u, C_->basis_vector(B_[k], s, i),
                                     C_->arrow_element(static_cast<int>(a)));
                for (std::size_t j = 0; j < ac.size(); ++j)
                    if (ac[j] != 0)
                        for (std::size_t nn = 0; nn < nd; ++nn)
                            V(ou + j * nd + nn, os + i * nd + nn) = ac[j];
            }
            os += C_->dim(B_[k], s) * nd;
            ou += C_->dim(B_[k], u) * nd;
        }
        maps.push_back(t.Q[u] * V * t.R[s]);
    }
    return Module(C_, dims, maps);
}

Module Recollement::j_shriek(const Module& N) const { return from_tensor(N, tensor(N)); }

Morphism Recollement::j_shriek(const Morphism& f) const
{
    const Field& F = C_->field();
    Tensor t1 = tensor(f.src), t2 = tensor(f.tgt);
    Morphism r{from_tensor(f.src, t1), from_tensor(f.tgt, t2), {}};
    for (int x = 0; x < C_->num_vertices(); ++x) {
        std::vector<Matrix> blocks;
        for (std::size_t k = 0; k < B_.size(); ++k)
            for (std::size_t i = 0; i < C_->dim(B_[k], x); ++i)
                blocks.push_back(f.at(static_cast<int>(k)));
        Matrix V = blocks.empty() ? Matrix(F, t2.vdims[x], t1.vdims[x]) : Matrix::block_diag(F, blocks);
        r.comp.push_back(t2.Q[x] * V * t1.R[x]);
    }
    return r;
}

std::vector<std::vector<Morphism>> Recollement::push_bases(const Module& N) const
{
    std::vector<std::vector<Morphism>> H;
    for (int x = 0; x < C_->num_vertices(); ++x)
        H.push_back(hom_space(restricted_proj_[x], N));
    return H;
}

Module Recollement::from_push_bases(const Module& N, const std::vector<std::vector<Morphism>>& H) const
{
    const Field& F = C_->field();
    std::vector<std::size_t> dims;
    for (auto& h : H)
        dims.push_back(h.size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < C_->arrows().size(); ++a) {
        const Arrow& ar = C_->arrows()[a];
        int s = ar.source, t = ar.target;
        Morphism Pa = proj_morphism(C_, {t}, {s}, {{C_->arrow_element(static_cast<int>(a))}});
        Morphism jP = j_pull(Pa);
        Matrix Mx(F, H[t].size(), H[s].size());
        for (std::size_t l = 0; l < H[s].size(); ++l) {
            Vec c = hom_coordinates(H[t], compose(H[s][l], jP));
            for (std::size_t r = 0; r < c.size(); ++r)
                Mx(r, l) = c[r];
        }
        maps.push_back(Mx);
    }
    (void)N;
    return Module(C_, dims, maps);
}

Module Recollement::j_push(const Module& N) const { return from_push_bases(N, push_bases(N)); }

Morphism Recollement::j_push(const Morphism& f) const
{
    const Field& F = C_->field();
    auto H1 = push_bases(f.src), H2 = push_bases(f.tgt);
    Morphism r{from_push_bases(f.src, H1), from_push_bases(f.tgt, H2), {}};
    for (int x = 0; x < C_->num_vertices(); ++x) {
        Matrix Mx(F, H2[x].size(), H1[x].size());
        for (std::size_t l = 0; l < H1[x].size(); ++l) {
            Vec c = hom_coordinates(H2[x], compose(f, H1[x][l]));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, l) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

Morphism Recollement::unit_i_pull(const Module& X) const
{
    SubObject q = pull_data(C_, B_, X);
    return Morphism{X, i_push(to_quotient(q.obj)), q.map.comp};
}

Morphism Recollement::counit_i_pull(const Module& N) const
{
    Morphism r = identity_morphism(N);
    r.src = i_pull(i_push(N));
    return r;
}

Morphism Recollement::unit_i_shriek(const Module& N) const
{
    Morphism r = identity_morphism(N);
    r.tgt = i_shriek(i_push(N));
    return r;
}

Morphism Recollement::counit_i_shriek(const Module& X) const
{
    SubObject s = shriek_data(C_, B_, X);
    return Morphism{i_push(to_quotient(s.obj)), X, s.map.comp};
}

Morphism Recollement::unit_j_shriek(const Module& N) const
{
    const Field& F = C_->field();
    Tensor t = tensor(N);
    Morphism r{N, j_pull(from_tensor(N, t)), {}};
    for (std::size_t k = 0; k < B_.size(); ++k) {
        int x = B_[k];
        std::size_t off = 0;
        for (std::size_t k2 = 0; k2 < k; ++k2)
            off += C_->dim(B_[k2], x) * N.dim(static_cast<int>(k2));
        Matrix E(F, t.vdims[x], N.dim(static_cast<int>(k)));
        for (std::size_t nn = 0; nn < N.dim(static_cast<int>(k)); ++nn)
            E(off + nn, nn) = 1;
        r.comp.push_back(t.Q[x] * E);
    }
    return r;
}

Morphism Recollement::counit_j_shriek(const Module& X) const
{
    const Field& F = C_->field();
    Module Np = j_pull(X);
    Tensor t = tensor(Np);
    Morphism r{from_tensor(Np, t), X, {}};
    for (int x = 0; x < C_->num_vertices(); ++x) {
        std::vector<Matrix> blocks;
        for (std::size_t k = 0; k < B_.size(); ++k)
            for (std::size_t i = 0; i < C_->dim(B_[k], x); ++i)
                blocks.push_back(X.act(B_[k], x, C_->basis_vector(B_[k], x, i)));
        Matrix Phi = blocks.empty() ? Matrix(F, X.dim(x), 0) : Matrix::hstack(F, X.dim(x), blocks);
        Matrix c = Phi * t.R[x];
        if (fault == 1)
            c = c.scaled(2);
        r.comp.push_back(c);
    }
    return r;
}

Morphism Recollement::unit_j_push(const Module& X) const
{
    const Field& F = C_->field();
    Module Np = j_pull(X);
    auto H = push_bases(Np);
    Morphism r{X, from_push_bases(Np, H), {}};
    for (int x = 0; x < C_->num_vertices(); ++x) {
        Matrix Mx(F, H[x].size(), X.dim(x));
        for (std::size_t mm = 0; mm < X.dim(x); ++mm) {
            Vec e(X.dim(x));
            e[mm] = 1;
            Vec c = hom_coordinates(H[x], j_pull(yoneda_map(X, x, e)));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, mm) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

Morphism Recollement::counit_j_push(const Module& N) const
{
    const Field& F = C_->field();
    auto H = push_bases(N);
    Morphism r{j_pull(from_push_bases(N, H)), N, {}};
    for (std::size_t k = 0; k < B_.size(); ++k) {
        int x = B_[k];
        Matrix Mx(F, N.dim(static_cast<int>(k)), H[x].size());
        for (std::size_t l = 0; l < H[x].size(); ++l) {
            Matrix c = H[x][l].at(static_cast<int>(k));
            for (std::size_t i = 0; i < c.rows(); ++i)
                Mx(i, l) = c(i, 0);
        }
        r.comp.push_back(Mx);
    }
    return r;
}

ModFunctor Recollement::functor(const std::string& name) const
{
    ModFunctor F;
    F.name = name;
    if (name == "i_pull") {
        F.tgt = Q_.alg;
        F.obj = [this](const Module& X) { return i_pull(X); };
        F.mor = [this](const Morphism& f) { return i_pull(f); };
    } else if (name == "i_push") {
        F.tgt = C_;
        F.obj = [this](const Module& X) { return i_push(X); };
        F.mor = [this](const Morphism& f) { return i_push(f); };
    } else if (name == "i_shriek") {
        F.tgt = Q_.alg;
        F.obj = [this](const Module& X) { return i_shriek(X); };
        F.mor = [this](const Morphism& f) { return i_shriek(f); };
    } else if (name == "j_shriek") {
        F.tgt = C_;
        F.obj = [this](const Module& X) { return j_shriek(X); };
        F.mor = [this](const Morphism& f) { return j_shriek(f); };
    } else if (name == "j_pull") {
        F.tgt = Bal_;
        F.obj = [this](const Module& X) { return j_pull(X); };
        F.mor = [this](const Morphism& f) { return j_pull(f); };
    } else if (name == "j_push") {
        F.tgt = C_;
        F.obj = [this](const Module& X) { return j_push(X); };
        F.mor = [this](const Morphism& f) { return j_push(f); };
    } else {
        throw InputError("unknown functor " + name);
    }
    return F;
}

// ---------------------------------------------------------------- checks

bool RecollementReport::ok() const
{
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

std::string RecollementReport::failures() const
{
    std::ostringstream os;
    for (auto& c : items)
        if (!c.ok)
            os << c.name << ": " << c.detail << "\n";
    return os.str();
}

RecollementTestset default_testset(const Recollement& r)
{
    return {enumerate_indecomposables(r.quotient()), enumerate_indecomposables(r.ambient()),
            enumerate_indecomposables(r.sub())};
}

namespace {

struct Adjunction {
    std::string name;
    std::function<Module(const Module&)> Lo, Ro;
    std::function<Morphism(const Morphism&)> Lm, Rm;
    std::function<Morphism(const Module&)> unit, counit;
};

CheckItem triangle_check(const Adjunction& a, const std::vector<Module>& left_objs,
                         const std::vector<Module>& right_objs)
{
    CheckItem it{"R1 " + a.name, true, ""};
    auto fail = [&](const std::string& d) {
        if (it.ok) {
            it.ok = false;
            it.detail = d;
        }
    };
    for (std::size_t i = 0; i < left_objs.size() && it.ok; ++i) {
        const Module& X = left_objs[i];
        try {
            Morphism e = compose(a.counit(a.Lo(X)), a.Lm(a.unit(X)));
            if (!comps_identity(e))
                fail("counit o L(unit) is not the identity on object #" + std::to_string(i) + " " + join_dims(X));
        } catch (const Error& ex) {
            fail(std::string("error on object #") + std::to_string(i) + ": " + ex.what());
        }
    }
    for (std::size_t i = 0; i < right_objs.size() && it.ok; ++i) {
        const Module& Y = right_objs[i];
        try {
            Morphism e = compose(a.Rm(a.counit(Y)), a.unit(a.Ro(Y)));
            if (!comps_identity(e))
                fail("R(counit) o unit is not the identity on object #" + std::to_string(i) + " " + join_dims(Y));
        } catch (const Error& ex) {
            fail(std::string("error on object #") + std::to_string(i) + ": " + ex.what());
        }
    }
    if (it.ok)
        it.detail = std::to_string(left_objs.size()) + "+" + std::to_string(right_objs.size()) + " objects";
    return it;
}

CheckItem full_embedding_check(const std::string& name, const ModFunctor& F, const std::vector<Module>& objs)
{
    CheckItem it{"R3 " + name + " full embedding", true, ""};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < objs.size() && it.ok; ++i)
        for (std::size_t j = 0; j < objs.size() && it.ok; ++j) {
            auto H = hom_space(objs[i], objs[j]);
            Module FX = F.obj(objs[i]), FY = F.obj(objs[j]);
            std::size_t target = hom_dim(FX, FY);
            std::vector<Matrix> cols;
            std::size_t len = 0;
            for (auto& h : H) {
                Vec v = flatten(F.mor(h));
                len = v.size();
                cols.push_back(Matrix::column(FX.field(), v));
            }
            std::size_t rk = cols.empty() ? 0 : rank(Matrix::hstack(FX.field(), len, cols));
            ++pairs;
            if (rk != H.size() || H.size() != target) {
                it.ok = false;
                it.detail = "objects #" + std::to_string(i) + ", #" + std::to_string(j) + ": hom " +
                            std::to_string(H.size()) + " -> " + std::to_string(target) + " rank " + std::to_string(rk);
            }
        }
    if (it.ok)
        it.detail = std::to_string(pairs) + " pairs";
    return it;
}

}  // namespace

RecollementReport check_recollement(const Recollement& r, const RecollementTestset& t)
{
    RecollementReport rep;
    rep.header = "finite-dimensional modules only; finitely presented and all modules coincide";
    std::vector<Adjunction> adj;
    adj.push_back({"(i^*, i_*)", [&](const Module& X) { return r.i_pull(X); },
                   [&](const Module& X) { return r.i_push(X); }, [&](const Morphism& f) { return r.i_pull(f); },
                   [&](const Morphism& f) { return r.i_push(f); }, [&](const Module& X) { return r.unit_i_pull(X); },
                   [&](const Module& X) { return r.counit_i_pull(X); }});
    adj.push_back({"(i_!, i^!)", [&](const Module& X) { return r.i_push(X); },
                   [&](const Module& X) { return r.i_shriek(X); }, [&](const Morphism& f) { return r.i_push(f); },
                   [&](const Morphism& f) { return r.i_shriek(f); },
                   [&](const Module& X) { return r.unit_i_shriek(X); },
                   [&](const Module& X) { return r.counit_i_shriek(X); }});
    adj.push_back({"(j_!, j^!)", [&](const Module& X) { return r.j_shriek(X); },
                   [&](const Module& X) { return r.j_pull(X); }, [&](const Morphism& f) { return r.j_shriek(f); },
                   [&](const Morphism& f) { return r.j_pull(f); },
                   [&](const Module& X) { return r.unit_j_shriek(X); },
                   [&](const Module& X) { return r.counit_j_shriek(X); }});
    adj.push_back({"(j^*, j_*)", [&](const Module& X) { return r.j_pull(X); },
                   [&](const Module& X) { return r.j_push(X); }, [&](const Morphism& f) { return r.j_pull(f); },
                   [&](const Morphism& f) { return r.j_push(f); }, [&](const Module& X) { return r.unit_j_push(X); },
                   [&](const Module& X) { return r.counit_j_push(X); }});
    rep.items.push_back(triangle_check(adj[0], t.ambient_modules, t.quotient_modules));
    rep.items.push_back(triangle_check(adj[1], t.quotient_modules, t.ambient_modules));
    rep.items.push_back(triangle_check(adj[2], t.sub_modules, t.ambient_modules));
    rep.items.push_back(triangle_check(adj[3], t.ambient_modules, t.sub_modules));

    CheckItem r2{"R2 j^! i_* = 0", true, std::to_string(t.quotient_modules.size()) + " objects"};
    for (std::size_t i = 0; i < t.quotient_modules.size(); ++i)
        if (!r.j_pull(r.i_push(t.quotient_modules[i])).is_zero()) {
            r2.ok = false;
            r2.detail = "nonzero on object #" + std::to_string(i);
            break;
        }
    rep.items.push_back(r2);

    rep.items.push_back(full_embedding_check("i_*", r.functor("i_push"), t.quotient_modules));
    rep.items.push_back(full_embedding_check("j_!", r.functor("j_shriek"), t.sub_modules));
    rep.items.push_back(full_embedding_check("j_*", r.functor("j_push"), t.sub_modules));

    CheckItem res{"j^! j_! = id", true, ""};
    for (std::size_t i = 0; i < t.sub_modules.size(); ++i)
        if (!is_iso(r.unit_j_shriek(t.sub_modules[i]))) {
            res.ok = false;
            res.detail = "unit not invertible on object #" + std::to_string(i);
            break;
        }
    rep.items.push_back(res);

    const AlgebraPtr& C = r.ambient();
    const int n = C->num_vertices();
    const auto& Q = r.quotient_data();
    CheckItem add{"quotient dimension additivity", true, ""};
    std::size_t total = 0, qpart = 0, ipart = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            total += C->dim(x, y);
            ipart += Q.ideal_dims[x * n + y];
        }
    qpart = Q.alg->total_dim();
    if (qpart + ipart != total) {
        add.ok = false;
        add.detail = std::to_string(qpart) + " + " + std::to_string(ipart) + " != " + std::to_string(total);
    } else {
        add.detail = std::to_string(qpart) + " + " + std::to_string(ipart) + " = " + std::to_string(total);
    }
    rep.items.push_back(add);
    return rep;
}

RecollementReport check_recollement(const Recollement& r) { return check_recollement(r, default_testset(r)); }

// ---------------------------------------------------------------- bimodules

Module bimodule_column(const Bimodule& M, int t)
{
    const AlgebraPtr& U = M.U();
    std::vector<std::size_t> dims;
    for (int u = 0; u < U->num_vertices(); ++u)
        dims.push_back(M.dim(u, t));
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < U->arrows().size(); ++a) {
        const Arrow& ar = U->arrows()[a];
        maps.push_back(M.left(ar.source, ar.target, t, U->arrow_element(static_cast<int>(a))));
    }
    return Module(U, dims, maps);
}

Morphism bimodule_column_map(const Bimodule& M, int t, int t2, const Vec& c)
{
    Morphism r{bimodule_column(M, t2), bimodule_column(M, t), {}};
    for (int u = 0; u < M.U()->num_vertices(); ++u)
        r.comp.push_back(M.right(u, t2, t, c));
    return r;
}

Bimodule induce_bimodule(const ModFunctor& F, const Bimodule& M)
{
    const AlgebraPtr& T = M.T();
    const AlgebraPtr& S = F.tgt;
    const int nt = T->num_vertices(), ns = S->num_vertices();
    std::vector<Module> cols;
    for (int t = 0; t < nt; ++t)
        cols.push_back(F.obj(bimodule_column(M, t)));
    Bimodule N(S, T);
    for (int s = 0; s < ns; ++s)
        for (int t = 0; t < nt; ++t)
            N.set_dim(s, t, cols[t].dim(s));
    for (int s = 0; s < ns; ++s)
        for (int s2 = 0; s2 < ns; ++s2)
            for (int t = 0; t < nt; ++t) {
                std::vector<Matrix> tab;
                for (std::size_t k = 0; k < S->dim(s, s2); ++k)
                    tab.push_back(cols[t].act(s, s2, S->basis_vector(s, s2, k)));
                N.set_left(s, s2, t, std::move(tab));
            }
    for (int t = 0; t < nt; ++t)
        for (int t2 = 0; t2 < nt; ++t2) {
            std::vector<Morphism> images;
            for (std::size_t k = 0; k < T->dim(t2, t); ++k)
                images.push_back(F.mor(bimodule_column_map(M, t2, t, T->basis_vector(t2, t, k))));
            for (int s = 0; s < ns; ++s) {
                std::vector<Matrix> tab;
                for (auto& im : images)
                    tab.push_back(im.at(s));
                N.set_right(s, t, t2, std::move(tab));
            }
        }
    if (auto e = N.check_axioms(); !e.empty())
        throw Error("induced bimodule: " + e);
    return N;
}

Bimodule restrict_left(const Bimodule& M, const AlgebraPtr& sub, const std::vector<int>& B)
{
    const AlgebraPtr& T = M.T();
    const int m = static_cast<int>(B.size()), nt = T->num_vertices();
    Bimodule R(sub, T);
    for (int k = 0; k < m; ++k)
        for (int t = 0; t < nt; ++t) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < M.dim(B[k], t); ++i)
                names.push_back(M.basis_name(B[k], t, i));
            R.set_dim(k, t, M.dim(B[k], t), names);
        }
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            for (int t = 0; t < nt; ++t)
                R.set_left(k, l, t, M.left_table(B[k], B[l], t));
    for (int k = 0; k < m; ++k)
        for (int t = 0; t < nt; ++t)
            for (int t2 = 0; t2 < nt; ++t2)
                R.set_right(k, t, t2, M.right_table(B[k], t, t2));
    if (auto e = R.check_axioms(); !e.empty())
        throw Error("restricted bimodule: " + e);
    return R;
}

// ---------------------------------------------------------------- comma categories

CommaSide::CommaSide(Bimodule X) : X_(std::move(X))
{
    for (int t = 0; t < X_.T()->num_vertices(); ++t)
        cols_.push_back(bimodule_column(X_, t));
}

const std::vector<Morphism>& CommaSide::basis(const Module& A, int t) const
{
    for (auto& [mod, b] : cache_)
        if (modules_equal(mod, A))
            return b.at(t);
    std::vector<std::vector<Morphism>> b;
    for (auto& c : cols_)
        b.push_back(hom_space(c, A));
    cache_.emplace_back(A, std::move(b));
    return cache_.back().second.at(t);
}

Vec CommaSide::coords(const Module& A, int t, const Morphism& alpha) const
{
    return hom_coordinates(basis(A, t), alpha);
}

Module CommaSide::G(const Module& A) const
{
    const AlgebraPtr& T = X_.T();
    const Field& F = T->field();
    std::vector<std::size_t> dims;
    for (int t = 0; t < T->num_vertices(); ++t)
        dims.push_back(basis(A, t).size());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < T->arrows().size(); ++a) {
        const Arrow& ar = T->arrows()[a];
        Morphism tb = bimodule_column_map(X_, ar.source, ar.target, T->arrow_element(static_cast<int>(a)));
        const auto& Hs = basis(A, ar.source);
        Matrix Mx(F, dims[ar.target], dims[ar.source]);
        for (std::size_t l = 0; l < Hs.size(); ++l) {
            Vec c = coords(A, ar.target, matcat::compose(Hs[l], tb));
            for (std::size_t r = 0; r < c.size(); ++r)
                Mx(r, l) = c[r];
        }
        maps.push_back(Mx);
    }
    return Module(T, dims, maps);
}

Morphism CommaSide::G(const Morphism& g) const
{
    const AlgebraPtr& T = X_.T();
    const Field& F = T->field();
    Morphism r{G(g.src), G(g.tgt), {}};
    for (int t = 0; t < T->num_vertices(); ++t) {
        const auto& Hs = basis(g.src, t);
        Matrix Mx(F, r.tgt.dim(t), Hs.size());
        for (std::size_t l = 0; l < Hs.size(); ++l) {
            Vec c = coords(g.tgt, t, matcat::compose(g, Hs[l]));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, l) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

CommaObject CommaSide::object(const Module& D, const Morphism& phi, const Module& A) const { return {D, A, phi}; }

std::string CommaSide::check(const CommaObject& X) const
{
    if (auto e = check_module(X.D); !e.empty())
        return "D: " + e;
    if (auto e = check_module(X.A); !e.empty())
        return "A: " + e;
    if (!modules_equal(X.phi.src, X.D) || !modules_equal(X.phi.tgt, G(X.A)))
        return "structure map has the wrong source or target";
    return check_morphism(X.phi);
}

std::string CommaSide::check(const CommaMorphism& m) const
{
    if (auto e = check_morphism(m.f); !e.empty())
        return "f: " + e;
    if (auto e = check_morphism(m.g); !e.empty())
        return "g: " + e;
    if (!morphisms_equal(matcat::compose(G(m.g), m.src.phi), matcat::compose(m.tgt.phi, m.f)))
        return "square does not commute";
    return {};
}

std::vector<CommaMorphism> CommaSide::hom(const CommaObject& X, const CommaObject& Y) const
{
    const Field& F = X_.T()->field();
    auto HF = hom_space(X.D, Y.D);
    auto HG = hom_space(X.A, Y.A);
    Module GY = G(Y.A);
    std::size_t rows = 0;
    for (int t = 0; t < X_.T()->num_vertices(); ++t)
        rows += GY.dim(t) * X.D.dim(t);
    Matrix S(F, rows, HF.size() + HG.size());
    for (std::size_t k = 0; k < HF.size(); ++k) {
        Vec v = flatten(matcat::compose(Y.phi, HF[k]));
        for (std::size_t r = 0; r < rows; ++r)
            S(r, k) = F.neg(v[r]);
    }
    for (std::size_t l = 0; l < HG.size(); ++l) {
        Vec v = flatten(matcat::compose(G(HG[l]), X.phi));
        for (std::size_t r = 0; r < rows; ++r)
            S(r, HF.size() + l) = v[r];
    }
    Matrix K = kernel_basis(S);
    std::vector<CommaMorphism> out;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Vec v = K.col_vec(c);
        Vec a(v.begin(), v.begin() + HF.size()), b(v.begin() + HF.size(), v.end());
        out.push_back({X, Y, linear_combination(X.D, Y.D, HF, a), linear_combination(X.A, Y.A, HG, b)});
    }
    return out;
}

CommaMorphism CommaSide::identity(const CommaObject& X) const
{
    return {X, X, identity_morphism(X.D), identity_morphism(X.A)};
}

CommaMorphism CommaSide::compose(const CommaMorphism& a, const CommaMorphism& b) const
{
    return {b.src, a.tgt, matcat::compose(a.f, b.f), matcat::compose(a.g, b.g)};
}

std::vector<CommaObject> CommaSide::sample_objects(const std::vector<Module>& Ds, const std::vector<Module>& As,
                                                   std::size_t limit) const
{
    std::vector<Module> D2 = Ds, A2 = As;
    D2.push_back(zero_module(T()));
    A2.push_back(zero_module(U()));
    std::vector<CommaObject> out;
    for (auto& D : D2)
        for (auto& A : A2) {
            if (D.is_zero() && A.is_zero())
                continue;
            Module GA = G(A);
            out.push_back({D, A, zero_morphism(D, GA)});
            auto H = hom_space(D, GA);
            if (!H.empty()) {
                Morphism s = H[0];
                for (std::size_t i = 1; i < H.size(); ++i)
                    s = s + H[i];
                out.push_back({D, A, s});
            }
            if (out.size() >= limit) {
                out.resize(limit);
                return out;
            }
        }
    return out;
}

bool comma_morphisms_equal(const CommaMorphism& a, const CommaMorphism& b)
{
    return morphisms_equal(a.f, b.f) && morphisms_equal(a.g, b.g);
}

// ---------------------------------------------------------------- induced recollement

InducedRecollement::InducedRecollement(const Recollement& rec, Bimodule M) : rec_(rec), M_(std::move(M))
{
    if (!same_algebra(M_.U(), rec.sub()))
        throw InputError("induced recollement: the bimodule must be over the subcategory on the left");
    Bimodule N = induce_bimodule(rec.functor("j_shriek"), M_);
    Bimodule Np = induce_bimodule(rec.functor("j_push"), M_);
    s1_ = CommaSide(M_);
    s2_ = CommaSide(N);
    s3_ = CommaSide(Np);
    L_ = triangular_matrix_algebra(M_.T(), rec.sub(), M_);
    Ls_ = triangular_matrix_algebra(M_.T(), rec.ambient(), N);
    Lt_ = triangular_matrix_algebra(M_.T(), rec.ambient(), Np);
    for (int t = 0; t < M_.T()->num_vertices(); ++t) {
        const Module& Mt = s1_.column(t);
        unit_M_.push_back(rec.unit_j_shriek(Mt));
        auto inv = inverse_morphism(rec.counit_j_push(Mt));
        if (!inv)
            throw Error("induced recollement: counit of (j^*, j_*) is not invertible");
        counit_inv_.push_back(*inv);
    }
}

Morphism InducedRecollement::xi(const Module& A) const
{
    const Field& F = A.field();
    Module jA = rec_.j_shriek(A);
    Morphism r{s1_.G(A), s2_.G(jA), {}};
    for (int t = 0; t < M_.T()->num_vertices(); ++t) {
        const auto& H = s1_.basis(A, t);
        Matrix Mx(F, r.tgt.dim(t), H.size());
        for (std::size_t l = 0; l < H.size(); ++l) {
            Vec c = s2_.coords(jA, t, rec_.j_shriek(H[l]));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, l) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

Morphism InducedRecollement::rho(const Module& L) const
{
    const Field& F = L.field();
    Module jL = rec_.j_pull(L);
    Morphism r{s2_.G(L), s1_.G(jL), {}};
    for (int t = 0; t < M_.T()->num_vertices(); ++t) {
        const auto& H = s2_.basis(L, t);
        Matrix Mx(F, r.tgt.dim(t), H.size());
        for (std::size_t l = 0; l < H.size(); ++l) {
            Vec c = s1_.coords(jL, t, compose(rec_.j_pull(H[l]), unit_M_[t]));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, l) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

Morphism InducedRecollement::xi_r(const Module& L) const
{
    const Field& F = L.field();
    Module jL = rec_.j_pull(L);
    Morphism r{s3_.G(L), s1_.G(jL), {}};
    for (int t = 0; t < M_.T()->num_vertices(); ++t) {
        const auto& H = s3_.basis(L, t);
        Matrix Mx(F, r.tgt.dim(t), H.size());
        for (std::size_t l = 0; l < H.size(); ++l) {
            Vec c = s1_.coords(jL, t, compose(rec_.j_pull(H[l]), counit_inv_[t]));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, l) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

Morphism InducedRecollement::rho_r(const Module& A) const
{
    const Field& F = A.field();
    Module jA = rec_.j_push(A);
    Morphism r{s1_.G(A), s3_.G(jA), {}};
    for (int t = 0; t < M_.T()->num_vertices(); ++t) {
        const auto& H = s1_.basis(A, t);
        Matrix Mx(F, r.tgt.dim(t), H.size());
        for (std::size_t l = 0; l < H.size(); ++l) {
            Vec c = s3_.coords(jA, t, rec_.j_push(H[l]));
            for (std::size_t k = 0; k < c.size(); ++k)
                Mx(k, l) = c[k];
        }
        r.comp.push_back(Mx);
    }
    return r;
}

CommaObject InducedRecollement::ti_push(const Module& X) const
{
    Module L = rec_.i_push(X);
    Module GL = s2_.G(L);
    return {GL, L, identity_morphism(GL)};
}

CommaMorphism InducedRecollement::ti_push(const Morphism& h) const
{
    Morphism ih = rec_.i_push(h);
    return {ti_push(h.src), ti_push(h.tgt), s2_.G(ih), ih};
}

Module InducedRecollement::ti_pull(const CommaObject& Z) const { return rec_.i_pull(Z.A); }

Morphism InducedRecollement::ti_pull(const CommaMorphism& m) const { return rec_.i_pull(m.g); }

CommaObject InducedRecollement::tj_shriek(const CommaObject& Z) const
{
    return {Z.D, rec_.j_shriek(Z.A), compose(xi(Z.A), Z.phi)};
}

CommaMorphism InducedRecollement::tj_shriek(const CommaMorphism& m) const
{
    return {tj_shriek(m.src), tj_shriek(m.tgt), m.f, rec_.j_shriek(m.g)};
}

CommaObject InducedRecollement::tj_pull(const CommaObject& Z) const
{
    return {Z.D, rec_.j_pull(Z.A), compose(rho(Z.A), Z.phi)};
}

CommaMorphism InducedRecollement::tj_pull(const CommaMorphism& m) const
{
    return {tj_pull(m.src), tj_pull(m.tgt), m.f, rec_.j_pull(m.g)};
}

CommaObject InducedRecollement::ti_lower_shriek(const Module& X) const
{
    Module L = rec_.i_push(X);
    Module Z = zero_module(M_.T());
    return {Z, L, zero_morphism(Z, s3_.G(L))};
}

CommaMorphism InducedRecollement::ti_lower_shriek(const Morphism& h) const
{
    Module Z = zero_module(M_.T());
    return {ti_lower_shriek(h.src), ti_lower_shriek(h.tgt), identity_morphism(Z), rec_.i_push(h)};
}

Module InducedRecollement::ti_shriek(const CommaObject& Z) const { return rec_.i_shriek(Z.A); }

Morphism InducedRecollement::ti_shriek(const CommaMorphism& m) const { return rec_.i_shriek(m.g); }

CommaObject InducedRecollement::tj_upper_star(const CommaObject& Z) const
{
    return {Z.D, rec_.j_pull(Z.A), compose(xi_r(Z.A), Z.phi)};
}

CommaMorphism InducedRecollement::tj_upper_star(const CommaMorphism& m) const
{
    return {tj_upper_star(m.src), tj_upper_star(m.tgt), m.f, rec_.j_pull(m.g)};
}

CommaObject InducedRecollement::tj_push(const CommaObject& Z) const
{
    return {Z.D, rec_.j_push(Z.A), compose(rho_r(Z.A), Z.phi)};
}

CommaMorphism InducedRecollement::tj_push(const CommaMorphism& m) const
{
    return {tj_push(m.src), tj_push(m.tgt), m.f, rec_.j_push(m.g)};
}

namespace {

bool comma_identity(const CommaMorphism& m) { return comps_identity(m.f) && comps_identity(m.g); }

// generic full-embedding check between comma categories or from modules
template <class Obj, class Hom, class Img, class TgtHom>
CheckItem embedding_check(const std::string& name, const std::vector<Obj>& objs, Hom hom, Img img, TgtHom tgt_hom)
{
    CheckItem it{name, true, ""};
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < objs.size() && it.ok; ++i)
        for (std::size_t j = 0; j < objs.size() && it.ok; ++j) {
            auto H = hom(objs[i], objs[j]);
            std::vector<Vec> imgs;
            for (auto& h : H)
                imgs.push_back(img(h));
            std::size_t target = tgt_hom(objs[i], objs[j]);
            std::size_t rk = 0;
            if (!imgs.empty()) {
                const Field F = Field::rationals();
                Matrix Mx(F, imgs[0].size(), imgs.size());
                for (std::size_t c = 0; c < imgs.size(); ++c)
                    for (std::size_t r = 0; r < imgs[c].size(); ++r)
                        Mx(r, c) = imgs[c][r];
                rk = rank(Mx);
            }
            ++pairs;
            if (rk != H.size() || H.size() != target) {
                it.ok = false;
                it.detail = "objects #" + std::to_string(i) + ", #" + std::to_string(j) + ": hom " +
                            std::to_string(H.size()) + " -> " + std::to_string(target) + " rank " +
                            std::to_string(rk);
            }
        }
    if (it.ok)
        it.detail = std::to_string(pairs) + " pairs";
    return it;
}

Vec concat_vec(Vec a, const Vec& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

RecollementReport InducedRecollement::check(const InducedOptions& opt) const
{
    RecollementReport rep;
    rep.header = "comma categories (Mod T, G Mod R), (Mod T, G Mod S); " + std::to_string(opt.testset_size) +
                 "-object test sets";
    auto indT = enumerate_indecomposables(M_.T());
    auto indR = enumerate_indecomposables(rec_.sub());
    auto indS = enumerate_indecomposables(rec_.ambient());
    auto indQ = enumerate_indecomposables(rec_.quotient());
    auto t1 = s1_.sample_objects(indT, indR, opt.testset_size);
    auto t2 = s2_.sample_objects(indT, indS, opt.testset_size);
    auto t3 = s3_.sample_objects(indT, indS, opt.testset_size);

    auto item = [&](const std::string& name, auto fn) {
        CheckItem it{name, true, ""};
        try {
            std::string d = fn();
            if (!d.empty()) {
                it.ok = false;
                it.detail = d;
            }
        } catch (const Error& e) {
            it.ok = false;
            it.detail = std::string("error: ") + e.what();
        }
        rep.items.push_back(it);
    };

    // test objects must be valid
    item("test objects valid", [&]() -> std::string {
        for (auto& X : t1)
            if (auto e = s1_.check(X); !e.empty())
                return "right side: " + e;
        for (auto& X : t2)
            if (auto e = s2_.check(X); !e.empty())
                return "left middle: " + e;
        for (auto& X : t3)
            if (auto e = s3_.check(X); !e.empty())
                return "right middle: " + e;
        return {};
    });

    item("rho mono", [&]() -> std::string {
        for (std::size_t i = 0; i < indS.size(); ++i)
            if (!is_mono(rho(indS[i])))
                return "rho not mono on S-module #" + std::to_string(i) + " " + indS[i].dim_string();
        for (std::size_t i = 0; i < indR.size(); ++i)
            if (!is_mono(rho_r(indR[i])))
                return "right-side rho not mono on R-module #" + std::to_string(i);
        return {};
    });

    item("xi, rho natural", [&]() -> std::string {
        for (auto& A : indR)
            for (auto& A2 : indR)
                for (auto& g : hom_space(A, A2)) {
                    if (!morphisms_equal(compose(s2_.G(rec_.j_shriek(g)), xi(A)), compose(xi(A2), s1_.G(g))))
                        return "xi square fails";
                    if (!morphisms_equal(compose(s3_.G(rec_.j_push(g)), rho_r(A)), compose(rho_r(A2), s1_.G(g))))
                        return "right-side rho square fails";
                }
        for (auto& L : indS)
            for (auto& L2 : indS)
                for (auto& h : hom_space(L, L2)) {
                    if (!morphisms_equal(compose(s1_.G(rec_.j_pull(h)), rho(L)), compose(rho(L2), s2_.G(h))))
                        return "rho square fails";
                    if (!morphisms_equal(compose(s1_.G(rec_.j_pull(h)), xi_r(L)), compose(xi_r(L2), s3_.G(h))))
                        return "right-side xi square fails";
                }
        return {};
    });

    item("compatibility G1(eta(f)) = rho G2(f) xi", [&]() -> std::string {
        for (auto& X : indR)
            for (auto& Y : indS) {
                Module jX = rec_.j_shriek(X);
                Morphism u = rec_.unit_j_shriek(X);
                for (auto& f : hom_space(jX, Y)) {
                    Morphism eta = compose(rec_.j_pull(f), u);
                    if (!morphisms_equal(s1_.G(eta), compose(rho(Y), compose(s2_.G(f), xi(X)))))
                        return "fails for R-module " + X.dim_string() + " and S-module " + Y.dim_string();
                }
            }
        return {};
    });

    // LR1
    item("LR1 (i^*, i_*) triangle identities", [&]() -> std::string {
        for (std::size_t i = 0; i < t2.size(); ++i) {
            const auto& Z = t2[i];
            Morphism u = rec_.unit_i_pull(Z.A);
            CommaMorphism unit{Z, ti_push(ti_pull(Z)), compose(s2_.G(u), Z.phi), u};
            if (auto e = s2_.check(unit); !e.empty())
                return "unit is not a morphism on object #" + std::to_string(i) + ": " + e;
            Morphism e1 = compose(rec_.counit_i_pull(ti_pull(Z)), ti_pull(unit));
            if (!comps_identity(e1))
                return "counit o L(unit) fails on object #" + std::to_string(i);
        }
        for (std::size_t i = 0; i < indQ.size(); ++i) {
            CommaObject Y = ti_push(indQ[i]);
            Morphism u = rec_.unit_i_pull(Y.A);
            CommaMorphism unit{Y, ti_push(ti_pull(Y)), compose(s2_.G(u), Y.phi), u};
            CommaMorphism e2 = s2_.compose(ti_push(rec_.counit_i_pull(indQ[i])), unit);
            if (!comma_identity(e2))
                return "R(counit) o unit fails on quotient module #" + std::to_string(i);
        }
        return {};
    });
    item("LR1 (j_!, j^!) triangle identities", [&]() -> std::string {
        for (std::size_t i = 0; i < t1.size(); ++i) {
            const auto& Z = t1[i];
            CommaMorphism unit{Z, tj_pull(tj_shriek(Z)), identity_morphism(Z.D), rec_.unit_j_shriek(Z.A)};
            if (auto e = s1_.check(unit); !e.empty())
                return "unit is not a morphism on object #" + std::to_string(i) + ": " + e;
            CommaObject W = tj_shriek(Z);
            CommaMorphism counit{tj_shriek(tj_pull(W)), W, identity_morphism(W.D), rec_.counit_j_shriek(W.A)};
            if (!comma_identity(s2_.compose(counit, tj_shriek(unit))))
                return "counit o L(unit) fails on object #" + std::to_string(i);
        }
        for (std::size_t i = 0; i < t2.size(); ++i) {
            const auto& W = t2[i];
            CommaMorphism counit{tj_shriek(tj_pull(W)), W, identity_morphism(W.D), rec_.counit_j_shriek(W.A)};
            if (auto e = s2_.check(counit); !e.empty())
                return "counit is not a morphism on object #" + std::to_string(i) + ": " + e;
            CommaObject Z = tj_pull(W);
            CommaMorphism unit{Z, tj_pull(tj_shriek(Z)), identity_morphism(Z.D), rec_.unit_j_shriek(Z.A)};
            if (!comma_identity(s1_.compose(tj_pull(counit), unit)))
                return "R(counit) o unit fails on object #" + std::to_string(i);
        }
        return {};
    });
    item("LR2 j^! i_* = 0", [&]() -> std::string {
        for (std::size_t i = 0; i < indQ.size(); ++i)
            if (!s1_.is_zero(tj_pull(ti_push(indQ[i]))))
                return "nonzero on quotient module #" + std::to_string(i);
        return {};
    });
    rep.items.push_back(embedding_check(
        "LR3 i_* full embedding", indQ, [](const Module& X, const Module& Y) { return hom_space(X, Y); },
        [&](const Morphism& h) {
            CommaMorphism m = ti_push(h);
            return concat_vec(flatten(m.f), flatten(m.g));
        },
        [&](const Module& X, const Module& Y) { return s2_.hom(ti_push(X), ti_push(Y)).size(); }));
    rep.items.push_back(embedding_check(
        "LR3 j_! full embedding", t1, [&](const CommaObject& X, const CommaObject& Y) { return s1_.hom(X, Y); },
        [&](const CommaMorphism& h) {
            CommaMorphism m = tj_shriek(h);
            return concat_vec(flatten(m.f), flatten(m.g));
        },
        [&](const CommaObject& X, const CommaObject& Y) { return s2_.hom(tj_shriek(X), tj_shriek(Y)).size(); }));

    // RR1
    item("RR1 (i_!, i^!) triangle identities", [&]() -> std::string {
        for (std::size_t i = 0; i < indQ.size(); ++i) {
            const Module& X = indQ[i];
            CommaObject LX = ti_lower_shriek(X);
            CommaMorphism counit{ti_lower_shriek(ti_shriek(LX)), LX, identity_morphism(LX.D),
                                 rec_.counit_i_shriek(LX.A)};
            CommaMorphism e = s3_.compose(counit, ti_lower_shriek(rec_.unit_i_shriek(X)));
            if (!comma_identity(e))
                return "counit o L(unit) fails on quotient module #" + std::to_string(i);
        }
        for (std::size_t i = 0; i < t3.size(); ++i) {
            const auto& Z = t3[i];
            CommaObject LR = ti_lower_shriek(ti_shriek(Z));
            CommaMorphism counit{LR, Z, zero_morphism(LR.D, Z.D), rec_.counit_i_shriek(Z.A)};
            if (auto e = s3_.check(counit); !e.empty())
                return "counit is not a morphism on object #" + std::to_string(i) + ": " + e;
            Morphism e2 = compose(ti_shriek(counit), rec_.unit_i_shriek(ti_shriek(Z)));
            if (!comps_identity(e2))
                return "R(counit) o unit fails on object #" + std::to_string(i);
        }
        return {};
    });
    item("RR1 (j^*, j_*) triangle identities", [&]() -> std::string {
        for (std::size_t i = 0; i < t3.size(); ++i) {
            const auto& Z = t3[i];
            CommaMorphism unit{Z, tj_push(tj_upper_star(Z)), identity_morphism(Z.D), rec_.unit_j_push(Z.A)};
            if (auto e = s3_.check(unit); !e.empty())
                return "unit is not a morphism on object #" + std::to_string(i) + ": " + e;
            CommaObject W = tj_upper_star(Z);
            CommaMorphism counit{tj_upper_star(tj_push(W)), W, identity_morphism(W.D), rec_.counit_j_push(W.A)};
            if (!comma_identity(s1_.compose(counit, tj_upper_star(unit))))
                return "counit o L(unit) fails on object #" + std::to_string(i);
        }
        for (std::size_t i = 0; i < t1.size(); ++i) {
            const auto& W = t1[i];
            CommaMorphism counit{tj_upper_star(tj_push(W)), W, identity_morphism(W.D), rec_.counit_j_push(W.A)};
            if (auto e = s1_.check(counit); !e.empty())
                return "counit is not a morphism on object #" + std::to_string(i) + ": " + e;
            CommaObject Z = tj_push(W);
            CommaMorphism unit{Z, tj_push(tj_upper_star(Z)), identity_morphism(Z.D), rec_.unit_j_push(Z.A)};
            if (!comma_identity(s3_.compose(tj_push(counit), unit)))
                return "R(counit) o unit fails on object #" + std::to_string(i);
        }
        return {};
    });
    item("RR2 j^* i_! = 0", [&]() -> std::string {
        for (std::size_t i = 0; i < indQ.size(); ++i)
            if (!s1_.is_zero(tj_upper_star(ti_lower_shriek(indQ[i]))))
                return "nonzero on quotient module #" + std::to_string(i);
        return {};
    });
    rep.items.push_back(embedding_check(
        "RR3 i_! full embedding", indQ, [](const Module& X, const Module& Y) { return hom_space(X, Y); },
        [&](const Morphism& h) {
            CommaMorphism m = ti_lower_shriek(h);
            return concat_vec(flatten(m.f), flatten(m.g));
        },
        [&](const Module& X, const Module& Y) {
            return s3_.hom(ti_lower_shriek(X), ti_lower_shriek(Y)).size();
        }));
    rep.items.push_back(embedding_check(
        "RR3 j_* full embedding", t1, [&](const CommaObject& X, const CommaObject& Y) { return s1_.hom(X, Y); },
        [&](const CommaMorphism& h) {
            CommaMorphism m = tj_push(h);
            return concat_vec(flatten(m.f), flatten(m.g));
        },
        [&](const CommaObject& X, const CommaObject& Y) { return s3_.hom(tj_push(X), tj_push(Y)).size(); }));
    return rep;
}

}  // namespace matcat
