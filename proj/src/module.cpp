#include "matcat/module.hpp"

#include <sstream>

namespace matcat {

namespace {

Matrix coords_or_empty(const Field& F, const Matrix& S, const Matrix& V)
{
    if (S.cols() == 0 || V.cols() == 0)
        return Matrix(F, S.cols(), V.cols());
    return coordinates(S, V);
}

Matrix right_inverse_or_empty(const Field& F, const Matrix& Q)
{
    if (Q.rows() == 0 || Q.cols() == 0)
        return Matrix(F, Q.cols(), Q.rows());
    return right_inverse(Q);
}

void require_same(const AlgebraPtr& a, const AlgebraPtr& b, const char* what)
{
    if (!same_algebra(a, b))
        throw InputError(std::string(what) + ": modules live over different algebras");
}

}  // namespace

// ---------------------------------------------------------------- modules

Module::Module(AlgebraPtr A, std::vector<std::size_t> d, std::vector<Matrix> m)
    : alg(std::move(A)), dims(std::move(d)), maps(std::move(m))
{
}

std::size_t Module::total_dim() const
{
    std::size_t s = 0;
    for (auto d : dims)
        s += d;
    return s;
}

Matrix Module::act_word(int x, const std::vector<int>& word) const
{
    Matrix M = Matrix::identity(field(), dims[x]);
    for (int a : word)
        M = maps[a] * M;
    return M;
}

Matrix Module::act(int x, int y, const Vec& c) const
{
    const Field& F = field();
    Matrix R(F, dims[y], dims[x]);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            R = R + act_word(x, alg->word(x, y, i)).scaled(c[i]);
    return R;
}

std::string Module::dim_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dims.size(); ++i)
        os << (i ? "," : "") << dims[i];
    os << ")";
    return os.str();
}

std::vector<int> dim_vector(const Module& X)
{
    return std::vector<int>(X.dims.begin(), X.dims.end());
}

Module zero_module(const AlgebraPtr& A)
{
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A->arrows().size(); ++a)
        maps.emplace_back(A->field(), 0, 0);
    Module Z(A, std::vector<std::size_t>(A->num_vertices(), 0), std::move(maps));
    Z.proj_summands = std::vector<int>{};
    return Z;
}

std::string check_module(const Module& X)
{
    const auto& A = *X.alg;
    if (X.dims.size() != static_cast<std::size_t>(A.num_vertices()))
        return "dimension vector has wrong length";
    if (X.maps.size() != A.arrows().size())
        return "wrong number of arrow matrices";
    for (std::size_t a = 0; a < A.arrows().size(); ++a) {
        const Arrow& ar = A.arrows()[a];
        if (X.maps[a].rows() != X.dims[ar.target] || X.maps[a].cols() != X.dims[ar.source])
            return "matrix for arrow '" + ar.name + "' has the wrong shape";
    }
    const Field& F = A.field();
    for (std::size_t r = 0; r < A.relations().size(); ++r) {
        const auto& rel = A.relations()[r];
        int s = A.arrows()[rel[0].path.front()].source;
        int t = A.arrows()[rel[0].path.back()].target;
        Matrix S(F, X.dims[t], X.dims[s]);
        for (auto& term : rel)
            S = S + X.act_word(s, term.path).scaled(term.coeff);
        if (!S.is_zero())
            return "relation " + std::to_string(r) + " does not vanish";
    }
    if (A.kind() == "quiver") {
        // all paths of length bound must vanish: propagate spans of path maps
        const int n = A.num_vertices();
        std::vector<std::vector<Matrix>> span(n * n);
        for (int x = 0; x < n; ++x)
            span[x * n + x].push_back(Matrix::identity(F, X.dims[x]));
        for (int len = 0; len < A.bound(); ++len) {
            std::vector<std::vector<Matrix>> next(n * n);
            for (int x = 0; x < n; ++x)
                for (std::size_t a = 0; a < A.arrows().size(); ++a) {
                    const Arrow& ar = A.arrows()[a];
                    for (auto& m : span[x * n + ar.source])
                        next[x * n + ar.target].push_back(X.maps[a] * m);
                }
            bool any = false;
            for (int p = 0; p < n * n; ++p) {
                int y = p % n, x = p / n;
                auto& v = next[p];
                if (v.empty())
                    continue;
                std::size_t sz = X.dims[y] * X.dims[x];
                Matrix st(F, sz, v.size());
                for (std::size_t k = 0; k < v.size(); ++k)
                    for (std::size_t i = 0; i < sz; ++i)
                        st(i, k) = v[k](i / X.dims[x], i % X.dims[x]);
                Matrix b = image_basis(st);
                std::vector<Matrix> red;
                for (std::size_t k = 0; k < b.cols(); ++k) {
                    Matrix m(F, X.dims[y], X.dims[x]);
                    for (std::size_t i = 0; i < sz; ++i)
                        m(i / X.dims[x], i % X.dims[x]) = b(i, k);
                    red.push_back(std::move(m));
                }
                if (!red.empty())
                    any = true;
                v = std::move(red);
            }
            span = std::move(next);
            if (!any)
                break;
            if (len + 1 == A.bound())
                return "paths of length " + std::to_string(A.bound()) + " do not act as zero";
        }
    }
    return "";
}

void validate_module(const Module& X)
{
    std::string e = check_module(X);
    if (!e.empty())
        throw InputError("invalid module: " + e);
}

bool modules_equal(const Module& X, const Module& Y)
{
    return same_algebra(X.alg, Y.alg) && X.dims == Y.dims && X.maps == Y.maps;
}

// ---------------------------------------------------------------- morphisms

bool Morphism::is_zero() const
{
    for (auto& c : comp)
        if (!c.is_zero())
            return false;
    return true;
}

Morphism identity_morphism(const Module& X)
{
    Morphism f{X, X, {}};
    for (auto d : X.dims)
        f.comp.push_back(Matrix::identity(X.field(), d));
    return f;
}

Morphism zero_morphism(const Module& X, const Module& Y)
{
    Morphism f{X, Y, {}};
    for (std::size_t x = 0; x < X.dims.size(); ++x)
        f.comp.emplace_back(X.field(), Y.dims[x], X.dims[x]);
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f)
{
    if (f.tgt.dims != g.src.dims)
        throw DimensionError("compose: morphisms are not composable");
    Morphism h{f.src, g.tgt, {}};
    for (std::size_t x = 0; x < f.comp.size(); ++x)
        h.comp.push_back(g.comp[x] * f.comp[x]);
    return h;
}

Morphism operator+(const Morphism& a, const Morphism& b)
{
    Morphism h{a.src, a.tgt, {}};
    for (std::size_t x = 0; x < a.comp.size(); ++x)
        h.comp.push_back(a.comp[x] + b.comp[x]);
    return h;
}

Morphism operator-(const Morphism& a, const Morphism& b)
{
    Morphism h{a.src, a.tgt, {}};
    for (std::size_t x = 0; x < a.comp.size(); ++x)
        h.comp.push_back(a.comp[x] - b.comp[x]);
    return h;
}

Morphism scale(const Morphism& a, const Scalar& s)
{
    Morphism h{a.src, a.tgt, {}};
    for (auto& c : a.comp)
        h.comp.push_back(c.scaled(s));
    return h;
}

bool morphisms_equal(const Morphism& a, const Morphism& b)
{
    return a.src.dims == b.src.dims && a.tgt.dims == b.tgt.dims && a.comp == b.comp;
}

std::string check_morphism(const Morphism& f)
{
    const auto& A = *f.src.alg;
    if (!same_algebra(f.src.alg, f.tgt.alg))
        return "source and target over different algebras";
    if (f.comp.size() != f.src.dims.size())
        return "wrong number of components";
    for (std::size_t x = 0; x < f.comp.size(); ++x)
        if (f.comp[x].rows() != f.tgt.dims[x] || f.comp[x].cols() != f.src.dims[x])
            return "component at " + A.label(static_cast<int>(x)) + " has the wrong shape";
    for (std::size_t a = 0; a < A.arrows().size(); ++a) {
        const Arrow& ar = A.arrows()[a];
        if (f.comp[ar.target] * f.src.maps[a] != f.tgt.maps[a] * f.comp[ar.source])
            return "square for arrow '" + ar.name + "' does not commute";
    }
    return "";
}

Vec flatten(const Morphism& f)
{
    Vec v;
    for (auto& c : f.comp)
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                v.push_back(c(i, j));
    return v;
}

Morphism unflatten(const Module& X, const Module& Y, const Vec& v)
{
    Morphism f{X, Y, {}};
    std::size_t k = 0;
    for (std::size_t x = 0; x < X.dims.size(); ++x) {
        Matrix c(X.field(), Y.dims[x], X.dims[x]);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j)
                c(i, j) = v.at(k++);
        f.comp.push_back(std::move(c));
    }
    return f;
}

Matrix total_matrix(const Morphism& f) { return Matrix::block_diag(f.src.field(), f.comp); }

Morphism linear_combination(const Module& X, const Module& Y, const std::vector<Morphism>& basis, const Vec& c)
{
    Morphism h = zero_morphism(X, Y);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (c.at(k) != 0)
            h = h + scale(basis[k], c[k]);
    return h;
}

// ---------------------------------------------------------------- hom systems

namespace {

// unknowns: entries of h_x (row-major), x in vertex order
struct HomSystem {
    const Module& X;
    const Module& Y;
    std::vector<std::size_t> off;
    std::size_t n = 0;
    std::vector<Vec> rows;
    Vec rhs;

    HomSystem(const Module& X_, const Module& Y_) : X(X_), Y(Y_)
    {
        for (std::size_t x = 0; x < X.dims.size(); ++x) {
            off.push_back(n);
            n += X.dims[x] * Y.dims[x];
        }
    }
    std::size_t idx(int x, std::size_t r, std::size_t c) const { return off[x] + r * X.dims[x] + c; }

    void add_squares()
    {
        const Field& F = X.field();
        const auto& A = *X.alg;
        for (std::size_t a = 0; a < A.arrows().size(); ++a) {
            int s = A.arrows()[a].source, t = A.arrows()[a].target;
            const Matrix& Xa = X.maps[a];
            const Matrix& Ya = Y.maps[a];
            // (h_t Xa - Ya h_s)(r,c)
            for (std::size_t r = 0; r < Y.dims[t]; ++r)
                for (std::size_t c = 0; c < X.dims[s]; ++c) {
                    Vec row(n);
                    bool nz = false;
                    for (std::size_t k = 0; k < X.dims[t]; ++k)
                        if (Xa(k, c) != 0) {
                            row[idx(t, r, k)] = F.add(row[idx(t, r, k)], Xa(k, c));
                            nz = true;
                        }
                    for (std::size_t k = 0; k < Y.dims[s]; ++k)
                        if (Ya(r, k) != 0) {
                            row[idx(s, k, c)] = F.sub(row[idx(s, k, c)], Ya(r, k));
                            nz = true;
                        }
                    if (nz) {
                        rows.push_back(std::move(row));
                        rhs.push_back(0);
                    }
                }
        }
    }

    Matrix matrix() const
    {
        Matrix M(X.field(), rows.size(), n);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                M(i, j) = rows[i][j];
        return M;
    }

    std::optional<Vec> solve() const
    {
        Matrix M = matrix();
        Matrix b(X.field(), rows.size(), 1);
        for (std::size_t i = 0; i < rows.size(); ++i)
            b(i, 0) = rhs[i];
        auto s = solve_linear(M, b);
        if (!s)
            return std::nullopt;
        return s->col_vec(0);
    }
};

}  // namespace

std::vector<Morphism> hom_space(const Module& X, const Module& Y)
{
    require_same(X.alg, Y.alg, "hom_space");
    HomSystem S(X, Y);
    S.add_squares();
    Matrix K = kernel_basis(S.matrix());
    std::vector<Morphism> out;
    for (std::size_t k = 0; k < K.cols(); ++k)
        out.push_back(unflatten(X, Y, K.col_vec(k)));
    return out;
}

std::size_t hom_dim(const Module& X, const Module& Y)
{
    require_same(X.alg, Y.alg, "hom_dim");
    HomSystem S(X, Y);
    S.add_squares();
    return S.n - rank(S.matrix());
}

std::optional<Morphism> solve_left_factor(const Morphism& f, const Morphism& p)
{
    // unknown h: Z -> B with p o h = f
    const Module& Z = f.src;
    const Module& B = p.src;
    if (f.tgt.dims != p.tgt.dims)
        throw DimensionError("solve_left_factor: targets differ");
    const Field& F = Z.field();
    HomSystem S(Z, B);
    S.add_squares();
    for (std::size_t x = 0; x < Z.dims.size(); ++x) {
        const Matrix& px = p.comp[x];
        for (std::size_t r = 0; r < px.rows(); ++r)
            for (std::size_t c = 0; c < Z.dims[x]; ++c) {
                Vec row(S.n);
                for (std::size_t k = 0; k < B.dims[x]; ++k)
                    if (px(r, k) != 0)
                        row[S.idx(static_cast<int>(x), k, c)] = px(r, k);
                S.rows.push_back(std::move(row));
                S.rhs.push_back(f.comp[x](r, c));
            }
    }
    (void)F;
    auto v = S.solve();
    if (!v)
        return std::nullopt;
    return unflatten(Z, B, *v);
}

std::optional<Morphism> solve_right_factor(const Morphism& f, const Morphism& j)
{
    // unknown h: B -> Z with h o j = f
    const Module& Z = f.tgt;
    const Module& B = j.tgt;
    if (f.src.dims != j.src.dims)
        throw DimensionError("solve_right_factor: sources differ");
    HomSystem S(B, Z);
    S.add_squares();
    for (std::size_t x = 0; x < B.dims.size(); ++x) {
        const Matrix& jx = j.comp[x];
        for (std::size_t r = 0; r < Z.dims[x]; ++r)
            for (std::size_t c = 0; c < jx.cols(); ++c) {
                Vec row(S.n);
                for (std::size_t k = 0; k < B.dims[x]; ++k)
                    if (jx(k, c) != 0)
                        row[S.idx(static_cast<int>(x), r, k)] = jx(k, c);
                S.rows.push_back(std::move(row));
                S.rhs.push_back(f.comp[x](r, c));
            }
    }
    auto v = S.solve();
    if (!v)
        return std::nullopt;
    return unflatten(B, Z, *v);
}

Vec hom_coordinates(const std::vector<Morphism>& basis, const Morphism& f)
{
    const Field& F = f.src.field();
    Vec fv = flatten(f);
    if (basis.empty()) {
        for (auto& e : fv)
            if (e != 0)
                throw DimensionError("hom_coordinates: morphism not in span");
        return {};
    }
    Matrix M(F, fv.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Vec b = flatten(basis[k]);
        for (std::size_t i = 0; i < b.size(); ++i)
            M(i, k) = b[i];
    }
    return coordinates(M, Matrix::column(F, fv)).col_vec(0);
}

bool is_mono(const Morphism& f)
{
    for (std::size_t x = 0; x < f.comp.size(); ++x)
        if (rank(f.comp[x]) != f.src.dims[x])
            return false;
    return true;
}

bool is_epi(const Morphism& f)
{
    for (std::size_t x = 0; x < f.comp.size(); ++x)
        if (rank(f.comp[x]) != f.tgt.dims[x])
            return false;
    return true;
}

bool is_iso(const Morphism& f) { return f.src.dims == f.tgt.dims && is_mono(f); }

std::optional<Morphism> inverse_morphism(const Morphism& f)
{
    if (!is_iso(f))
        return std::nullopt;
    Morphism g{f.tgt, f.src, {}};
    for (auto& c : f.comp) {
        if (c.rows() == 0) {
            g.comp.emplace_back(f.src.field(), 0, 0);
            continue;
        }
        g.comp.push_back(*inverse(c));
    }
    return g;
}

// ---------------------------------------------------------------- kernels, cokernels, images

SubObject submodule(const Module& X, const std::vector<Matrix>& spaces_in)
{
    const Field& F = X.field();
    const auto& A = *X.alg;
    std::vector<Matrix> S;
    for (std::size_t x = 0; x < spaces_in.size(); ++x)
        S.push_back(spaces_in[x].cols() ? image_basis(spaces_in[x]) : Matrix(F, X.dims[x], 0));
    std::vector<std::size_t> d;
    for (auto& s : S)
        d.push_back(s.cols());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A.arrows().size(); ++a) {
        const Arrow& ar = A.arrows()[a];
        maps.push_back(coords_or_empty(F, S[ar.target], X.maps[a] * S[ar.source]));
    }
    Module K(X.alg, d, maps);
    return {K, Morphism{K, X, S}};
}

SubObject generated_submodule(const Module& X, const std::vector<Matrix>& gens)
{
    const Field& F = X.field();
    const auto& A = *X.alg;
    std::vector<Matrix> S;
    for (std::size_t x = 0; x < gens.size(); ++x)
        S.push_back(gens[x].cols() ? image_basis(gens[x]) : Matrix(F, X.dims[x], 0));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < A.arrows().size(); ++a) {
            const Arrow& ar = A.arrows()[a];
            if (S[ar.source].cols() == 0)
                continue;
            Matrix img = X.maps[a] * S[ar.source];
            Matrix joined = image_basis(Matrix::hstack(F, X.dims[ar.target], {S[ar.target], img}));
            if (joined.cols() != S[ar.target].cols()) {
                S[ar.target] = joined;
                changed = true;
            }
        }
    }
    return submodule(X, S);
}

SubObject quotient(const Module& X, const std::vector<Matrix>& spaces)
{
    const Field& F = X.field();
    const auto& A = *X.alg;
    std::vector<Matrix> Q, R;
    for (std::size_t x = 0; x < X.dims.size(); ++x) {
        Matrix q = spaces[x].cols() ? cokernel_projection(spaces[x]) : Matrix::identity(F, X.dims[x]);
        R.push_back(right_inverse_or_empty(F, q));
        Q.push_back(std::move(q));
    }
    std::vector<std::size_t> d;
    for (auto& q : Q)
        d.push_back(q.rows());
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A.arrows().size(); ++a) {
        const Arrow& ar = A.arrows()[a];
        maps.push_back(Q[ar.target] * X.maps[a] * R[ar.source]);
    }
    Module C(X.alg, d, maps);
    return {C, Morphism{X, C, Q}};
}

SubObject kernel(const Morphism& f)
{
    std::vector<Matrix> S;
    for (auto& c : f.comp)
        S.push_back(kernel_basis(c));
    return submodule(f.src, S);
}

SubObject cokernel(const Morphism& f)
{
    std::vector<Matrix> S;
    for (auto& c : f.comp)
        S.push_back(c);
    return quotient(f.tgt, S);
}

ImageFactorization image(const Morphism& f)
{
    std::vector<Matrix> S;
    for (auto& c : f.comp)
        S.push_back(c);
    SubObject I = submodule(f.tgt, S);
    Morphism epi{f.src, I.obj, {}};
    for (std::size_t x = 0; x < f.comp.size(); ++x)
        epi.comp.push_back(coords_or_empty(f.src.field(), I.map.comp[x], f.comp[x]));
    return {I.obj, epi, I.map};
}

DirectSum direct_sum(const std::vector<Module>& parts)
{
    if (parts.empty())
        throw InputError("direct_sum: empty list");
    const AlgebraPtr& A = parts[0].alg;
    const Field& F = A->field();
    const int n = A->num_vertices();
    DirectSum S;
    std::vector<std::size_t> d(n, 0);
    for (auto& p : parts) {
        require_same(A, p.alg, "direct_sum");
        for (int x = 0; x < n; ++x)
            d[x] += p.dims[x];
    }
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A->arrows().size(); ++a) {
        std::vector<Matrix> bl;
        for (auto& p : parts)
            bl.push_back(p.maps[a]);
        maps.push_back(Matrix::block_diag(F, bl));
    }
    S.obj = Module(A, d, maps);
    bool all_proj = true;
    std::vector<int> ps;
    for (auto& p : parts) {
        if (!p.proj_summands) {
            all_proj = false;
            break;
        }
        ps.insert(ps.end(), p.proj_summands->begin(), p.proj_summands->end());
    }
    if (all_proj)
        S.obj.proj_summands = ps;
    std::vector<std::size_t> off(n, 0);
    for (auto& p : parts) {
        Morphism i{p, S.obj, {}}, q{S.obj, p, {}};
        for (int x = 0; x < n; ++x) {
            Matrix in(F, d[x], p.dims[x]);
            for (std::size_t k = 0; k < p.dims[x]; ++k)
                in(off[x] + k, k) = 1;
            q.comp.push_back(in.transpose());
            i.comp.push_back(std::move(in));
            off[x] += p.dims[x];
        }
        S.inj.push_back(std::move(i));
        S.proj.push_back(std::move(q));
    }
    return S;
}

Morphism sum_map_out(const DirectSum& S, const Module& Y, const std::vector<Morphism>& comps)
{
    Morphism h = zero_morphism(S.obj, Y);
    for (std::size_t k = 0; k < comps.size(); ++k)
        h = h + compose(comps[k], S.proj[k]);
    return h;
}

Morphism sum_map_in(const DirectSum& S, const Module& X, const std::vector<Morphism>& comps)
{
    Morphism h = zero_morphism(X, S.obj);
    for (std::size_t k = 0; k < comps.size(); ++k)
        h = h + compose(S.inj[k], comps[k]);
    return h;
}

Pushout pushout(const Morphism& f, const Morphism& g)
{
    if (f.src.dims != g.src.dims)
        throw DimensionError("pushout: maps do not share a domain");
    DirectSum S = direct_sum({f.tgt, g.tgt});
    Morphism st = sum_map_in(S, f.src, {f, scale(g, -1)});
    SubObject C = cokernel(st);
    Pushout P;
    P.obj = C.obj;
    P.g_prime = compose(C.map, S.inj[0]);
    P.f_prime = compose(C.map, S.inj[1]);
    P.sum = S;
    P.quotient = C.map;
    return P;
}

std::string check_exact(const ShortExactSequence& s)
{
    std::string e = check_morphism(s.j);
    if (!e.empty())
        return "first map: " + e;
    e = check_morphism(s.p);
    if (!e.empty())
        return "second map: " + e;
    if (s.j.tgt.dims != s.p.src.dims)
        return "maps are not composable";
    if (!compose(s.p, s.j).is_zero())
        return "composite is not zero";
    if (!is_mono(s.j))
        return "first map is not a monomorphism";
    if (!is_epi(s.p))
        return "second map is not an epimorphism";
    for (std::size_t x = 0; x < s.j.src.dims.size(); ++x)
        if (s.j.src.dims[x] + s.p.tgt.dims[x] != s.j.tgt.dims[x])
            return "not exact in the middle";
    return "";
}

// ---------------------------------------------------------------- projectives and duality

Module projective(const AlgebraPtr& A, int x)
{
    const int n = A->num_vertices();
    std::vector<std::size_t> d;
    for (int y = 0; y < n; ++y)
        d.push_back(A->dim(x, y));
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < A->arrows().size(); ++a) {
        int y = A->arrows()[a].source, z = A->arrows()[a].target;
        Matrix M(A->field(), d[z], d[y]);
        for (std::size_t i = 0; i < d[y]; ++i) {
            Vec r = A->compose(x, y, z, A->basis_vector(x, y, i), A->arrow_element(static_cast<int>(a)));
            for (std::size_t k = 0; k < r.size(); ++k)
                M(k, i) = r[k];
        }
        maps.push_back(std::move(M));
    }
    Module P(A, d, maps);
    P.proj_summands = std::vector<int>{x};
    return P;
}

Module projective_sum(const AlgebraPtr& A, const std::vector<int>& vs)
{
    if (vs.empty())
        return zero_module(A);
    std::vector<Module> parts;
    for (int v : vs)
        parts.push_back(projective(A, v));
    return direct_sum(parts).obj;
}

Module injective(const AlgebraPtr& A, int x) { return dual(projective(A->opposite(), x)); }

Module simple(const AlgebraPtr& A, int x)
{
    std::vector<std::size_t> d(A->num_vertices(), 0);
    d[x] = 1;
    std::vector<Matrix> maps;
    for (auto& ar : A->arrows())
        maps.emplace_back(A->field(), d[ar.target], d[ar.source]);
    return Module(A, d, maps);
}

Morphism yoneda_map(const Module& X, int x, const Vec& v)
{
    const auto& A = X.alg;
    Module P = projective(A, x);
    Morphism f{P, X, {}};
    Matrix col = Matrix::column(X.field(), v);
    for (int y = 0; y < A->num_vertices(); ++y) {
        Matrix c(X.field(), X.dims[y], P.dims[y]);
        for (std::size_t i = 0; i < P.dims[y]; ++i)
            c.set_block(0, i, X.act(x, y, A->basis_vector(x, y, i)) * col);
        f.comp.push_back(std::move(c));
    }
    return f;
}

Morphism proj_morphism(const AlgebraPtr& A, const std::vector<int>& vs, const std::vector<int>& ws,
                       const std::vector<std::vector<Vec>>& elems)
{
    Module P = projective_sum(A, vs), Q = projective_sum(A, ws);
    const int n = A->num_vertices();
    const Field& F = A->field();
    Morphism h = zero_morphism(P, Q);
    for (int y = 0; y < n; ++y) {
        std::size_t ro = 0;
        for (std::size_t j = 0; j < ws.size(); ++j) {
            std::size_t co = 0;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                const Vec& c = elems.at(j).at(i);
                if (c.size() != A->dim(ws[j], vs[i]))
                    throw DimensionError("proj_morphism: element has the wrong size");
                for (std::size_t b = 0; b < A->dim(vs[i], y); ++b) {
                    Vec r = A->compose(ws[j], vs[i], y, c, A->basis_vector(vs[i], y, b));
                    for (std::size_t k = 0; k < r.size(); ++k)
                        h.comp[y](ro + k, co + b) = r[k];
                }
                co += A->dim(vs[i], y);
            }
            ro += A->dim(ws[j], y);
        }
    }
    (void)F;
    return h;
}

std::vector<std::vector<Vec>> proj_elements(const Morphism& h)
{
    if (!h.src.proj_summands || !h.tgt.proj_summands)
        throw InputError("morphism is not between stored sums of projectives");
    const auto& A = h.src.alg;
    const auto& vs = *h.src.proj_summands;
    const auto& ws = *h.tgt.proj_summands;
    std::vector<std::vector<Vec>> out(ws.size(), std::vector<Vec>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        std::size_t co = 0;
        for (std::size_t i2 = 0; i2 < i; ++i2)
            co += A->dim(vs[i2], v);
        std::size_t ro = 0;
        for (std::size_t j = 0; j < ws.size(); ++j) {
            Vec e(A->dim(ws[j], v));
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = h.comp[v](ro + k, co);
            out[j][i] = std::move(e);
            ro += A->dim(ws[j], v);
        }
    }
    return out;
}

Module dual(const Module& X)
{
    std::vector<Matrix> maps;
    for (auto& m : X.maps)
        maps.push_back(m.transpose());
    return Module(X.alg->opposite(), X.dims, maps);
}

Morphism dual(const Morphism& f)
{
    Morphism g{dual(f.tgt), dual(f.src), {}};
    for (auto& c : f.comp)
        g.comp.push_back(c.transpose());
    return g;
}

Morphism star(const Morphism& h)
{
    auto el = proj_elements(h);
    const auto& vs = *h.src.proj_summands;
    const auto& ws = *h.tgt.proj_summands;
    std::vector<std::vector<Vec>> t(vs.size(), std::vector<Vec>(ws.size()));
    for (std::size_t j = 0; j < ws.size(); ++j)
        for (std::size_t i = 0; i < vs.size(); ++i)
            t[i][j] = el[j][i];
    return proj_morphism(h.src.alg->opposite(), ws, vs, t);
}

Radical radical_top_socle(const Module& X)
{
    const auto& A = *X.alg;
    const Field& F = X.field();
    const int n = A.num_vertices();
    std::vector<Matrix> rad, soc;
    for (int y = 0; y < n; ++y) {
        std::vector<Matrix> in, out;
        for (std::size_t a = 0; a < A.arrows().size(); ++a) {
            if (A.arrows()[a].target == y)
                in.push_back(X.maps[a]);
            if (A.arrows()[a].source == y)
                out.push_back(X.maps[a]);
        }
        rad.push_back(in.empty() ? Matrix(F, X.dims[y], 0) : Matrix::hstack(F, X.dims[y], in));
        soc.push_back(out.empty() ? Matrix::identity(F, X.dims[y]) : kernel_basis(Matrix::vstack(F, X.dims[y], out)));
    }
    Radical R;
    R.rad = submodule(X, rad);
    R.top = quotient(X, R.rad.map.comp);
    R.soc = submodule(X, soc);
    return R;
}

Morphism projective_cover(const Module& X)
{
    const auto& A = X.alg;
    const Field& F = X.field();
    const int n = A->num_vertices();
    Radical R = radical_top_socle(X);
    std::vector<int> vs;
    std::vector<Vec> vecs;
    for (int x = 0; x < n; ++x) {
        Matrix C = complement_basis(R.rad.map.comp[x]);
        for (std::size_t k = 0; k < C.cols(); ++k) {
            vs.push_back(x);
            vecs.push_back(C.col_vec(k));
        }
    }
    Module P = projective_sum(A, vs);
    Morphism f = zero_morphism(P, X);
    std::vector<std::size_t> off(n, 0);
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Morphism y = yoneda_map(X, vs[k], vecs[k]);
        for (int z = 0; z < n; ++z) {
            f.comp[z].set_block(0, off[z], y.comp[z]);
            off[z] += y.comp[z].cols();
        }
    }
    (void)F;
    return f;
}

Presentation minimal_presentation(const Module& X)
{
    Presentation P;
    P.d0 = projective_cover(X);
    SubObject K = kernel(P.d0);
    K.map.tgt = P.d0.src;
    Morphism c1 = projective_cover(K.obj);
    P.d1 = compose(K.map, c1);
    P.omega_incl = K.map;
    return P;
}

Morphism injective_envelope(const Module& X)
{
    Module DX = dual(X);
    Morphism c = projective_cover(DX);
    Morphism e = dual(c);
    e.src = X;
    return e;
}

Module transpose(const Module& X)
{
    Presentation P = minimal_presentation(X);
    return cokernel(star(P.d1)).obj;
}

Module tau(const Module& X) { return dual(transpose(X)); }

Module tau_inverse(const Module& X) { return transpose(dual(X)); }

}  // namespace matcat
