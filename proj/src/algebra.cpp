#include "matcat/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace matcat {

int PathAlgebra::vertex_index(const std::string& lab) const
{
    for (int i = 0; i < num_vertices(); ++i)
        if (labels_[i] == lab)
            return i;
    throw InputError("unknown vertex '" + lab + "'");
}

int PathAlgebra::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name)
            return static_cast<int>(i);
    throw InputError("unknown arrow '" + name + "'");
}

std::size_t PathAlgebra::total_dim() const
{
    std::size_t s = 0;
    for (auto d : dims_)
        s += d;
    return s;
}

Vec PathAlgebra::identity(int x) const
{
    Vec v(dim(x, x));
    v.at(0) = 1;
    return v;
}

Vec PathAlgebra::basis_vector(int x, int y, std::size_t i) const
{
    Vec v(dim(x, y));
    v.at(i) = 1;
    return v;
}

Vec PathAlgebra::compose(int x, int y, int z, const Vec& f, const Vec& g) const
{
    std::size_t dxy = dim(x, y), dyz = dim(y, z), dxz = dim(x, z);
    if (f.size() != dxy || g.size() != dyz)
        throw DimensionError("compose: element size mismatch");
    Vec r(dxz);
    const Matrix& T = mult(x, y, z);
    for (std::size_t i = 0; i < dxy; ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; j < dyz; ++j) {
            if (g[j] == 0)
                continue;
            Scalar c = F_.mul(f[i], g[j]);
            for (std::size_t k = 0; k < dxz; ++k)
                if (T(k, i * dyz + j) != 0)
                    r[k] = F_.add(r[k], F_.mul(c, T(k, i * dyz + j)));
        }
    }
    return r;
}

Vec PathAlgebra::reduce_word(int x, const std::vector<int>& word, int* end) const
{
    int cur = x;
    Vec v = identity(x);
    for (int a : word) {
        const Arrow& ar = arrows_.at(a);
        if (ar.source != cur)
            throw InputError("word is not a path");
        v = compose(x, cur, ar.target, v, arrow_elem_[a]);
        cur = ar.target;
    }
    if (end)
        *end = cur;
    return v;
}

std::string path_name(const PathAlgebra& A, const std::vector<int>& word)
{
    if (word.empty())
        return "";
    std::string s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!s.empty())
            s += "*";
        s += A.arrows()[*it].name;
    }
    return s;
}

bool PathAlgebra::structurally_equal(const PathAlgebra& o) const
{
    if (F_ != o.F_ || labels_ != o.labels_ || dims_ != o.dims_ || arrows_.size() != o.arrows_.size())
        return false;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].name != o.arrows_[a].name || arrows_[a].source != o.arrows_[a].source ||
            arrows_[a].target != o.arrows_[a].target || arrow_elem_[a] != o.arrow_elem_[a])
            return false;
    }
    return mult_ == o.mult_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && a->structurally_equal(*b));
}

// ---------------------------------------------------------------- path algebra construction

namespace {

struct PairIdeal {
    std::vector<std::vector<int>> paths;
    std::map<std::vector<int>, std::size_t> index;
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
};

bool path_less_for_columns(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size())
        return a.size() > b.size();
    return a < b;
}

}  // namespace

AlgebraPtr build_path_algebra(const Quiver& q, const std::vector<Relation>& rels, int bound, const Field& F,
                              const BuildOptions& opt)
{
    const int n = static_cast<int>(q.vertices.size());
    if (bound < 2)
        throw InputError("nilpotency bound must be at least 2");
    {
        std::set<std::string> seen;
        for (auto& v : q.vertices)
            if (!seen.insert(v).second)
                throw InputError("duplicate vertex label '" + v + "'");
        std::set<std::string> an;
        for (auto& a : q.arrows) {
            if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
                throw InputError("arrow '" + a.name + "' has an undeclared endpoint");
            if (!an.insert(a.name).second)
                throw InputError("duplicate arrow name '" + a.name + "'");
        }
    }
    auto endpoints = [&](const std::vector<int>& p, int& s, int& t) {
        if (p.empty())
            throw InputError("relation term with empty path");
        for (int a : p)
            if (a < 0 || a >= static_cast<int>(q.arrows.size()))
                throw InputError("relation references an unknown arrow");
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            if (q.arrows[p[k]].target != q.arrows[p[k + 1]].source)
                throw InputError("relation term is not a path");
        s = q.arrows[p.front()].source;
        t = q.arrows[p.back()].target;
    };
    std::vector<int> rel_src(rels.size()), rel_tgt(rels.size());
    for (std::size_t r = 0; r < rels.size(); ++r) {
        if (rels[r].empty())
            throw InputError("empty relation");
        for (std::size_t k = 0; k < rels[r].size(); ++k) {
            int s, t;
            endpoints(rels[r][k].path, s, t);
            if (!opt.allow_short_terms && rels[r][k].path.size() < 2)
                throw InputError("relation term of length < 2 is not admissible");
            if (k == 0) {
                rel_src[r] = s;
                rel_tgt[r] = t;
            } else if (s != rel_src[r] || t != rel_tgt[r]) {
                throw InputError("relation terms do not share source and target");
            }
        }
    }

    // enumerate paths of length < bound
    std::vector<PairIdeal> pairs(n * n);
    std::size_t npaths = 0;
    std::vector<std::vector<int>> out_arrows(n), in_arrows(n);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        out_arrows[q.arrows[a].source].push_back(static_cast<int>(a));
        in_arrows[q.arrows[a].target].push_back(static_cast<int>(a));
    }
    for (int x = 0; x < n; ++x) {
        std::vector<std::pair<std::vector<int>, int>> frontier{{{}, x}};
        for (int len = 0; len < bound && !frontier.empty(); ++len) {
            std::vector<std::pair<std::vector<int>, int>> next;
            for (auto& [p, end] : frontier) {
                pairs[x * n + end].paths.push_back(p);
                if (++npaths > opt.path_cap)
                    throw DimensionError("path enumeration exceeds the configured cap");
                if (len + 1 < bound)
                    for (int a : out_arrows[end]) {
                        auto p2 = p;
                        p2.push_back(a);
                        next.emplace_back(std::move(p2), q.arrows[a].target);
                    }
            }
            frontier = std::move(next);
        }
    }
    for (auto& pi : pairs) {
        std::sort(pi.paths.begin(), pi.paths.end(), path_less_for_columns);
        for (std::size_t i = 0; i < pi.paths.size(); ++i)
            pi.index[pi.paths[i]] = i;
    }

    // two-sided ideal closure
    std::vector<std::pair<int, Vec>> work;
    auto insert = [&](int pair, Vec v) {
        PairIdeal& P = pairs[pair];
        for (std::size_t r = 0; r < P.rows.size(); ++r) {
            std::size_t p = P.pivots[r];
            if (v[p] == 0)
                continue;
            Scalar f = v[p];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (P.rows[r][j] != 0)
                    F.axpy_sub(v[j], f, P.rows[r][j]);
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0)
            ++p;
        if (p == v.size())
            return;
        Scalar iv = F.inv(v[p]);
        for (auto& e : v)
            if (e != 0)
                e = F.mul(e, iv);
        for (auto& row : P.rows) {
            if (row[p] == 0)
                continue;
            Scalar f = row[p];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (v[j] != 0)
                    F.axpy_sub(row[j], f, v[j]);
        }
        auto pos = std::lower_bound(P.pivots.begin(), P.pivots.end(), p) - P.pivots.begin();
        P.pivots.insert(P.pivots.begin() + pos, p);
        P.rows.insert(P.rows.begin() + pos, v);
        work.emplace_back(pair, std::move(v));
    };
    for (std::size_t r = 0; r < rels.size(); ++r) {
        int pair = rel_src[r] * n + rel_tgt[r];
        Vec v(pairs[pair].paths.size());
        for (auto& t : rels[r]) {
            if (static_cast<int>(t.path.size()) >= bound)
                continue;
            auto it = pairs[pair].index.find(t.path);
            v[it->second] = F.add(v[it->second], F.norm(t.coeff));
        }
        insert(pair, std::move(v));
    }
    while (!work.empty()) {
        auto [pair, v] = std::move(work.back());
        work.pop_back();
        int x = pair / n, y = pair % n;
        const PairIdeal& P = pairs[pair];
        for (int a : out_arrows[y]) {
            int z = q.arrows[a].target;
            PairIdeal& Q = pairs[x * n + z];
            Vec w(Q.paths.size());
            bool nz = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0 || static_cast<int>(P.paths[i].size()) + 1 >= bound)
                    continue;
                auto p2 = P.paths[i];
                p2.push_back(a);
                w[Q.index.at(p2)] = v[i];
                nz = true;
            }
            if (nz)
                insert(x * n + z, std::move(w));
        }
        for (int b : in_arrows[x]) {
            int w0 = q.arrows[b].source;
            PairIdeal& Q = pairs[w0 * n + y];
            Vec w(Q.paths.size());
            bool nz = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0 || static_cast<int>(P.paths[i].size()) + 1 >= bound)
                    continue;
                std::vector<int> p2{b};
                p2.insert(p2.end(), P.paths[i].begin(), P.paths[i].end());
                w[Q.index.at(p2)] = v[i];
                nz = true;
            }
            if (nz)
                insert(w0 * n + y, std::move(w));
        }
    }

    auto A = std::make_shared<PathAlgebra>();
    A->F_ = F;
    A->kind_ = "quiver";
    A->labels_ = q.vertices;
    A->arrows_ = q.arrows;
    A->rels_ = rels;
    for (auto& r : A->rels_)
        for (auto& t : r)
            t.coeff = F.norm(t.coeff);
    A->bound_ = bound;
    A->dims_.assign(n * n, 0);
    A->words_.assign(n * n, {});
    A->names_.assign(n * n, {});

    // basis and reduction maps
    std::vector<std::vector<Vec>> reduction(n * n);
    std::size_t total = 0;
    for (int pr = 0; pr < n * n; ++pr) {
        PairIdeal& P = pairs[pr];
        std::vector<bool> is_piv(P.paths.size(), false);
        for (auto p : P.pivots)
            is_piv[p] = true;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < P.paths.size(); ++j)
            if (!is_piv[j])
                free.push_back(j);
        std::sort(free.begin(), free.end(), [&](std::size_t a, std::size_t b) {
            const auto& pa = P.paths[a];
            const auto& pb = P.paths[b];
            if (pa.size() != pb.size())
                return pa.size() < pb.size();
            return pa < pb;
        });
        std::vector<std::size_t> pos(P.paths.size(), 0);
        for (std::size_t k = 0; k < free.size(); ++k)
            pos[free[k]] = k;
        A->dims_[pr] = free.size();
        total += free.size();
        if (total > opt.dim_cap)
            throw DimensionError("algebra dimension exceeds the configured cap of " + std::to_string(opt.dim_cap));
        for (auto j : free)
            A->words_[pr].push_back(P.paths[j]);
        auto& red = reduction[pr];
        red.assign(P.paths.size(), Vec(free.size()));
        for (auto j : free)
            red[j][pos[j]] = 1;
        for (std::size_t r = 0; r < P.rows.size(); ++r) {
            Vec c(free.size());
            for (auto j : free)
                if (P.rows[r][j] != 0)
                    c[pos[j]] = F.neg(P.rows[r][j]);
            red[P.pivots[r]] = std::move(c);
        }
    }
    for (int pr = 0; pr < n * n; ++pr)
        for (auto& w : A->words_[pr]) {
            std::string nm = path_name(*A, w);
            A->names_[pr].push_back(nm.empty() ? "e_" + q.vertices[pr / n] : nm);
        }

    A->mult_.assign(static_cast<std::size_t>(n) * n * n, Matrix());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::size_t dxy = A->dims_[x * n + y], dyz = A->dims_[y * n + z], dxz = A->dims_[x * n + z];
                Matrix T(F, dxz, dxy * dyz);
                for (std::size_t i = 0; i < dxy; ++i)
                    for (std::size_t j = 0; j < dyz; ++j) {
                        auto p = A->words_[x * n + y][i];
                        const auto& p2 = A->words_[y * n + z][j];
                        p.insert(p.end(), p2.begin(), p2.end());
                        if (static_cast<int>(p.size()) >= bound)
                            continue;
                        const PairIdeal& P = pairs[x * n + z];
                        const Vec& c = reduction[x * n + z][P.index.at(p)];
                        for (std::size_t k = 0; k < dxz; ++k)
                            T(k, i * dyz + j) = c[k];
                    }
                A->mult_[(x * n + y) * n + z] = std::move(T);
            }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        int pr = q.arrows[a].source * n + q.arrows[a].target;
        A->arrow_elem_.push_back(reduction[pr][pairs[pr].index.at({static_cast<int>(a)})]);
    }
    return A;
}

// ---------------------------------------------------------------- table algebras

struct TableBuilder {
    static AlgebraPtr build(const TableSpec& s)
    {
        const int n = static_cast<int>(s.labels.size());
        const Field& F = s.field;
        auto A = std::make_shared<PathAlgebra>();
        A->F_ = F;
        A->kind_ = "table";
        A->labels_ = s.labels;
        A->dims_ = s.dims;
        A->words_.assign(n * n, {});
        A->names_ = s.names;
        if (A->names_.size() != static_cast<std::size_t>(n * n))
            A->names_.assign(n * n, {});
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto& nm = A->names_[x * n + y];
                for (std::size_t i = nm.size(); i < s.dims[x * n + y]; ++i)
                    nm.push_back("m" + std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(i));
            }
        std::vector<std::vector<int>> arrow_of(n * n);
        for (int x = 0; x < n; ++x) {
            if (s.dims[x * n + x] == 0)
                throw InputError("table algebra: object without identity");
            for (int y = 0; y < n; ++y) {
                std::size_t d = s.dims[x * n + y];
                arrow_of[x * n + y].assign(d, -1);
                for (std::size_t i = 0; i < d; ++i) {
                    if (x == y && i == 0) {
                        A->words_[x * n + y].push_back({});
                        continue;
                    }
                    int a = static_cast<int>(A->arrows_.size());
                    A->arrows_.push_back({A->names_[x * n + y][i], x, y});
                    Vec e(d);
                    e[i] = 1;
                    A->arrow_elem_.push_back(e);
                    A->words_[x * n + y].push_back({a});
                    arrow_of[x * n + y][i] = a;
                }
            }
        }
        A->mult_.assign(static_cast<std::size_t>(n) * n * n, Matrix());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    std::size_t dxy = s.dims[x * n + y], dyz = s.dims[y * n + z], dxz = s.dims[x * n + z];
                    Matrix T(F, dxz, dxy * dyz);
                    for (std::size_t i = 0; i < dxy; ++i)
                        for (std::size_t j = 0; j < dyz; ++j) {
                            Vec c;
                            if (x == y && i == 0) {
                                c.assign(dxz, 0);
                                c[j] = 1;
                            } else if (y == z && j == 0) {
                                c.assign(dxz, 0);
                                c[i] = 1;
                            } else {
                                c = s.product(x, y, z, i, j);
                                if (c.size() != dxz)
                                    throw DimensionError("table algebra: product has wrong size");
                                if (x == z && c[0] != 0)
                                    throw InputError("table algebra: product of radical elements has an identity "
                                                     "component");
                            }
                            for (std::size_t k = 0; k < dxz; ++k)
                                T(k, i * dyz + j) = F.norm(c[k]);
                        }
                    A->mult_[(x * n + y) * n + z] = std::move(T);
                }
        // relations: b o a - sum c_k m_k for every composable pair of arrows
        for (std::size_t a = 0; a < A->arrows_.size(); ++a)
            for (std::size_t b = 0; b < A->arrows_.size(); ++b) {
                const Arrow& aa = A->arrows_[a];
                const Arrow& bb = A->arrows_[b];
                if (aa.target != bb.source)
                    continue;
                Vec c = A->compose(aa.source, aa.target, bb.target, A->arrow_elem_[a], A->arrow_elem_[b]);
                Relation r;
                r.push_back({Scalar(1), {static_cast<int>(a), static_cast<int>(b)}});
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (c[k] != 0)
                        r.push_back({F.neg(c[k]), {arrow_of[aa.source * n + bb.target][k]}});
                A->rels_.push_back(std::move(r));
            }
        std::size_t td = 0;
        for (auto d : s.dims)
            td += d;
        A->bound_ = static_cast<int>(td) + 2;
        return A;
    }
};

AlgebraPtr build_table_algebra(const TableSpec& spec) { return TableBuilder::build(spec); }

// ---------------------------------------------------------------- opposite

AlgebraPtr make_opposite(const PathAlgebra& A)
{
    const int n = A.num_vertices();
    auto B = std::make_shared<PathAlgebra>();
    B->F_ = A.F_;
    B->kind_ = A.kind_;
    B->labels_ = A.labels_;
    for (auto& a : A.arrows_)
        B->arrows_.push_back({a.name, a.target, a.source});
    for (auto& r : A.rels_) {
        Relation rr;
        for (auto& t : r)
            rr.push_back({t.coeff, std::vector<int>(t.path.rbegin(), t.path.rend())});
        B->rels_.push_back(std::move(rr));
    }
    B->bound_ = A.bound_;
    B->dims_.assign(n * n, 0);
    B->words_.assign(n * n, {});
    B->names_.assign(n * n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            B->dims_[x * n + y] = A.dims_[y * n + x];
            for (auto& w : A.words_[y * n + x])
                B->words_[x * n + y].push_back(std::vector<int>(w.rbegin(), w.rend()));
            B->names_[x * n + y] = A.names_[y * n + x];
        }
    B->mult_.assign(static_cast<std::size_t>(n) * n * n, Matrix());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                // i in Hom_op(x,y)=Hom(y,x), j in Hom_op(y,z)=Hom(z,y); j o_op i = i o j in Hom(z,x)
                std::size_t dxy = B->dims_[x * n + y], dyz = B->dims_[y * n + z], dxz = B->dims_[x * n + z];
                const Matrix& S = A.mult(z, y, x);
                Matrix T(A.F_, dxz, dxy * dyz);
                for (std::size_t i = 0; i < dxy; ++i)
                    for (std::size_t j = 0; j < dyz; ++j)
                        for (std::size_t k = 0; k < dxz; ++k)
                            T(k, i * dyz + j) = S(k, j * dxy + i);
                B->mult_[(x * n + y) * n + z] = std::move(T);
            }
    B->arrow_elem_ = A.arrow_elem_;
    return B;
}

AlgebraPtr PathAlgebra::opposite() const
{
    std::lock_guard<std::mutex> lk(mu_);
    if (auto b = back_.lock())
        return b;
    if (!op_) {
        auto B = make_opposite(*this);
        B->back_ = shared_from_this();
        op_ = B;
    }
    return op_;
}

// ---------------------------------------------------------------- bimodules

Bimodule::Bimodule(AlgebraPtr U, AlgebraPtr T) : U_(std::move(U)), T_(std::move(T))
{
    int nu = U_->num_vertices(), nt = T_->num_vertices();
    dims_.assign(nu * nt, 0);
    names_.assign(nu * nt, {});
    left_.assign(static_cast<std::size_t>(nu) * nu * nt, {});
    right_.assign(static_cast<std::size_t>(nu) * nt * nt, {});
}

void Bimodule::set_dim(int u, int t, std::size_t d, std::vector<std::string> names)
{
    dims_[u * T_->num_vertices() + t] = d;
    if (names.size() != d) {
        names.clear();
        for (std::size_t i = 0; i < d; ++i)
            names.push_back("m" + std::to_string(u) + "_" + std::to_string(t) + "_" + std::to_string(i));
    }
    names_[u * T_->num_vertices() + t] = std::move(names);
}

void Bimodule::set_left(int u, int u2, int t, std::vector<Matrix> per_basis)
{
    int nu = U_->num_vertices(), nt = T_->num_vertices();
    left_[(static_cast<std::size_t>(u) * nu + u2) * nt + t] = std::move(per_basis);
}

void Bimodule::set_right(int u, int t, int t2, std::vector<Matrix> per_basis)
{
    int nt = T_->num_vertices();
    right_[(static_cast<std::size_t>(u) * nt + t) * nt + t2] = std::move(per_basis);
}

const std::vector<Matrix>& Bimodule::left_table(int u, int u2, int t) const
{
    int nu = U_->num_vertices(), nt = T_->num_vertices();
    return left_[(static_cast<std::size_t>(u) * nu + u2) * nt + t];
}

const std::vector<Matrix>& Bimodule::right_table(int u, int t, int t2) const
{
    int nt = T_->num_vertices();
    return right_[(static_cast<std::size_t>(u) * nt + t) * nt + t2];
}

Matrix Bimodule::left(int u, int u2, int t, const Vec& k) const
{
    const Field& F = U_->field();
    Matrix R(F, dim(u2, t), dim(u, t));
    const auto& tab = left_table(u, u2, t);
    if (k.size() != U_->dim(u, u2))
        throw DimensionError("bimodule left action: element size mismatch");
    for (std::size_t i = 0; i < k.size(); ++i)
        if (k[i] != 0) {
            if (tab.size() != k.size())
                throw DimensionError("bimodule left action table missing");
            R = R + tab[i].scaled(k[i]);
        }
    return R;
}

Matrix Bimodule::right(int u, int t, int t2, const Vec& c) const
{
    const Field& F = U_->field();
    Matrix R(F, dim(u, t2), dim(u, t));
    const auto& tab = right_table(u, t, t2);
    if (c.size() != T_->dim(t2, t))
        throw DimensionError("bimodule right action: element size mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) {
            if (tab.size() != c.size())
                throw DimensionError("bimodule right action table missing");
            R = R + tab[i].scaled(c[i]);
        }
    return R;
}

std::size_t Bimodule::total_dim() const
{
    std::size_t s = 0;
    for (auto d : dims_)
        s += d;
    return s;
}

std::string Bimodule::check_axioms() const
{
    const int nu = U_->num_vertices(), nt = T_->num_vertices();
    const Field& F = U_->field();
    for (int t = 0; t < nt; ++t)
        for (int u = 0; u < nu; ++u) {
            if (!left(u, u, t, U_->identity(u)).is_identity())
                return "left identity fails at (" + U_->label(u) + "," + T_->label(t) + ")";
            if (!right(u, t, t, T_->identity(t)).is_identity())
                return "right identity fails at (" + U_->label(u) + "," + T_->label(t) + ")";
        }
    // left functoriality
    for (int t = 0; t < nt; ++t)
        for (int u = 0; u < nu; ++u)
            for (int u2 = 0; u2 < nu; ++u2)
                for (int u3 = 0; u3 < nu; ++u3)
                    for (std::size_t i = 0; i < U_->dim(u, u2); ++i)
                        for (std::size_t j = 0; j < U_->dim(u2, u3); ++j) {
                            Vec a = U_->basis_vector(u, u2, i), b = U_->basis_vector(u2, u3, j);
                            Matrix lhs = left(u, u3, t, U_->compose(u, u2, u3, a, b));
                            Matrix rhs = left(u2, u3, t, b) * left(u, u2, t, a);
                            if (lhs != rhs)
                                return "left action not functorial";
                        }
    // right functoriality: c1 in Hom(t2,t), c2 in Hom(t3,t2): m.(c1 c2) = (m.c1).c2
    for (int u = 0; u < nu; ++u)
        for (int t = 0; t < nt; ++t)
            for (int t2 = 0; t2 < nt; ++t2)
                for (int t3 = 0; t3 < nt; ++t3)
                    for (std::size_t i = 0; i < T_->dim(t2, t); ++i)
                        for (std::size_t j = 0; j < T_->dim(t3, t2); ++j) {
                            Vec c1 = T_->basis_vector(t2, t, i), c2 = T_->basis_vector(t3, t2, j);
                            Matrix lhs = right(u, t, t3, T_->compose(t3, t2, t, c2, c1));
                            Matrix rhs = right(u, t2, t3, c2) * right(u, t, t2, c1);
                            if (lhs != rhs)
                                return "right action not functorial";
                        }
    // u.(m.t) = (u.m).t
    for (int u = 0; u < nu; ++u)
        for (int u2 = 0; u2 < nu; ++u2)
            for (int t = 0; t < nt; ++t)
                for (int t2 = 0; t2 < nt; ++t2)
                    for (std::size_t i = 0; i < U_->dim(u, u2); ++i)
                        for (std::size_t j = 0; j < T_->dim(t2, t); ++j) {
                            Vec a = U_->basis_vector(u, u2, i), c = T_->basis_vector(t2, t, j);
                            Matrix lhs = left(u, u2, t2, a) * right(u, t, t2, c);
                            Matrix rhs = right(u2, t, t2, c) * left(u, u2, t, a);
                            if (lhs != rhs)
                                return "left and right actions do not commute";
                        }
    (void)F;
    return "";
}

Bimodule hom_bimodule(const AlgebraPtr& C)
{
    const int n = C->num_vertices();
    const Field& F = C->field();
    Bimodule M(C, C);
    for (int u = 0; u < n; ++u)
        for (int t = 0; t < n; ++t) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < C->dim(t, u); ++i)
                names.push_back(C->basis_name(t, u, i));
            M.set_dim(u, t, C->dim(t, u), names);
        }
    for (int u = 0; u < n; ++u)
        for (int u2 = 0; u2 < n; ++u2)
            for (int t = 0; t < n; ++t) {
                std::vector<Matrix> tab;
                for (std::size_t k = 0; k < C->dim(u, u2); ++k) {
                    Matrix L(F, C->dim(t, u2), C->dim(t, u));
                    for (std::size_t m = 0; m < C->dim(t, u); ++m) {
                        Vec r = C->compose(t, u, u2, C->basis_vector(t, u, m), C->basis_vector(u, u2, k));
                        for (std::size_t r0 = 0; r0 < r.size(); ++r0)
                            L(r0, m) = r[r0];
                    }
                    tab.push_back(std::move(L));
                }
                M.set_left(u, u2, t, std::move(tab));
            }
    for (int u = 0; u < n; ++u)
        for (int t = 0; t < n; ++t)
            for (int t2 = 0; t2 < n; ++t2) {
                std::vector<Matrix> tab;
                for (std::size_t k = 0; k < C->dim(t2, t); ++k) {
                    Matrix R(F, C->dim(t2, u), C->dim(t, u));
                    for (std::size_t m = 0; m < C->dim(t, u); ++m) {
                        Vec r = C->compose(t2, t, u, C->basis_vector(t2, t, k), C->basis_vector(t, u, m));
                        for (std::size_t r0 = 0; r0 < r.size(); ++r0)
                            R(r0, m) = r[r0];
                    }
                    tab.push_back(std::move(R));
                }
                M.set_right(u, t, t2, std::move(tab));
            }
    return M;
}

Bimodule zero_bimodule(const AlgebraPtr& U, const AlgebraPtr& T)
{
    Bimodule M(U, T);
    const Field& F = U->field();
    for (int u = 0; u < U->num_vertices(); ++u)
        for (int u2 = 0; u2 < U->num_vertices(); ++u2)
            for (int t = 0; t < T->num_vertices(); ++t)
                M.set_left(u, u2, t, std::vector<Matrix>(U->dim(u, u2), Matrix(F, 0, 0)));
    for (int u = 0; u < U->num_vertices(); ++u)
        for (int t = 0; t < T->num_vertices(); ++t)
            for (int t2 = 0; t2 < T->num_vertices(); ++t2)
                M.set_right(u, t, t2, std::vector<Matrix>(T->dim(t2, t), Matrix(F, 0, 0)));
    return M;
}

// ---------------------------------------------------------------- triangular matrix algebras

TriangularAlgebra triangular_matrix_algebra(const AlgebraPtr& T, const AlgebraPtr& U, const Bimodule& M,
                                            const TriangularOptions& opt)
{
    if (T->field() != U->field())
        throw InputError("triangular algebra: field mismatch");
    if (!same_algebra(M.U(), U) || !same_algebra(M.T(), T))
        throw InputError("triangular algebra: bimodule is over different algebras");
    std::string err = M.check_axioms();
    if (!err.empty())
        throw InputError("triangular algebra: inconsistent action tables: " + err);
    const Field& F = T->field();
    const int nt = T->num_vertices(), nu = U->num_vertices();
    TriangularAlgebra R;
    R.T = T;
    R.U = U;
    R.M = M;
    Quiver q;
    for (int t = 0; t < nt; ++t) {
        R.t_vertex.push_back(static_cast<int>(q.vertices.size()));
        q.vertices.push_back(opt.t_tag + ":" + T->label(t));
    }
    for (int u = 0; u < nu; ++u) {
        R.u_vertex.push_back(static_cast<int>(q.vertices.size()));
        q.vertices.push_back(opt.u_tag + ":" + U->label(u));
    }
    for (auto& a : T->arrows()) {
        R.t_arrow.push_back(static_cast<int>(q.arrows.size()));
        q.arrows.push_back({"(" + a.name + "," + opt.t_arrow_suffix + ")", R.t_vertex[a.source], R.t_vertex[a.target]});
    }
    for (auto& a : U->arrows()) {
        R.u_arrow.push_back(static_cast<int>(q.arrows.size()));
        q.arrows.push_back({"(" + a.name + "," + opt.u_arrow_suffix + ")", R.u_vertex[a.source], R.u_vertex[a.target]});
    }
    R.conn.assign(nu * nt, {});
    for (int u = 0; u < nu; ++u)
        for (int t = 0; t < nt; ++t)
            for (std::size_t i = 0; i < M.dim(u, t); ++i) {
                R.conn[u * nt + t].push_back(static_cast<int>(q.arrows.size()));
                std::string nm = opt.conn_name ? opt.conn_name(u, t, i)
                                               : "<" + M.basis_name(u, t, i) + ":" + T->label(t) + "->" + U->label(u) + ">";
                q.arrows.push_back({nm, R.t_vertex[t], R.u_vertex[u]});
            }

    std::vector<Relation> rels;
    for (auto& r : T->relations()) {
        Relation rr;
        for (auto& term : r) {
            std::vector<int> p;
            for (int a : term.path)
                p.push_back(R.t_arrow[a]);
            rr.push_back({term.coeff, p});
        }
        rels.push_back(rr);
    }
    for (auto& r : U->relations()) {
        Relation rr;
        for (auto& term : r) {
            std::vector<int> p;
            for (int a : term.path)
                p.push_back(R.u_arrow[a]);
            rr.push_back({term.coeff, p});
        }
        rels.push_back(rr);
    }
    // monomial truncations at the component bounds
    auto add_truncations = [&](const AlgebraPtr& A, const std::vector<int>& amap) {
        int L = A->bound();
        std::vector<std::vector<int>> frontier;
        for (std::size_t a = 0; a < A->arrows().size(); ++a)
            frontier.push_back({static_cast<int>(a)});
        for (int len = 1; len < L && !frontier.empty(); ++len) {
            std::vector<std::vector<int>> next;
            for (auto& p : frontier)
                for (std::size_t a = 0; a < A->arrows().size(); ++a)
                    if (A->arrows()[a].source == A->arrows()[p.back()].target) {
                        auto p2 = p;
                        p2.push_back(static_cast<int>(a));
                        next.push_back(std::move(p2));
                    }
            frontier = std::move(next);
        }
        for (auto& p : frontier) {
            std::vector<int> pp;
            for (int a : p)
                pp.push_back(amap[a]);
            rels.push_back({{Scalar(1), pp}});
        }
    };
    if (T->kind() == "quiver")
        add_truncations(T, R.t_arrow);
    if (U->kind() == "quiver")
        add_truncations(U, R.u_arrow);
    // u-arrow o m = u . m
    for (std::size_t b = 0; b < U->arrows().size(); ++b) {
        int u = U->arrows()[b].source, u2 = U->arrows()[b].target;
        for (int t = 0; t < nt; ++t) {
            Matrix L = M.left(u, u2, t, U->arrow_element(static_cast<int>(b)));
            for (std::size_t i = 0; i < M.dim(u, t); ++i) {
                Relation r;
                r.push_back({Scalar(1), {R.conn_arrow(u, t, i), R.u_arrow[b]}});
                for (std::size_t k = 0; k < M.dim(u2, t); ++k)
                    if (L(k, i) != 0)
                        r.push_back({F.neg(L(k, i)), {R.conn_arrow(u2, t, k)}});
                rels.push_back(std::move(r));
            }
        }
    }
    // m o t-arrow = m . t
    for (std::size_t a = 0; a < T->arrows().size(); ++a) {
        int t2 = T->arrows()[a].source, t = T->arrows()[a].target;
        for (int u = 0; u < nu; ++u) {
            Matrix Rm = M.right(u, t, t2, T->arrow_element(static_cast<int>(a)));
            for (std::size_t i = 0; i < M.dim(u, t); ++i) {
                Relation r;
                r.push_back({Scalar(1), {R.t_arrow[a], R.conn_arrow(u, t, i)}});
                for (std::size_t k = 0; k < M.dim(u, t2); ++k)
                    if (Rm(k, i) != 0)
                        r.push_back({F.neg(Rm(k, i)), {R.conn_arrow(u, t2, k)}});
                rels.push_back(std::move(r));
            }
        }
    }
    BuildOptions bo;
    bo.allow_short_terms = true;
    int bound = T->bound() + U->bound();
    R.alg = build_path_algebra(q, rels, bound, F, bo);

    // block formula check
    for (int t = 0; t < nt; ++t)
        for (int t2 = 0; t2 < nt; ++t2)
            if (R.alg->dim(R.t_vertex[t], R.t_vertex[t2]) != T->dim(t, t2))
                throw InputError("triangular algebra: action tables inconsistent (T block)");
    for (int u = 0; u < nu; ++u)
        for (int u2 = 0; u2 < nu; ++u2)
            if (R.alg->dim(R.u_vertex[u], R.u_vertex[u2]) != U->dim(u, u2))
                throw InputError("triangular algebra: action tables inconsistent (U block)");
    for (int t = 0; t < nt; ++t)
        for (int u = 0; u < nu; ++u)
            if (R.alg->dim(R.t_vertex[t], R.u_vertex[u]) != M.dim(u, t) ||
                R.alg->dim(R.u_vertex[u], R.t_vertex[t]) != 0)
                throw InputError("triangular algebra: action tables inconsistent (M block)");
    return R;
}

TriangularAlgebra doubled_maps_algebra(const AlgebraPtr& C)
{
    Bimodule M = hom_bimodule(C);
    TriangularOptions opt;
    opt.t_arrow_suffix = "1";
    opt.u_arrow_suffix = "2";
    opt.conn_name = [C](int u, int t, std::size_t i) {
        if (u == t && i == 0)
            return std::string("beta_") + C->label(t);
        return "gamma_" + C->basis_name(t, u, i);
    };
    return triangular_matrix_algebra(C, C, M, opt);
}

}  // namespace matcat
