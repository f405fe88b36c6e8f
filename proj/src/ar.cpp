#include "matcat/module.hpp"

#include <algorithm>
#include <random>

namespace matcat {

namespace {

void require_rationals(const Module& X, const char* what)
{
    if (!X.field().is_rational())
        throw UnsupportedError(std::string(what) + " is only supported over the rationals");
}

Scalar trace_of_product(const Matrix& A, const Matrix& B)
{
    Scalar s = 0;
    for (std::size_t r = 0; r < A.rows(); ++r)
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (A(r, c) != 0 && B(c, r) != 0)
                s += A(r, c) * B(c, r);
    return s;
}

// coefficients c_0..c_n of det(t I - A)
std::vector<Scalar> char_poly(const Matrix& A)
{
    std::size_t n = A.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Matrix M(A.field(), n, n);
    Matrix I = Matrix::identity(A.field(), n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + I.scaled(c[n - k + 1]);
        Matrix AM = A * M;
        Scalar tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += AM(i, i);
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

std::vector<mpz_class> divisors(mpz_class v)
{
    std::vector<mpz_class> out;
    v = abs(v);
    if (v == 0 || v > mpz_class("1000000000000"))
        return {1, 2};
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v)
                out.push_back(v / d);
        }
    return out;
}

std::vector<Scalar> rational_roots(std::vector<Scalar> c)
{
    std::vector<Scalar> roots;
    mpz_class l = 1;
    for (auto& x : c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (auto& x : c)
        z.push_back(mpz_class(x * l));
    std::size_t lo = 0;
    while (lo < z.size() && z[lo] == 0)
        ++lo;
    if (lo > 0)
        roots.push_back(0);
    if (lo + 1 >= z.size())
        return roots;
    auto eval = [&](const Scalar& t) {
        Scalar s = 0;
        for (std::size_t i = z.size(); i-- > lo;)
            s = s * t + Scalar(z[i]);
        return s;
    };
    for (auto& p : divisors(z[lo]))
        for (auto& q : divisors(z.back()))
            for (int sg : {1, -1}) {
                Scalar t(p * sg, q);
                t.canonicalize();
                if (eval(t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end())
                    roots.push_back(t);
            }
    return roots;
}

struct Piece {
    Module mod;
    Morphism incl;
};

std::optional<std::pair<SubObject, SubObject>> try_split(const Module& X)
{
    auto E = hom_space(X, X);
    auto J = end_radical(X, E);
    if (E.size() - J.size() <= 1)
        return std::nullopt;
    const Field& F = X.field();
    std::vector<Morphism> cands;
    for (auto& b : E)
        cands.push_back(b);
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            cands.push_back(E[i] + E[j]);
            cands.push_back(E[i] - E[j]);
        }
    std::size_t N = X.total_dim();
    for (auto& a : cands) {
        Matrix T = total_matrix(a);
        for (auto& lam : rational_roots(char_poly(T))) {
            std::vector<Matrix> P;
            bool nil = true;
            for (std::size_t x = 0; x < a.comp.size(); ++x) {
                Matrix B = a.comp[x] - Matrix::identity(F, X.dims[x]).scaled(lam);
                Matrix Bp = matrix_power(B, N);
                if (!Bp.is_zero())
                    nil = false;
                P.push_back(std::move(Bp));
            }
            if (nil)
                continue;
            std::vector<Matrix> im, ker;
            std::size_t dk = 0;
            for (auto& p : P) {
                im.push_back(p.cols() ? image_basis(p) : p);
                ker.push_back(kernel_basis(p));
                dk += ker.back().cols();
            }
            if (dk == 0)
                continue;
            return std::make_pair(submodule(X, im), submodule(X, ker));
        }
    }
    throw UnsupportedError("could not split a module whose endomorphism ring is not local; "
                           "the semisimple quotient may not be split over Q");
}

void split_rec(const Module& X, const Morphism& incl, std::vector<Piece>& out)
{
    if (X.is_zero())
        return;
    auto s = try_split(X);
    if (!s) {
        out.push_back({X, incl});
        return;
    }
    split_rec(s->first.obj, compose(incl, s->first.map), out);
    split_rec(s->second.obj, compose(incl, s->second.map), out);
}

}  // namespace

std::vector<Morphism> end_radical(const Module& X, const std::vector<Morphism>& E)
{
    require_rationals(X, "the radical of an endomorphism ring");
    std::vector<Matrix> T;
    for (auto& e : E)
        T.push_back(total_matrix(e));
    std::size_t m = E.size();
    Matrix G(X.field(), m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            G(i, j) = G(j, i) = trace_of_product(T[i], T[j]);
    Matrix K = kernel_basis(G);
    std::vector<Morphism> out;
    for (std::size_t k = 0; k < K.cols(); ++k)
        out.push_back(linear_combination(X, X, E, K.col_vec(k)));
    return out;
}

bool is_local_endomorphism_ring(const Module& X)
{
    if (X.is_zero())
        return false;
    auto E = hom_space(X, X);
    return E.size() - end_radical(X, E).size() == 1;
}

bool is_indecomposable(const Module& X) { return is_local_endomorphism_ring(X); }

std::vector<Morphism> radical_hom(const Module& X, const Module& Y)
{
    require_rationals(X, "radical morphisms");
    auto H = hom_space(X, Y);
    if (H.empty())
        return H;
    auto G = hom_space(Y, X);
    if (G.empty())
        return H;
    auto E = hom_space(X, X);
    std::vector<Matrix> Hm, Gm, Em;
    for (auto& h : H)
        Hm.push_back(total_matrix(h));
    for (auto& g : G)
        Gm.push_back(total_matrix(g));
    for (auto& e : E)
        Em.push_back(total_matrix(e));
    Matrix S(X.field(), G.size() * E.size(), H.size());
    std::size_t r = 0;
    for (auto& g : Gm)
        for (auto& e : Em) {
            Matrix P = e * g;
            for (std::size_t k = 0; k < Hm.size(); ++k)
                S(r, k) = trace_of_product(P, Hm[k]);
            ++r;
        }
    Matrix K = kernel_basis(S);
    std::vector<Morphism> out;
    for (std::size_t k = 0; k < K.cols(); ++k)
        out.push_back(linear_combination(X, Y, H, K.col_vec(k)));
    return out;
}

std::optional<Morphism> find_isomorphism(const Module& X, const Module& Y)
{
    if (!same_algebra(X.alg, Y.alg) || X.dims != Y.dims)
        return std::nullopt;
    if (X.is_zero())
        return zero_morphism(X, Y);
    auto H = hom_space(X, Y);
    if (H.empty())
        return std::nullopt;
    for (auto& h : H)
        if (is_iso(h))
            return h;
    std::mt19937 rng(12345);
    const Field& F = X.field();
    std::uniform_int_distribution<int> dist(-1000, 1000);
    const int tries = F.is_rational() ? 8 : 60;
    for (int t = 0; t < tries; ++t) {
        Vec c(H.size());
        for (auto& e : c)
            e = F.norm(Scalar(dist(rng)));
        Morphism h = linear_combination(X, Y, H, c);
        if (is_iso(h))
            return h;
    }
    return std::nullopt;
}

bool isomorphic(const Module& X, const Module& Y) { return find_isomorphism(X, Y).has_value(); }

std::vector<Summand> decompose(const Module& X)
{
    require_rationals(X, "decomposition");
    std::vector<Piece> pieces;
    split_rec(X, identity_morphism(X), pieces);
    std::vector<Summand> out;
    for (auto& p : pieces) {
        bool found = false;
        for (auto& s : out) {
            if (isomorphic(s.mod, p.mod)) {
                s.multiplicity++;
                s.inclusions.push_back(p.incl);
                found = true;
                break;
            }
        }
        if (!found)
            out.push_back({p.mod, 1, {p.incl}});
    }
    return out;
}

bool is_split_epi(const Morphism& p) { return solve_left_factor(identity_morphism(p.tgt), p).has_value(); }

bool is_split_mono(const Morphism& j) { return solve_right_factor(identity_morphism(j.src), j).has_value(); }

// ---------------------------------------------------------------- almost split sequences

ShortExactSequence almost_split_sequence(const Module& M)
{
    require_rationals(M, "almost split sequences");
    Module T = tau(M);
    if (T.is_zero())
        throw InputError("almost split sequence requested for a projective module");
    const Field& F = M.field();
    Morphism d0 = projective_cover(M);
    SubObject K = kernel(d0);
    Morphism iota = K.map;
    iota.tgt = d0.src;
    const Module& Om = K.obj;
    const Module& P0 = d0.src;

    auto Psi = hom_space(Om, T);
    std::size_t m = Psi.size();
    auto Phi = hom_space(P0, T);
    Matrix Wc(F, m, Phi.size());
    for (std::size_t k = 0; k < Phi.size(); ++k) {
        Vec c = hom_coordinates(Psi, compose(Phi[k], iota));
        for (std::size_t i = 0; i < m; ++i)
            Wc(i, k) = c[i];
    }
    Matrix W = Phi.empty() ? Matrix(F, m, 0) : image_basis(Wc);
    Matrix QW = W.cols() ? cokernel_projection(W) : Matrix::identity(F, m);

    auto E = hom_space(M, M);
    auto J = end_radical(M, E);
    std::vector<Matrix> blocks;
    for (auto& r : J) {
        auto rt = solve_left_factor(compose(r, d0), d0);
        if (!rt)
            throw Error("almost split sequence: endomorphism does not lift to the cover");
        auto rr = solve_left_factor(compose(*rt, iota), iota);
        if (!rr)
            throw Error("almost split sequence: lift does not restrict to the syzygy");
        Matrix L(F, m, m);
        for (std::size_t i = 0; i < m; ++i) {
            Vec c = hom_coordinates(Psi, compose(Psi[i], *rr));
            for (std::size_t k = 0; k < m; ++k)
                L(k, i) = c[k];
        }
        blocks.push_back(QW * L);
    }
    Matrix S = blocks.empty() ? Matrix::identity(F, m) : kernel_basis(Matrix::vstack(F, m, blocks));
    std::optional<Vec> pick;
    for (std::size_t k = 0; k < S.cols() && !pick; ++k) {
        Vec x = S.col_vec(k);
        if (!(QW * Matrix::column(F, x)).is_zero())
            pick = x;
    }
    if (!pick)
        throw Error("almost split sequence: extension space has no socle element outside the trivial part");
    Morphism psi = linear_combination(Om, T, Psi, *pick);
    Pushout P = pushout(iota, psi);
    Morphism j = P.f_prime;
    Morphism onsum = sum_map_out(P.sum, M, {d0, zero_morphism(T, M)});
    auto pi = solve_right_factor(onsum, P.quotient);
    if (!pi)
        throw Error("almost split sequence: induced map to the end term not found");
    ShortExactSequence s{j, *pi};
    std::string err = check_exact(s);
    if (!err.empty())
        throw Error("almost split sequence: constructed sequence is not exact: " + err);
    return s;
}

VerifyReport verify_almost_split(const ShortExactSequence& s, const std::vector<Module>& inds)
{
    VerifyReport R;
    std::string err = check_exact(s);
    if (!err.empty()) {
        R.failure = "not exact: " + err;
        return R;
    }
    const Module& A = s.j.src;
    const Module& C = s.p.tgt;
    if (!is_indecomposable(A)) {
        R.failure = "first term is not indecomposable";
        return R;
    }
    if (!is_indecomposable(C)) {
        R.failure = "end term is not indecomposable";
        return R;
    }
    R.certificate.push_back("end terms indecomposable");
    if (auto sec = solve_left_factor(identity_morphism(C), s.p)) {
        R.failure = "section found";
        return R;
    }
    R.certificate.push_back("no section");
    for (std::size_t t = 0; t < inds.size(); ++t) {
        auto rad = radical_hom(inds[t], C);
        for (std::size_t k = 0; k < rad.size(); ++k) {
            auto h = solve_left_factor(rad[k], s.p);
            if (!h) {
                R.failure = "radical morphism " + std::to_string(k) + " from indecomposable " + std::to_string(t) +
                            " " + inds[t].dim_string() + " does not factor";
                return R;
            }
            if (!morphisms_equal(compose(s.p, *h), rad[k])) {
                R.failure = "factorization witness does not recompose";
                return R;
            }
        }
        R.certificate.push_back("indecomposable " + std::to_string(t) + " " + inds[t].dim_string() + ": " +
                                std::to_string(rad.size()) + " radical morphisms factor");
    }
    R.ok = true;
    return R;
}

std::vector<Module> enumerate_indecomposables(const AlgebraPtr& A, const EnumerationOptions& opt)
{
    if (!A->field().is_rational())
        throw UnsupportedError("enumeration of indecomposables is only supported over the rationals");
    std::vector<Module> found;
    std::vector<bool> is_proj, is_inj;
    std::size_t head = 0;
    auto add = [&](const Module& X, bool pr, bool in) {
        if (X.is_zero())
            return;
        for (std::size_t k = 0; k < found.size(); ++k)
            if (found[k].dims == X.dims && isomorphic(found[k], X)) {
                if (pr)
                    is_proj[k] = true;
                if (in)
                    is_inj[k] = true;
                return;
            }
        if (found.size() >= opt.cap)
            throw DimensionError("indecomposable enumeration exceeds the cap of " + std::to_string(opt.cap));
        found.push_back(X);
        is_proj.push_back(pr);
        is_inj.push_back(in);
    };
    auto add_summands = [&](const Module& X) {
        if (X.is_zero())
            return;
        for (auto& s : decompose(X))
            add(s.mod, false, false);
    };
    const int n = A->num_vertices();
    for (int x = 0; x < n; ++x)
        add(projective(A, x), true, false);
    for (int x = 0; x < n; ++x)
        add(injective(A, x), false, true);
    while (head < found.size()) {
        Module M = found[head];
        bool pr = is_proj[head], in = is_inj[head];
        ++head;
        if (pr)
            add_summands(radical_top_socle(M).rad.obj);
        else
            add_summands(almost_split_sequence(M).j.tgt);
        if (in)
            add_summands(quotient(M, radical_top_socle(M).soc.map.comp).obj);
        else {
            Module N = tau_inverse(M);
            if (!N.is_zero()) {
                add_summands(N);
                add_summands(almost_split_sequence(N).j.tgt);
            }
        }
    }
    return found;
}

}  // namespace matcat
