#include "matcat/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace matcat {

static bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Field Field::prime(long p)
{
    if (!is_prime(p))
        throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    Field F;
    F.p_ = p;
    F.pz_ = p;
    return F;
}

Scalar Field::norm(const Scalar& a) const
{
    if (p_ == 0)
        return a;
    mpz_class num = a.get_num() % pz_;
    if (num < 0)
        num += pz_;
    mpz_class den = a.get_den() % pz_;
    if (den == 0)
        throw DimensionError("denominator divisible by the characteristic");
    if (den != 1) {
        mpz_class di;
        mpz_invert(di.get_mpz_t(), den.get_mpz_t(), pz_.get_mpz_t());
        num = (num * di) % pz_;
    }
    return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= pz_)
        s -= pz_;
    return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0)
        s += pz_;
    return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a * b;
    mpz_class s = (a.get_num() * b.get_num()) % pz_;
    return Scalar(s);
}

Scalar Field::neg(const Scalar& a) const
{
    if (p_ == 0)
        return -a;
    if (a == 0)
        return a;
    return Scalar(pz_ - a.get_num());
}

Scalar Field::inv(const Scalar& a) const
{
    if (a == 0)
        throw DimensionError("division by zero");
    if (p_ == 0)
        return 1 / a;
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz_.get_mpz_t());
    return Scalar(r);
}

void Field::axpy_sub(Scalar& a, const Scalar& f, const Scalar& b) const
{
    if (p_ == 0) {
        a -= f * b;
        return;
    }
    mpz_class s = (a.get_num() - f.get_num() * b.get_num()) % pz_;
    if (s < 0)
        s += pz_;
    a = s;
}

Scalar Field::parse(const std::string& s) const
{
    Scalar v;
    try {
        v.set_str(s, 10);
    } catch (const std::invalid_argument&) {
        throw InputError("cannot parse scalar '" + s + "'");
    }
    if (v.get_den() == 0)
        throw InputError("zero denominator in '" + s + "'");
    v.canonicalize();
    return norm(v);
}

std::string Field::format(const Scalar& a) const { return a.get_str(); }

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(const Field& F, std::size_t n)
{
    Matrix I(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = 1;
    return I;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<std::vector<Scalar>>& rows, std::size_t cols)
{
    std::size_t c = rows.empty() ? cols : rows[0].size();
    Matrix M(F, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c)
            throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j)
            M(i, j) = F.norm(rows[i][j]);
    }
    return M;
}

Matrix Matrix::column(const Field& F, const Vec& v)
{
    Matrix M(F, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        M(i, 0) = v[i];
    return M;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (c_ != o.r_)
        throw DimensionError("matrix product shape mismatch " + std::to_string(r_) + "x" + std::to_string(c_) +
                             " * " + std::to_string(o.r_) + "x" + std::to_string(o.c_));
    Matrix R(F_, r_, o.c_);
    if (F_.is_rational()) {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const Scalar& x = (*this)(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    if (o(k, j) != 0)
                        R(i, j) += x * o(k, j);
            }
    } else {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const Scalar& x = (*this)(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    if (o(k, j) != 0)
                        R(i, j) = F_.add(R(i, j), F_.mul(x, o(k, j)));
            }
    }
    return R;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw DimensionError("matrix sum shape mismatch");
    Matrix R(F_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.add(a_[i], o.a_[i]);
    return R;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (r_ != o.r_ || c_ != o.c_)
        throw DimensionError("matrix difference shape mismatch");
    Matrix R(F_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.sub(a_[i], o.a_[i]);
    return R;
}

Matrix Matrix::operator-() const
{
    Matrix R(F_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.neg(a_[i]);
    return R;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Matrix R(F_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        R.a_[i] = F_.mul(a_[i], s);
    return R;
}

bool Matrix::operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

Matrix Matrix::transpose() const
{
    Matrix R(F_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            R(j, i) = (*this)(i, j);
    return R;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > r_ || c0 + nc > c_)
        throw DimensionError("block out of range");
    Matrix R(F_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            R(i, j) = (*this)(r0 + i, c0 + j);
    return R;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.r_ > r_ || c0 + m.c_ > c_)
        throw DimensionError("set_block out of range");
    for (std::size_t i = 0; i < m.r_; ++i)
        for (std::size_t j = 0; j < m.c_; ++j)
            (*this)(r0 + i, c0 + j) = m(i, j);
}

Vec Matrix::col_vec(std::size_t j) const
{
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::cols_subset(const std::vector<std::size_t>& idx) const
{
    Matrix R(F_, r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            R(i, k) = (*this)(i, idx[k]);
    return R;
}

bool Matrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& x) { return x == 0; });
}

bool Matrix::is_identity() const
{
    if (r_ != c_)
        return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

Matrix Matrix::hstack(const Field& F, std::size_t rows, const std::vector<Matrix>& ms)
{
    std::size_t c = 0;
    for (auto& m : ms) {
        if (m.rows() != rows)
            throw DimensionError("hstack row mismatch");
        c += m.cols();
    }
    Matrix R(F, rows, c);
    std::size_t off = 0;
    for (auto& m : ms) {
        R.set_block(0, off, m);
        off += m.cols();
    }
    return R;
}

Matrix Matrix::vstack(const Field& F, std::size_t cols, const std::vector<Matrix>& ms)
{
    std::size_t r = 0;
    for (auto& m : ms) {
        if (m.cols() != cols)
            throw DimensionError("vstack column mismatch");
        r += m.rows();
    }
    Matrix R(F, r, cols);
    std::size_t off = 0;
    for (auto& m : ms) {
        R.set_block(off, 0, m);
        off += m.rows();
    }
    return R;
}

Matrix Matrix::block_diag(const Field& F, const std::vector<Matrix>& ms)
{
    std::size_t r = 0, c = 0;
    for (auto& m : ms) {
        r += m.rows();
        c += m.cols();
    }
    Matrix R(F, r, c);
    std::size_t ro = 0, co = 0;
    for (auto& m : ms) {
        R.set_block(ro, co, m);
        ro += m.rows();
        co += m.cols();
    }
    return R;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const
{
    std::vector<std::vector<std::string>> out(r_, std::vector<std::string>(c_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            out[i][j] = F_.format((*this)(i, j));
    return out;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < c_; ++j)
            os << (j ? ", " : "") << F_.format((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- echelon forms

Echelon echelon(const Matrix& A)
{
    const Field& F = A.field();
    Matrix R = A;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
        std::size_t p = r;
        while (p < R.rows() && R(p, c) == 0)
            ++p;
        if (p == R.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < R.cols(); ++j)
                std::swap(R(p, j), R(r, j));
        Scalar iv = F.inv(R(r, c));
        for (std::size_t j = c; j < R.cols(); ++j)
            if (R(r, j) != 0)
                R(r, j) = F.mul(R(r, j), iv);
        for (std::size_t i = 0; i < R.rows(); ++i) {
            if (i == r || R(i, c) == 0)
                continue;
            Scalar f = R(i, c);
            for (std::size_t j = c; j < R.cols(); ++j)
                if (R(r, j) != 0)
                    F.axpy_sub(R(i, j), f, R(r, j));
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(R), std::move(piv)};
}

std::size_t rank(const Matrix& A) { return echelon(A).pivots.size(); }

std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b)
{
    if (A.rows() != b.rows())
        throw DimensionError("solve_linear: row count mismatch");
    const Field& F = A.field();
    std::size_t n = A.cols(), k = b.cols();
    Matrix aug = Matrix::hstack(F, A.rows(), {A, b});
    Echelon e = echelon(aug);
    Matrix x(F, n, k);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < k; ++j)
            x(e.pivots[i], j) = e.rref(i, n + j);
    }
    return x;
}

Matrix kernel_basis(const Matrix& A)
{
    const Field& F = A.field();
    Echelon e = echelon(A);
    std::vector<bool> is_piv(A.cols(), false);
    for (auto p : e.pivots)
        is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (!is_piv[j])
            free.push_back(j);
    Matrix K(F, A.cols(), free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        K(free[f], f) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            K(e.pivots[i], f) = F.neg(e.rref(i, free[f]));
    }
    return K;
}

Matrix image_basis(const Matrix& A) { return A.cols_subset(echelon(A).pivots); }

Matrix cokernel_projection(const Matrix& A)
{
    // rows spanning the left kernel of A
    return kernel_basis(A.transpose()).transpose();
}

KernelImageCokernel kernel_image_cokernel(const Matrix& A)
{
    return {kernel_basis(A), image_basis(A), cokernel_projection(A)};
}

PushoutResult pushout(const Matrix& f, const Matrix& g)
{
    if (f.cols() != g.cols())
        throw DimensionError("pushout: maps do not share a domain");
    const Field& F = f.field();
    Matrix st = Matrix::vstack(F, f.cols(), {f, -g});
    Matrix Q = cokernel_projection(st);
    PushoutResult r;
    r.dim = Q.rows();
    r.g_prime = Q.block(0, 0, Q.rows(), f.rows());
    r.f_prime = Q.block(0, f.rows(), Q.rows(), g.rows());
    return r;
}

Matrix complement_basis(const Matrix& S)
{
    const Field& F = S.field();
    std::size_t n = S.rows();
    Echelon e = echelon(S.transpose());
    std::vector<bool> is_piv(n, false);
    for (auto p : e.pivots)
        is_piv[p] = true;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_piv[j])
            idx.push_back(j);
    Matrix C(F, n, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        C(idx[k], k) = 1;
    return C;
}

Matrix coordinates(const Matrix& S, const Matrix& V)
{
    auto x = solve_linear(S, V);
    if (!x)
        throw DimensionError("coordinates: vectors not in the given span");
    return *x;
}

bool in_span(const Matrix& S, const Matrix& V) { return solve_linear(S, V).has_value(); }

std::optional<Matrix> inverse(const Matrix& A)
{
    if (A.rows() != A.cols())
        return std::nullopt;
    if (rank(A) != A.rows())
        return std::nullopt;
    return solve_linear(A, Matrix::identity(A.field(), A.rows()));
}

Matrix right_inverse(const Matrix& Q)
{
    auto x = solve_linear(Q, Matrix::identity(Q.field(), Q.rows()));
    if (!x)
        throw DimensionError("right_inverse: matrix is not surjective");
    return *x;
}

Matrix subspace_sum(const Matrix& A, const Matrix& B)
{
    return image_basis(Matrix::hstack(A.field(), A.rows(), {A, B}));
}

Matrix subspace_intersection(const Matrix& A, const Matrix& B)
{
    const Field& F = A.field();
    Matrix st = Matrix::hstack(F, A.rows(), {A, -B});
    Matrix K = kernel_basis(st);
    Matrix part = K.block(0, 0, A.cols(), K.cols());
    return image_basis(A * part);
}

Matrix matrix_power(const Matrix& A, std::size_t k)
{
    Matrix R = Matrix::identity(A.field(), A.rows());
    Matrix B = A;
    while (k) {
        if (k & 1)
            R = R * B;
        k >>= 1;
        if (k)
            B = B * B;
    }
    return R;
}

}  // namespace matcat
