#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matcat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InputError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(long p);

    bool is_rational() const { return p_ == 0; }
    long characteristic() const { return p_; }

    Scalar norm(const Scalar& a) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    // in place: a -= f*b
    void axpy_sub(Scalar& a, const Scalar& f, const Scalar& b) const;

    Scalar parse(const std::string& s) const;
    std::string format(const Scalar& a) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    long p_ = 0;
    mpz_class pz_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& F, std::size_t r, std::size_t c) : F_(F), r_(r), c_(c), a_(r * c) {}
    static Matrix identity(const Field& F, std::size_t n);
    static Matrix from_rows(const Field& F, const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);
    static Matrix column(const Field& F, const Vec& v);

    const Field& field() const { return F_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix col(std::size_t j) const { return block(0, j, r_, 1); }
    Vec col_vec(std::size_t j) const;
    Matrix cols_subset(const std::vector<std::size_t>& idx) const;
    bool is_zero() const;
    bool is_identity() const;

    static Matrix hstack(const Field& F, std::size_t rows, const std::vector<Matrix>& ms);
    static Matrix vstack(const Field& F, std::size_t cols, const std::vector<Matrix>& ms);
    static Matrix block_diag(const Field& F, const std::vector<Matrix>& ms);

    std::vector<std::vector<std::string>> to_strings() const;
    std::string str() const;

private:
    Field F_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
};

Echelon echelon(const Matrix& A);
std::size_t rank(const Matrix& A);

std::optional<Matrix> solve_linear(const Matrix& A, const Matrix& b);

Matrix kernel_basis(const Matrix& A);
Matrix image_basis(const Matrix& A);
Matrix cokernel_projection(const Matrix& A);

struct KernelImageCokernel {
    Matrix kernel;
    Matrix image;
    Matrix cokernel;
};
KernelImageCokernel kernel_image_cokernel(const Matrix& A);

// f: V -> W1, g: V -> W2; P = coker [f; -g]; gp: W1 -> P, fp: W2 -> P, fp*g = gp*f
struct PushoutResult {
    std::size_t dim;
    Matrix f_prime;
    Matrix g_prime;
};
PushoutResult pushout(const Matrix& f, const Matrix& g);

Matrix complement_basis(const Matrix& S);
Matrix coordinates(const Matrix& S, const Matrix& V);
bool in_span(const Matrix& S, const Matrix& V);
std::optional<Matrix> inverse(const Matrix& A);
Matrix right_inverse(const Matrix& Q);
Matrix subspace_sum(const Matrix& A, const Matrix& B);
Matrix subspace_intersection(const Matrix& A, const Matrix& B);
Matrix matrix_power(const Matrix& A, std::size_t k);

}  // namespace matcat
