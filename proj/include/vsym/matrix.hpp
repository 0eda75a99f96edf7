#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vsym/ring.hpp"

namespace vsym {

struct not_invertible : domain_error {
    not_invertible() : domain_error("matrix is not invertible: determinant is not a unit") {}
};

struct size_limit : domain_error {
    explicit size_limit(const std::string& what) : domain_error(what) {}
};

// Dense rectangular matrix over one ring, row-major, immutable ring.
class Matrix {
  public:
    Matrix(Ring ring, size_t rows, size_t cols);  // zero-filled

    static Matrix identity(const Ring& ring, size_t n);

    const Ring& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    const RingElement& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    void set(size_t i, size_t j, RingElement v);
    const RingElement& operator()(size_t i, size_t j) const { return at(i, j); }

    Matrix transpose() const;
    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const RingElement& c) const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    static int cmp(const Matrix& a, const Matrix& b);  // deterministic key order

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_skew() const;        // M^t = -M and zero diagonal
    bool is_idempotent() const;  // M^2 = M

    Matrix block(size_t i0, size_t j0, size_t r, size_t c) const;
    void set_block(size_t i0, size_t j0, const Matrix& sub);

    std::string text() const;  // diagnostics only; file format lives in io

  private:
    Ring ring_;
    size_t rows_, cols_;
    std::vector<RingElement> e_;
};

// Characteristic polynomial coefficients by the Berkowitz algorithm,
// highest degree first: p(t) = sum coeffs[i] * t^(n-i), coeffs[0] = 1.
// Division-free, so rings with zero divisors are fine.
std::vector<RingElement> char_poly(const Matrix& m);

RingElement determinant(const Matrix& m);

// Adjugate from the characteristic polynomial (Cayley-Hamilton), division-free.
Matrix adjugate(const Matrix& m);

// Adjugate times det-inverse; throws not_invertible when det is not a unit.
// The product M * M^-1 = I is verified before returning.
Matrix inverse(const Matrix& m);

// Pfaffian of a skew-symmetric matrix by dynamic programming over vertex
// subsets. Defined for all skew matrices (invertibility not required).
// Hard cap 2n <= 24; larger inputs raise size_limit.
RingElement pfaffian(const Matrix& m);

// G^t N G
Matrix congruence(const Matrix& g, const Matrix& n);

// Exact solution of A x = b (b a column). Supported over fields, Z
// (column Hermite reduction) and Z/n (lifted to Z). Returns nullopt when no
// solution exists; polynomial rings are unsupported.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

// Generalized inverse of a form B carried by the image of an idempotent pi
// (so B = pi^t B pi): with C := B + (I-pi)^t (I-pi), returns B+ := pi C^-1 pi^t.
// B B+ B = B is verified before returning; failure means B is not invertible
// on the image of pi.
Matrix restricted_inverse(const Matrix& b, const Matrix& pi);
bool is_restricted_invertible(const Matrix& b, const Matrix& pi);

// Orthogonal sum: block-diagonal placement in argument order.
Matrix orth_sum(const Matrix& a, const Matrix& b);

enum class standard_kind { psi, sigma, h, gamma };

// The inductively defined standard matrices of half-size n:
//   psi_2n, sigma_2n, h_2n, gamma_{2n,u} (gamma requires the unit u).
Matrix standard_form(const Ring& ring, standard_kind kind, size_t halfsize,
                     const std::optional<RingElement>& unit = std::nullopt);

// Row/column vector helpers (1 x n and n x 1 matrices).
Matrix row_vector(const Ring& ring, const std::vector<RingElement>& v);
Matrix col_vector(const Ring& ring, const std::vector<RingElement>& v);
Matrix row_from_ints(const Ring& ring, const std::vector<long>& v);
Matrix col_from_ints(const Ring& ring, const std::vector<long>& v);
Matrix matrix_from_ints(const Ring& ring, size_t rows, size_t cols,
                        const std::vector<long>& entries);

}  // namespace vsym
