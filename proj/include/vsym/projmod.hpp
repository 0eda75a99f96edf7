#pragma once

#include <utility>

#include "vsym/matrix.hpp"

namespace vsym {

// Lexicographic coordinates on exterior powers of R^m.
size_t wedge2_dim(size_t m);
size_t wedge2_index(size_t m, size_t i, size_t j);  // i < j
size_t wedge3_dim(size_t m);
size_t wedge3_index(size_t m, size_t i, size_t j, size_t k);  // i < j < k

// x wedge y of two ambient columns, as a column in lex pair coordinates.
Matrix wedge2(const Matrix& x, const Matrix& y);

// Induced map of a square matrix on the second exterior power.
Matrix wedge2_map(const Matrix& a);

// Projective module presented as the image of an idempotent matrix in an
// ambient free module. Constant rank is certified by the characteristic
// polynomial t^(m-r) (t-1)^r of the idempotent.
class ProjModule {
  public:
    ProjModule(Matrix idem, size_t rank);
    static ProjModule free_module(const Ring& ring, size_t n);

    const Ring& ring() const { return idem_.ring(); }
    size_t ambient() const { return idem_.rows(); }
    size_t rank() const { return rank_; }
    const Matrix& idem() const { return idem_; }
    bool is_free() const;

    friend bool operator==(const ProjModule& a, const ProjModule& b);
    friend bool operator!=(const ProjModule& a, const ProjModule& b) { return !(a == b); }
    static int cmp(const ProjModule& a, const ProjModule& b);

  private:
    Matrix idem_;
    size_t rank_;
};

// Determinant trivialization of a rank-2 module: a generator w of
// Lambda^2 P inside Lambda^2 R^m and a dual functional with lambda(w) = 1.
class Trivialization {
  public:
    Trivialization(const ProjModule& p, Matrix w, Matrix lambda);

    const Matrix& w() const { return w_; }
    const Matrix& lambda() const { return lambda_; }

    // lambda(xbar wedge ybar) for ambient m-columns.
    RingElement pair(const Matrix& x, const Matrix& y) const;

    // The trivialization u * theta0 in the sense that chi_0 scales by u:
    // lambda' = u lambda, w' = u^-1 w.
    Trivialization scaled(const RingElement& u) const;

  private:
    Trivialization(Matrix w, Matrix lambda) : w_(std::move(w)), lambda_(std::move(lambda)) {}
    Matrix w_;       // wedge2_dim(m) x 1
    Matrix lambda_;  // 1 x wedge2_dim(m)
};

// Epimorphism a : P0 + R^k -> R with a chosen section s. The covector is
// stored precomposed with the block idempotent diag(pi0, I_k).
class UmEpi {
  public:
    UmEpi(ProjModule base, Matrix a, Matrix s);

    const ProjModule& base() const { return base_; }
    size_t free_summands() const { return a_.cols() - base_.ambient(); }
    size_t ambient() const { return a_.cols(); }
    const Matrix& a() const { return a_; }
    const Matrix& s() const { return s_; }
    Matrix total_idem() const;  // diag(pi0, I_k)

  private:
    ProjModule base_;
    Matrix a_;  // 1 x (m+k)
    Matrix s_;  // (m+k) x 1
};

// Kernel of the epimorphism as an idempotent: pi_hat - s a, of rank
// rank(P0) + k - 1. The retraction identity a (pi_hat - s a) = 0 holds.
ProjModule kernel_module(const UmEpi& e);

// From a unimodular row of length 3 with section t: the kernel module
// P = P(c) of rank 2 together with the trivialization
//   w = c -| (e1^e2^e3),  lambda(x^y) = det[t, x, y].
std::pair<ProjModule, Trivialization> trivialization_from_row(const Matrix& c, const Matrix& t);

// Ambient matrix of the skew form chi_0(x, y) = lambda(pi x ^ pi y) on P.
// Invertibility on the image of pi is certified via restricted_inverse.
Matrix chi0_form(const ProjModule& p, const Trivialization& triv);

// q' = -(a0 -| w): satisfies chi_0(q', x) = a0(x) for x in the image of pi.
Matrix chi0_contract_inverse(const ProjModule& p, const Trivialization& triv, const Matrix& a0);

// The functional on Lambda^3 of the ambient of P0 + R realizing the
// composite det(P0 + R) = det(P0) = R:
//   lambda3(x^y^z) = lambda(xb^yb) z_R - lambda(xb^zb) y_R + lambda(yb^zb) x_R.
RingElement lambda3(const ProjModule& p0, const Trivialization& triv, const Matrix& x,
                    const Matrix& y, const Matrix& z);
Matrix lambda3_covector(const ProjModule& p0, const Trivialization& triv);

// Ambient matrix of the skew form chi_a on P(a) = ker(a):
// chi_a(x, y) = lambda3(x ^ y ^ s(1)) pulled back along the kernel idempotent.
// Restricted invertibility on the kernel is certified.
Matrix chi_a_form(const UmEpi& e, const Trivialization& triv);

}  // namespace vsym
