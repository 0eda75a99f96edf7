#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vsym/matrix.hpp"

namespace vsym {

// Decomposition of an ambient free module R^dim into contiguous summands.
// At most one block may be idempotent-presented (a projective summand given
// by a projector on its coordinate range); the others are free.
class BlockDecomposition {
  public:
    BlockDecomposition(Ring ring, std::vector<size_t> sizes);
    BlockDecomposition(Ring ring, std::vector<size_t> sizes, size_t idem_index, Matrix idem);

    const Ring& ring() const { return ring_; }
    size_t dim() const { return dim_; }
    size_t count() const { return sizes_.size(); }
    size_t size(size_t i) const { return sizes_.at(i); }
    size_t offset(size_t i) const { return offsets_.at(i); }
    const std::optional<size_t>& idem_index() const { return idem_index_; }
    const Matrix& idem() const;

    // Ambient dim x dim projector onto block i.
    Matrix projector(size_t i) const;

    friend bool operator==(const BlockDecomposition& a, const BlockDecomposition& b);
    friend bool operator!=(const BlockDecomposition& a, const BlockDecomposition& b) {
        return !(a == b);
    }

  private:
    Ring ring_;
    size_t dim_ = 0;
    std::vector<size_t> sizes_;
    std::vector<size_t> offsets_;
    std::optional<size_t> idem_index_;
    std::optional<Matrix> idem_;
};

// One elementary transvection id + s, where s maps the source block into a
// different target block. The coefficient is stored as a full ambient matrix
// satisfying P_target * s * P_source = s, so factors on idempotent blocks
// need no choice of local basis.
class ElemFactor {
  public:
    ElemFactor(const BlockDecomposition& blocks, size_t target, size_t source, Matrix coeff);

    size_t target() const { return target_; }
    size_t source() const { return source_; }
    const Matrix& coeff() const { return coeff_; }

    Matrix eval(const BlockDecomposition& blocks) const;  // I + s

  private:
    size_t target_, source_;
    Matrix coeff_;
};

// Ordered product of elementary factors; the certificate currency of this
// library. eval composes factors left to right.
class ElemWord {
  public:
    explicit ElemWord(BlockDecomposition blocks);

    const BlockDecomposition& blocks() const { return blocks_; }
    const Ring& ring() const { return blocks_.ring(); }
    size_t dim() const { return blocks_.dim(); }
    const std::vector<ElemFactor>& factors() const { return factors_; }

    void push(size_t target, size_t source, Matrix coeff);
    void push(ElemFactor f);
    void append(const ElemWord& other);  // blocks must agree

  private:
    BlockDecomposition blocks_;
    std::vector<ElemFactor> factors_;
};

Matrix eval_word(const ElemWord& w);

// Reversed order, negated coefficients; eval(w) * eval(invert_word(w)) = I.
ElemWord invert_word(const ElemWord& w);

// Whitehead's lemma on a two-block decomposition: f maps block 0 into block
// 1 and g maps block 1 into block 0 (ambient coefficient matrices). Requires
// id + g f invertible on block 0. The returned word has exactly five factors
// and evaluates to (id + g f) on block 0 times (id + f g)^-1 on block 1.
ElemWord whitehead_word(const BlockDecomposition& blocks, const Matrix& f, const Matrix& g);

// Four-factor commutator word for distinct blocks i, j, k evaluating to the
// single elementary factor with coefficient s_ij * s_jk.
ElemWord commutator_factorization(const BlockDecomposition& blocks, size_t i, size_t j, size_t k,
                                  const Matrix& s_ij, const Matrix& s_jk);

bool is_even_permutation(const std::vector<size_t>& perm);

// Word over rank-1 blocks evaluating exactly to the matrix of an even
// permutation (perm[i] is the image of coordinate i). Odd permutations are
// rejected.
ElemWord permutation_word(const Ring& ring, const std::vector<size_t>& perm);

// Factors an integer matrix of determinant 1 into elementary transvections
// over Z (Euclidean row reduction) and maps the coefficients into the target
// ring. The input matrix must live over the integers.
ElemWord integer_elementary_word(const Ring& target, const Matrix& m_int);

// Word w (rank-1 blocks) with row * eval(w) = (0,...,0,1). Requires the row
// to be unimodular over a solver-supported ring family.
ElemWord reduce_row_to_last(const Matrix& row);

enum class transvection_kind {
    add_vector,      // id + p * pi_last, p a column supported away from the last coordinate
    add_functional,  // id + a * e_last, a a row vanishing on the last coordinate
};

// Lemma-2.7-style symplectic realizations: a word W on the coarse blocks
// [dim-1, 1] with eval(W)^t chi eval(W) = chi, evaluating to
// (phi + 1)(id + p pi) resp. (psi + 1)(id + a e).
ElemWord symplectic_transvection(const Matrix& chi, transvection_kind kind, const Matrix& data);

// Given w with factors in corner form relative to the last coordinate (or
// rewritable into it) and eval(w)(p) = e_last, produce a symplectic
// elementary word W with eval(W)(p) = e_last and eval(W)^t chi eval(W) = chi.
ElemWord symplectic_orbit_word(const Matrix& chi, const ElemWord& w);

}  // namespace vsym
