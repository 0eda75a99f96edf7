#pragma once

#include <utility>
#include <vector>

#include "vsym/elem.hpp"
#include "vsym/projmod.hpp"

namespace vsym {

// Skew invertible even-size matrix representing a W'_E(R) class; the
// Pfaffian (a unit) is computed and cached at construction. Requires a ring
// in which 2 is a unit, except over Z where unit Pfaffians still make sense
// and the congruence machinery is exact.
class WittRep {
  public:
    explicit WittRep(Matrix m);

    const Matrix& matrix() const { return m_; }
    const RingElement& pf() const { return pf_; }
    size_t size() const { return m_.rows(); }

    friend bool operator==(const WittRep& a, const WittRep& b) { return a.m_ == b.m_; }

  private:
    Matrix m_;
    RingElement pf_;
};

// Claimed equivalence M ~ N: a stabilization level and an elementary word.
// Nothing is trusted until verify_equiv checks the congruence.
struct EquivCert {
    size_t stab;
    ElemWord word;
};

// Triple (P, g, f) of skew invertible forms on one projective module,
// with ambient form matrices.
class VTriple {
  public:
    VTriple(ProjModule mod, Matrix g, Matrix f);

    const ProjModule& module() const { return mod_; }
    const Matrix& g() const { return g_; }
    const Matrix& f() const { return f_; }

    static int cmp(const VTriple& a, const VTriple& b);
    friend bool operator==(const VTriple& a, const VTriple& b) { return cmp(a, b) == 0; }

  private:
    ProjModule mod_;
    Matrix g_, f_;
};

// Formal integer combination of triples, kept with nonzero coefficients in
// canonical key order.
class VElement {
  public:
    VElement() = default;
    static VElement single(VTriple t);

    VElement& add(const VTriple& t, long coeff = 1);
    const std::vector<std::pair<VTriple, long>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend VElement operator+(const VElement& a, const VElement& b);

  private:
    std::vector<std::pair<VTriple, long>> terms_;
};

// M |-> M + psi_2s; the Pfaffian is unchanged.
WittRep stabilize(const WittRep& m, size_t s);

// The W'_E inverse representative sigma_2n M^-1 sigma_2n.
WittRep witt_inverse(const WittRep& m);

// Checks M + psi_{2n+2s} = E^t (N + psi_{2m+2s}) E with E = eval(cert.word).
bool verify_equiv(const WittRep& m, const WittRep& n, const EquivCert& cert);

// W'_E -> V_free: M |-> [R^2m, psi_2m, M].
VElement nu(const WittRep& m);

// V_free -> W'_E on a free triple (alpha = id):
//   xi([L, g, f]) = f + sigma_2n g^-1 sigma_2n, an element of A_4n.
WittRep xi(const VTriple& t);

// Syntactic reduction: drop [P,f,f], orient pairs by [P,g,f] = -[P,f,g],
// compose chains through matching middle forms, split orthogonal sums of
// free triples. Result is canonical for the syntactic relations.
VElement v_reduce(const VElement& x);

// (P, g, f) |-> (P, u g, u f) for a unit u.
VTriple unit_action(const RingElement& u, const VTriple& t);

// Ambient matrix of the hyperbolic form H_P on P + P^dual inside R^2m:
// [[0, pi^t], [-pi, 0]].
Matrix hyperbolic(const ProjModule& p);

// Lemma 4.8 word: a two-factor elementary word alpha on (P+Q) + (P+Q)^dual
// with alpha^t (chi + can chi^-1 + H_Q) alpha = H_P + H_Q, for chi a skew
// invertible p x p form on free P and Q free of rank q. The triangular
// correction factor keeps every coefficient in the base ring, so no
// assumption on 2 is needed.
ElemWord hyperbolic_diagonalize(const Matrix& chi, size_t q_rank);

// The assembled input form of hyperbolic_diagonalize (for callers/tests).
Matrix hyperbolic_diagonalize_input(const Matrix& chi, size_t q_rank);

// Lemma 2.10: split chi on R^{2n+2} as phi^t chi phi = psi + psi_2 with an
// explicit elementary word phi. Requires a Bezout-solver ring family.
std::pair<ElemWord, Matrix> split_off_hyperbolic(const Matrix& chi);

// Section 3.2 embedding of a triple on P (idempotent pi in R^m) into a free
// triple on R^2m = (P+Q) + (P+Q)^dual with Q = image(I - pi):
//   g |-> [[g, (I-pi)^t], [-(I-pi), can g^-1]],  f likewise with the same
// g-inverse block.
VTriple free_embed(const VTriple& t);

}  // namespace vsym
