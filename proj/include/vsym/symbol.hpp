#pragma once

#include "vsym/witt.hpp"

namespace vsym {

// Everything the generalized Vaserstein symbol of one epimorphism produces:
// the defining triple on P0 + R^2, its free embedding, the Witt
// representative through xi, and the (always 1) Pfaffian.
struct SymbolResult {
    VTriple base;
    VTriple embedded;
    WittRep witt;
    RingElement pf;
};

// The classical 4x4 symbol matrix V(a, b) of a unimodular row with Bezout
// witness b; skew with Pfaffian a.b = 1.
Matrix classical_vaserstein(const Matrix& a_row, const Matrix& b_col);

// The E_4 identification matrix sigma (e1 -> e2 -> e3 -> e4 -> -e1).
Matrix classical_sigma(const Ring& ring);

// The form (i + 1)^t (chi_a + psi_2) (i + 1) on P0 + R^2 appearing in the
// generalized symbol, in ambient coordinates.
Matrix pulled_back_form(const Trivialization& triv, const UmEpi& e);

// The generalized Vaserstein symbol V(a) of an epimorphism a : P0 + R -> R
// with section s, for a rank-2 module with trivialized determinant.
// Asserts Pfaffian 1 of the xi image; failure signals an implementation bug.
SymbolResult generalized_symbol(const Trivialization& triv, const UmEpi& e);

// Theorem 4.1 witness: the elementary word phi = id - d e4 with
// d(x) = lambda3(s ^ t ^ x), verified to satisfy
// phi^t V(a, s) phi = V(a, t) before it is returned.
ElemWord section_independence_witness(const Trivialization& triv, const Matrix& a_row,
                                      const Matrix& s, const Matrix& t, const ProjModule& p0);

// Theorem 4.3 identity: both sides of
//   (phi + 1)^t V(a, s) (phi + 1) = V(a phi, phi^-1 s)
// computed independently and compared entrywise.
bool elementary_invariance_check(const Trivialization& triv, const UmEpi& e, const ElemWord& phi);

// Unit scaling: the symbol for u . triv matches the unit action of u on the
// symbol for triv after conjugating by diag(id, 1, u), entrywise.
bool scale_check(const Trivialization& triv, const UmEpi& e, const RingElement& u);

// Classical coincidence over P0 = R^2 with w = -(e1 ^ e2): the pulled-back
// form agrees with sigma^t V(a,b) sigma up to the explicit elementary
// isometries, certifying V_{-theta_0}(a) = [R^4, psi_4, V(a,b)] in V(R).
bool coincide_classical_check(const Matrix& a_row, const Matrix& b_col);

}  // namespace vsym
