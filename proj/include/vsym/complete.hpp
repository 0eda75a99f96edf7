#pragma once

#include "vsym/projmod.hpp"

namespace vsym {

// Determinant-1 completion of an epimorphism (a0, aR^2) : P0 + R -> R,
// stored as an ambient automorphism (identity on the complement of P0 + R).
struct Completion {
    Matrix phi;     // (m+1) x (m+1), det = 1
    Matrix target;  // 1 x (m+1): the epimorphism (a0, aR^2)
};

// Krusemeyer's explicit completion of (b, c, a^2) under qb + rc + ap = 1:
//   [ -p-qr   q^2    -c+2aq ]
//   [ -r^2   -p+qr    b+2ar ]
//   [  b      c       a^2   ]
// with determinant 1.
Matrix krusemeyer(const RingElement& b, const RingElement& c, const RingElement& a,
                  const RingElement& q, const RingElement& r, const RingElement& p);

// The generalization: for a = (a0, aR) with section s, s(1) = (q, p),
//   phi0 = -(pi_P0 s) chi_0(q) - p id_P0,   phiR(1) = 2 aR q + chi_0^-1(a0),
// assembled as [[phi0, phiR], [a0, aR^2]]. Both completion invariants are
// verified before returning.
Completion generalized_completion(const Trivialization& triv, const UmEpi& e);

}  // namespace vsym
