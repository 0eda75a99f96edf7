#include "vsym/complete.hpp"

namespace vsym {

Matrix krusemeyer(const RingElement& b, const RingElement& c, const RingElement& a,
                  const RingElement& q, const RingElement& r, const RingElement& p) {
    const Ring& R = b.ring();
    RingElement side = q * b + r * c + a * p;
    if (!side.is_one()) throw domain_error("krusemeyer requires qb + rc + ap = 1");
    RingElement two = R->from_int(2);
    Matrix m(R, 3, 3);
    m.set(0, 0, -p - q * r);
    m.set(0, 1, q * q);
    m.set(0, 2, -c + two * a * q);
    m.set(1, 0, -(r * r));
    m.set(1, 1, -p + q * r);
    m.set(1, 2, b + two * a * r);
    m.set(2, 0, b);
    m.set(2, 1, c);
    m.set(2, 2, a * a);
    if (!determinant(m).is_one()) throw verify_error("internal: Krusemeyer determinant != 1");
    return m;
}

Completion generalized_completion(const Trivialization& triv, const UmEpi& e) {
    if (e.free_summands() != 1)
        throw domain_error("generalized_completion expects an epimorphism on P0 + R");
    if (e.base().rank() != 2) throw domain_error("the base module must have rank 2");
    const Ring& R = e.base().ring();
    size_t m = e.base().ambient();

    Matrix a0 = e.a().block(0, 0, 1, m);
    RingElement ar = e.a().at(0, m);
    Matrix qcol = e.s().block(0, 0, m, 1);
    RingElement p = e.s().at(m, 0);

    Matrix chi0 = chi0_form(e.base(), triv);
    // chi_0(q) as a functional row; phi0 = -q chi_0(q) - p id_P0
    Matrix chi0_q = (chi0 * qcol).transpose();
    Matrix phi0 = -(qcol * chi0_q) - e.base().idem().scaled(p);

    // phiR = 2 aR q + chi_0^-1(a0), realized by the contraction a0 -| w
    Matrix phir = qcol.scaled(R->from_int(2) * ar) - chi0_contract_inverse(e.base(), triv, a0);

    Matrix phi(R, m + 1, m + 1);
    phi.set_block(0, 0, phi0);
    phi.set_block(0, m, phir);
    phi.set_block(m, 0, a0);
    phi.set(m, m, ar * ar);

    // extend by the identity on the complement of P0 + R
    Matrix pihat = e.total_idem();
    Matrix ext = phi + (Matrix::identity(R, m + 1) - pihat);

    Matrix target(R, 1, m + 1);
    target.set_block(0, 0, a0);
    target.set(0, m, ar * ar);

    if (!determinant(ext).is_one())
        throw verify_error("completion determinant != 1");
    Matrix bottom(R, 1, m + 1);
    for (size_t j = 0; j <= m; ++j) bottom.set(0, j, ext.at(m, j));
    if (bottom != target) throw verify_error("completion bottom row is not (a0, aR^2)");
    return Completion{ext, target};
}

}  // namespace vsym
