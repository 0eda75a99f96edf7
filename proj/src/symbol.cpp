#include "vsym/symbol.hpp"

namespace vsym {

namespace {

void require_witness(const Matrix& a_row, const Matrix& b_col) {
    if (a_row.rows() != 1 || a_row.cols() != 3 || b_col.rows() != 3 || b_col.cols() != 1)
        throw domain_error("classical symbol expects a row and witness of length 3");
    if (!(a_row * b_col).at(0, 0).is_one())
        throw domain_error("witness invalid: sum a_i b_i != 1");
}

// (i + 1) : P0 + R^2 -> P(a) + R + R in ambient coordinates, i = r + a.
Matrix i_plus_one(const UmEpi& e) {
    const Ring& R = e.base().ring();
    size_t n = e.ambient();  // m + 1
    Matrix rho = e.total_idem() - e.s() * e.a();
    Matrix out(R, n + 2, n + 1);
    out.set_block(0, 0, rho);
    out.set_block(n, 0, e.a());
    out.set(n + 1, n, R->one());
    return out;
}

}  // namespace

Matrix classical_vaserstein(const Matrix& a_row, const Matrix& b_col) {
    require_witness(a_row, b_col);
    const Ring& R = a_row.ring();
    auto a = [&](size_t i) { return a_row.at(0, i); };
    auto b = [&](size_t i) { return b_col.at(i, 0); };
    Matrix v(R, 4, 4);
    for (size_t i = 0; i < 3; ++i) {
        v.set(0, i + 1, -a(i));
        v.set(i + 1, 0, a(i));
    }
    v.set(1, 2, -b(2));
    v.set(2, 1, b(2));
    v.set(1, 3, b(1));
    v.set(3, 1, -b(1));
    v.set(2, 3, -b(0));
    v.set(3, 2, b(0));
    if (!pfaffian(v).is_one()) throw verify_error("internal: V(a,b) must have Pfaffian 1");
    return v;
}

Matrix classical_sigma(const Ring& ring) {
    Matrix s(ring, 4, 4);
    s.set(0, 3, -ring->one());
    s.set(1, 0, ring->one());
    s.set(2, 1, ring->one());
    s.set(3, 2, ring->one());
    return s;
}

Matrix pulled_back_form(const Trivialization& triv, const UmEpi& e) {
    if (e.free_summands() != 1)
        throw domain_error("the generalized symbol is defined for epimorphisms on P0 + R");
    if (e.base().rank() != 2) throw domain_error("the base module must have rank 2");
    const Ring& R = e.base().ring();
    Matrix chi_a = chi_a_form(e, triv);
    Matrix big = orth_sum(chi_a, standard_form(R, standard_kind::psi, 1));
    return congruence(i_plus_one(e), big);
}

SymbolResult generalized_symbol(const Trivialization& triv, const UmEpi& e) {
    const Ring& R = e.base().ring();
    size_t m = e.base().ambient();

    Matrix chi0 = chi0_form(e.base(), triv);
    Matrix g_base = orth_sum(chi0, standard_form(R, standard_kind::psi, 1));
    Matrix f_base = pulled_back_form(triv, e);

    Matrix pi2(R, m + 2, m + 2);
    pi2.set_block(0, 0, e.base().idem());
    pi2.set(m, m, R->one());
    pi2.set(m + 1, m + 1, R->one());

    VTriple base(ProjModule(pi2, 4), g_base, f_base);
    VTriple embedded = free_embed(base);
    WittRep w = xi(embedded);
    if (!w.pf().is_one())
        throw verify_error("internal: generalized symbol has Pfaffian != 1 (Lemma 4.2 violated)");
    return SymbolResult{base, embedded, w, w.pf()};
}

ElemWord section_independence_witness(const Trivialization& triv, const Matrix& a_row,
                                      const Matrix& s, const Matrix& t, const ProjModule& p0) {
    UmEpi es(p0, a_row, s);
    UmEpi et(p0, a_row, t);
    const Ring& R = p0.ring();
    size_t m = p0.ambient();

    // d(x) = lambda3(s ^ t ^ x) on P0 + R, split into its P0 and R parts
    Matrix d(R, 1, m + 1);
    for (size_t j = 0; j <= m; ++j) {
        Matrix ej(R, m + 1, 1);
        ej.set(j, 0, R->one());
        d.set(0, j, lambda3(p0, triv, s, t, ej));
    }

    BlockDecomposition blocks(R, {m, 1, 1}, 0, p0.idem());
    ElemWord w(blocks);
    Matrix d0(R, m + 2, m + 2);
    bool d0_zero = true;
    for (size_t j = 0; j < m; ++j) {
        d0.set(m + 1, j, -d.at(0, j));
        if (!d.at(0, j).is_zero()) d0_zero = false;
    }
    if (!d0_zero) w.push(2, 0, d0);
    if (!d.at(0, m).is_zero()) {
        Matrix dr(R, m + 2, m + 2);
        dr.set(m + 1, m, -d.at(0, m));
        w.push(2, 1, dr);
    }

    Matrix vs = pulled_back_form(triv, es);
    Matrix vt = pulled_back_form(triv, et);
    if (congruence(eval_word(w), vs) != vt)
        throw verify_error("internal: section independence witness fails its congruence");
    return w;
}

bool elementary_invariance_check(const Trivialization& triv, const UmEpi& e, const ElemWord& phi) {
    const Ring& R = e.base().ring();
    size_t n = e.ambient();
    if (phi.dim() != n) throw domain_error("word dimension does not match P0 + R");

    Matrix phi_m = eval_word(phi);
    Matrix phi_inv = eval_word(invert_word(phi));

    Matrix phi_plus_one(R, n + 1, n + 1);
    phi_plus_one.set_block(0, 0, phi_m);
    phi_plus_one.set(n, n, R->one());

    Matrix lhs = congruence(phi_plus_one, pulled_back_form(triv, e));

    UmEpi moved(e.base(), e.a() * phi_m, phi_inv * e.s());
    Matrix rhs = pulled_back_form(triv, moved);
    return lhs == rhs;
}

bool scale_check(const Trivialization& triv, const UmEpi& e, const RingElement& u) {
    if (!is_unit(u)) throw domain_error("scale_check requires a unit");
    const Ring& R = e.base().ring();
    size_t m = e.base().ambient();

    Trivialization scaled = triv.scaled(u);
    Matrix g_scaled = orth_sum(chi0_form(e.base(), scaled), standard_form(R, standard_kind::psi, 1));
    Matrix f_scaled = pulled_back_form(scaled, e);

    Matrix g_orig = orth_sum(chi0_form(e.base(), triv), standard_form(R, standard_kind::psi, 1));
    Matrix f_orig = pulled_back_form(triv, e);

    Matrix h = Matrix::identity(R, m + 2);
    h.set(m + 1, m + 1, u);

    return congruence(h, g_scaled) == g_orig.scaled(u) &&
           congruence(h, f_scaled) == f_orig.scaled(u);
}

bool coincide_classical_check(const Matrix& a_row, const Matrix& b_col) {
    require_witness(a_row, b_col);
    const Ring& R = a_row.ring();

    // P0 = R^2 with the trivialization w = -(e1 ^ e2)
    ProjModule p0 = ProjModule::free_module(R, 2);
    Matrix w(R, 1, 1), l(R, 1, 1);
    w.set(0, 0, -R->one());
    Trivialization neg_theta(p0, w.transpose(), w);

    UmEpi e(p0, a_row, b_col);
    SymbolResult sym = generalized_symbol(neg_theta, e);
    const Matrix& pulled = sym.base.f();

    Matrix c = classical_vaserstein(a_row, b_col);
    Matrix sigma = classical_sigma(R);
    Matrix psi4 = standard_form(R, standard_kind::psi, 2);

    // isometry diag(1,1,1,-1) carries ((-psi2) + psi2, pulled) to (-psi4, sigma^t C sigma)
    Matrix h = Matrix::identity(R, 4);
    h.set(3, 3, -R->one());
    Matrix neg_psi2_psi2 = orth_sum(-standard_form(R, standard_kind::psi, 1),
                                    standard_form(R, standard_kind::psi, 1));
    if (sym.base.g() != neg_psi2_psi2) return false;
    if (congruence(h, neg_psi2_psi2) != -psi4) return false;
    if (congruence(h, pulled) != congruence(sigma, c)) return false;

    // [R^4, -psi_4, psi_4] = 0: diag(1,-1,1,-1) is elementary and conjugates
    // psi_4 to -psi_4
    Ring Z = RingSpec::integers();
    Matrix flip_z(Z, 4, 4);
    flip_z.set(0, 0, Z->one());
    flip_z.set(1, 1, -Z->one());
    flip_z.set(2, 2, Z->one());
    flip_z.set(3, 3, -Z->one());
    Matrix flip = eval_word(integer_elementary_word(R, flip_z));
    if (congruence(flip, psi4) != -psi4) return false;

    // sigma is elementary, so [R^4, psi_4, sigma^t C sigma] = [R^4, psi_4, C]
    Matrix sigma_z(Z, 4, 4);
    sigma_z.set(0, 3, -Z->one());
    sigma_z.set(1, 0, Z->one());
    sigma_z.set(2, 1, Z->one());
    sigma_z.set(3, 2, Z->one());
    Matrix sigma_check = eval_word(integer_elementary_word(R, sigma_z));
    return sigma_check == sigma;
}

}  // namespace vsym
