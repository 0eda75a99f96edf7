#include "vsym/instances.hpp"

#include "vsym/elem.hpp"

namespace vsym {

long InstanceGen::pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

RingElement InstanceGen::element(const Ring& ring, long span) {
    if (ring->finite()) return ring->from_int(pick(0, static_cast<long>(ring->size().get_ui()) - 1));
    return ring->from_int(pick(-span, span));
}

RingElement InstanceGen::unit(const Ring& ring) {
    for (int tries = 0; tries < 4096; ++tries) {
        RingElement x = ring->family == ring_family::integers
                            ? ring->from_int(pick(0, 1) ? 1 : -1)
                            : element(ring);
        if (is_unit(x)) return x;
    }
    return ring->one();
}

Matrix InstanceGen::unimodular_row3(const Ring& ring) {
    for (int tries = 0; tries < 65536; ++tries) {
        Matrix row(ring, 1, 3);
        for (size_t j = 0; j < 3; ++j) row.set(0, j, element(ring));
        try {
            bezout_witness({row.at(0, 0), row.at(0, 1), row.at(0, 2)});
            return row;
        } catch (const not_unimodular&) {
        }
    }
    throw domain_error("could not sample a unimodular row over " + ring->text());
}

Matrix InstanceGen::witness_for(const Matrix& row) {
    std::vector<RingElement> entries;
    for (size_t j = 0; j < row.cols(); ++j) entries.push_back(row.at(0, j));
    return col_vector(row.ring(), bezout_witness(entries));
}

std::pair<ProjModule, Trivialization> InstanceGen::free_p0(const Ring& ring,
                                                           const RingElement& u) {
    auto uinv = is_unit(u);
    if (!uinv) throw domain_error("free trivialization requires a unit");
    ProjModule p0 = ProjModule::free_module(ring, 2);
    Matrix w(ring, 1, 1), l(ring, 1, 1);
    w.set(0, 0, u);
    l.set(0, 0, *uinv);
    return {p0, Trivialization(p0, w.transpose(), l)};
}

std::pair<ProjModule, Trivialization> InstanceGen::kernel_p0(const Ring& ring) {
    Matrix c = unimodular_row3(ring);
    Matrix t = witness_for(c);
    return trivialization_from_row(c, t);
}

UmEpi InstanceGen::random_epi(const ProjModule& p0) {
    const Ring& R = p0.ring();
    size_t n = p0.ambient() + 1;
    Matrix pihat(R, n, n);
    pihat.set_block(0, 0, p0.idem());
    pihat.set(n - 1, n - 1, R->one());

    for (int tries = 0; tries < 65536; ++tries) {
        Matrix raw(R, 1, n);
        for (size_t j = 0; j < n; ++j) raw.set(0, j, element(R, 4));
        Matrix a = raw * pihat;
        std::vector<RingElement> entries;
        for (size_t j = 0; j < n; ++j) entries.push_back(a.at(0, j));
        try {
            Matrix s = pihat * col_vector(R, bezout_witness(entries));
            return UmEpi(p0, a, s);
        } catch (const not_unimodular&) {
        }
    }
    throw domain_error("could not sample an epimorphism over " + R->text());
}

UmEpi InstanceGen::basepoint_epi(const ProjModule& p0) {
    const Ring& R = p0.ring();
    size_t n = p0.ambient() + 1;
    Matrix a(R, 1, n);
    a.set(0, n - 1, R->one());
    Matrix s(R, n, 1);
    s.set(n - 1, 0, R->one());
    return UmEpi(p0, a, s);
}

Matrix InstanceGen::second_section(const UmEpi& e) {
    const Ring& R = e.base().ring();
    size_t n = e.ambient();
    Matrix rho = e.total_idem() - e.s() * e.a();
    for (int tries = 0; tries < 65536; ++tries) {
        Matrix rnd(R, n, 1);
        for (size_t i = 0; i < n; ++i) rnd.set(i, 0, element(R, 4));
        Matrix t = e.s() + rho * rnd;
        if (t != e.s()) return t;
    }
    return e.s();
}

ElemWord InstanceGen::random_word_p0r(const ProjModule& p0, size_t factors) {
    const Ring& R = p0.ring();
    size_t m = p0.ambient();
    BlockDecomposition blocks(R, {m, 1}, 0, p0.idem());
    ElemWord w(blocks);
    for (size_t k = 0; k < factors; ++k) {
        if (pick(0, 1)) {
            // P0 -> R: row through the idempotent
            Matrix raw(R, 1, m);
            for (size_t j = 0; j < m; ++j) raw.set(0, j, element(R, 3));
            Matrix row = raw * p0.idem();
            Matrix coeff(R, m + 1, m + 1);
            for (size_t j = 0; j < m; ++j) coeff.set(m, j, row.at(0, j));
            w.push(1, 0, std::move(coeff));
        } else {
            // R -> P0: column in the image of the idempotent
            Matrix raw(R, m, 1);
            for (size_t i = 0; i < m; ++i) raw.set(i, 0, element(R, 3));
            Matrix col = p0.idem() * raw;
            Matrix coeff(R, m + 1, m + 1);
            for (size_t i = 0; i < m; ++i) coeff.set(i, m, col.at(i, 0));
            w.push(0, 1, std::move(coeff));
        }
    }
    return w;
}

Matrix InstanceGen::skew_invertible(const Ring& ring, size_t n) {
    for (int tries = 0; tries < 65536; ++tries) {
        Matrix m(ring, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                RingElement x = element(ring, 3);
                m.set(i, j, x);
                m.set(j, i, -x);
            }
        if (is_unit(pfaffian(m))) return m;
    }
    throw domain_error("could not sample an invertible skew form over " + ring->text());
}

}  // namespace vsym
