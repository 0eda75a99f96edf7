#include "vsym/projmod.hpp"

namespace vsym {

size_t wedge2_dim(size_t m) { return m * (m - 1) / 2; }

size_t wedge2_index(size_t m, size_t i, size_t j) {
    if (i >= j || j >= m) throw domain_error("bad wedge2 index");
    // pairs (i, j), i < j, ordered lexicographically
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

size_t wedge3_dim(size_t m) { return m * (m - 1) * (m - 2) / 6; }

size_t wedge3_index(size_t m, size_t i, size_t j, size_t k) {
    if (i >= j || j >= k || k >= m) throw domain_error("bad wedge3 index");
    size_t idx = 0;
    for (size_t a = 0; a < i; ++a) idx += (m - a - 1) * (m - a - 2) / 2;
    for (size_t b = i + 1; b < j; ++b) idx += m - b - 1;
    return idx + (k - j - 1);
}

Matrix wedge2(const Matrix& x, const Matrix& y) {
    if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
        throw domain_error("wedge2 expects columns of one size");
    size_t m = x.rows();
    Matrix out(x.ring(), wedge2_dim(m), 1);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            out.set(wedge2_index(m, i, j), 0, x.at(i, 0) * y.at(j, 0) - x.at(j, 0) * y.at(i, 0));
    return out;
}

Matrix wedge2_map(const Matrix& a) {
    if (!a.is_square()) throw domain_error("wedge2_map expects a square matrix");
    size_t m = a.rows();
    Matrix out(a.ring(), wedge2_dim(m), wedge2_dim(m));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            Matrix col = wedge2(a.block(0, i, m, 1), a.block(0, j, m, 1));
            out.set_block(0, wedge2_index(m, i, j), col);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// ProjModule

ProjModule::ProjModule(Matrix idem, size_t rank) : idem_(std::move(idem)), rank_(rank) {
    if (!idem_.is_square()) throw domain_error("module idempotent must be square");
    if (!idem_.is_idempotent()) throw domain_error("module presentation is not idempotent");
    size_t m = idem_.rows();
    if (rank_ > m) throw domain_error("module rank exceeds ambient dimension");
    // char poly must be t^(m-r) (t-1)^r; this certifies constant rank
    auto cp = char_poly(idem_);
    const Ring& R = idem_.ring();
    std::vector<RingElement> expect{R->one()};
    for (size_t i = 0; i < rank_; ++i) {
        // multiply by (t - 1)
        expect.push_back(R->zero());
        for (size_t k = expect.size() - 1; k > 0; --k)
            expect[k] = expect[k] - expect[k - 1];
    }
    expect.resize(m + 1, R->zero());
    if (cp != expect)
        throw domain_error("idempotent does not have constant rank " + std::to_string(rank_));
}

ProjModule ProjModule::free_module(const Ring& ring, size_t n) {
    return ProjModule(Matrix::identity(ring, n), n);
}

bool ProjModule::is_free() const { return idem_ == Matrix::identity(ring(), ambient()); }

bool operator==(const ProjModule& a, const ProjModule& b) {
    return a.rank_ == b.rank_ && a.idem_ == b.idem_;
}

int ProjModule::cmp(const ProjModule& a, const ProjModule& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_ ? -1 : 1;
    return Matrix::cmp(a.idem_, b.idem_);
}

// ---------------------------------------------------------------------------
// Trivialization

Trivialization::Trivialization(const ProjModule& p, Matrix w, Matrix lambda)
    : w_(std::move(w)), lambda_(std::move(lambda)) {
    if (p.rank() != 2) throw domain_error("trivializations are for rank-2 modules");
    size_t d = wedge2_dim(p.ambient());
    if (w_.rows() != d || w_.cols() != 1 || lambda_.rows() != 1 || lambda_.cols() != d)
        throw domain_error("trivialization has wrong exterior-power dimensions");
    Matrix l2 = wedge2_map(p.idem());
    if (l2 * w_ != w_) throw domain_error("w is not fixed by Lambda^2 pi");
    if (lambda_ * l2 != lambda_) throw domain_error("lambda does not factor through Lambda^2 pi");
    if (!(lambda_ * w_).at(0, 0).is_one()) throw domain_error("lambda(w) != 1");
}

RingElement Trivialization::pair(const Matrix& x, const Matrix& y) const {
    return (lambda_ * wedge2(x, y)).at(0, 0);
}

Trivialization Trivialization::scaled(const RingElement& u) const {
    auto uinv = is_unit(u);
    if (!uinv) throw domain_error("trivialization scaling requires a unit");
    return Trivialization(w_.scaled(*uinv), lambda_.scaled(u));
}

// ---------------------------------------------------------------------------
// UmEpi and kernels

UmEpi::UmEpi(ProjModule base, Matrix a, Matrix s)
    : base_(std::move(base)), a_(std::move(a)), s_(std::move(s)) {
    size_t m = base_.ambient();
    if (a_.rows() != 1 || a_.cols() < m + 1 || s_.cols() != 1 || s_.rows() != a_.cols())
        throw domain_error("epimorphism data has wrong shape");
    Matrix pihat = total_idem();
    if (a_ * pihat != a_) throw domain_error("covector is not compatible with the idempotent");
    if (pihat * s_ != s_) throw domain_error("section does not lie in the module");
    if (!(a_ * s_).at(0, 0).is_one()) throw domain_error("a(s(1)) != 1: s is not a section of a");
}

Matrix UmEpi::total_idem() const {
    size_t m = base_.ambient(), n = a_.cols();
    Matrix pihat(base_.ring(), n, n);
    pihat.set_block(0, 0, base_.idem());
    for (size_t i = m; i < n; ++i) pihat.set(i, i, base_.ring()->one());
    return pihat;
}

ProjModule kernel_module(const UmEpi& e) {
    Matrix rho = e.total_idem() - e.s() * e.a();
    if (!(e.a() * rho).is_zero()) throw domain_error("kernel retraction fails a(pi - s a) = 0");
    return ProjModule(rho, e.base().rank() + e.free_summands() - 1);
}

std::pair<ProjModule, Trivialization> trivialization_from_row(const Matrix& c, const Matrix& t) {
    if (c.rows() != 1 || c.cols() != 3 || t.rows() != 3 || t.cols() != 1)
        throw domain_error("trivialization_from_row expects a row and a column of length 3");
    if (!(c * t).at(0, 0).is_one()) throw domain_error("c . t != 1: t is not a section of c");
    const Ring& R = c.ring();

    Matrix pi = Matrix::identity(R, 3) - t * c;
    ProjModule p(pi, 2);

    // w = c -| (e1^e2^e3) in lex coordinates (0,1), (0,2), (1,2)
    Matrix w(R, 3, 1);
    w.set(wedge2_index(3, 0, 1), 0, c.at(0, 2));
    w.set(wedge2_index(3, 0, 2), 0, -c.at(0, 1));
    w.set(wedge2_index(3, 1, 2), 0, c.at(0, 0));

    // lambda(x^y) = det[t, x, y]
    Matrix lambda(R, 1, 3);
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = i + 1; j < 3; ++j) {
            Matrix d(R, 3, 3);
            d.set_block(0, 0, t);
            d.set(i, 1, R->one());
            d.set(j, 2, R->one());
            lambda.set(0, wedge2_index(3, i, j), determinant(d));
        }
    }
    return {p, Trivialization(p, w, lambda)};
}

Matrix chi0_form(const ProjModule& p, const Trivialization& triv) {
    size_t m = p.ambient();
    const Matrix& pi = p.idem();
    Matrix b(p.ring(), m, m);
    for (size_t k = 0; k < m; ++k) {
        for (size_t l = k + 1; l < m; ++l) {
            RingElement v = triv.pair(pi.block(0, k, m, 1), pi.block(0, l, m, 1));
            b.set(k, l, v);
            b.set(l, k, -v);
        }
    }
    restricted_inverse(b, pi);  // certifies invertibility on the image of pi
    return b;
}

Matrix chi0_contract_inverse(const ProjModule& p, const Trivialization& triv, const Matrix& a0) {
    size_t m = p.ambient();
    if (a0.rows() != 1 || a0.cols() != m) throw domain_error("covector has wrong size");
    if (a0 * p.idem() != a0) throw domain_error("covector is not compatible with the idempotent");
    // q' = -(a0 -| w), where a -| (u^v) = a(u) v - a(v) u
    Matrix q(p.ring(), m, 1);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            const RingElement& wij = triv.w().at(wedge2_index(m, i, j), 0);
            if (wij.is_zero()) continue;
            q.set(j, 0, q.at(j, 0) - a0.at(0, i) * wij);
            q.set(i, 0, q.at(i, 0) + a0.at(0, j) * wij);
        }
    }
    return q;
}

RingElement lambda3(const ProjModule& p0, const Trivialization& triv, const Matrix& x,
                    const Matrix& y, const Matrix& z) {
    size_t m = p0.ambient();
    if (x.rows() != m + 1 || y.rows() != m + 1 || z.rows() != m + 1)
        throw domain_error("lambda3 expects columns over the ambient of P0 + R");
    Matrix xb = x.block(0, 0, m, 1), yb = y.block(0, 0, m, 1), zb = z.block(0, 0, m, 1);
    const RingElement &xr = x.at(m, 0), &yr = y.at(m, 0), &zr = z.at(m, 0);
    return triv.pair(xb, yb) * zr - triv.pair(xb, zb) * yr + triv.pair(yb, zb) * xr;
}

Matrix lambda3_covector(const ProjModule& p0, const Trivialization& triv) {
    size_t n = p0.ambient() + 1;
    const Ring& R = p0.ring();
    Matrix out(R, 1, wedge3_dim(n));
    auto unit = [&](size_t i) {
        Matrix c(R, n, 1);
        c.set(i, 0, R->one());
        return c;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k)
                out.set(0, wedge3_index(n, i, j, k), lambda3(p0, triv, unit(i), unit(j), unit(k)));
    return out;
}

Matrix chi_a_form(const UmEpi& e, const Trivialization& triv) {
    if (e.free_summands() != 1)
        throw domain_error("chi_a_form expects an epimorphism on P0 + R");
    size_t n = e.ambient();
    Matrix rho = e.total_idem() - e.s() * e.a();
    Matrix b(e.base().ring(), n, n);
    for (size_t k = 0; k < n; ++k) {
        for (size_t l = k + 1; l < n; ++l) {
            RingElement v =
                lambda3(e.base(), triv, rho.block(0, k, n, 1), rho.block(0, l, n, 1), e.s());
            b.set(k, l, v);
            b.set(l, k, -v);
        }
    }
    restricted_inverse(b, rho);  // chi_a must be invertible on the kernel
    return b;
}

}  // namespace vsym
