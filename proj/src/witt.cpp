#include "vsym/witt.hpp"

#include <algorithm>
#include <map>

namespace vsym {

namespace {

Matrix psi_matrix(const Ring& R, size_t halfsize) {
    if (halfsize == 0) return Matrix(R, 0, 0);
    return standard_form(R, standard_kind::psi, halfsize);
}

void require_form_ring(const Ring& R) {
    if (R->family == ring_family::integers) return;  // exact skew algebra still makes sense
    if (!R->two_is_unit())
        throw domain_error("form-level objects require 2 to be a unit in " + R->text());
}

}  // namespace

// ---------------------------------------------------------------------------
// WittRep

WittRep::WittRep(Matrix m) : m_(std::move(m)), pf_(m_.ring()->zero()) {
    require_form_ring(m_.ring());
    if (!m_.is_skew()) throw domain_error("Witt representative must be skew-symmetric");
    if (m_.rows() % 2 != 0) throw domain_error("Witt representative must have even size");
    pf_ = pfaffian(m_);
    if (!is_unit(pf_)) throw domain_error("Witt representative must have unit Pfaffian");
}

WittRep stabilize(const WittRep& m, size_t s) {
    if (s == 0) return m;
    return WittRep(orth_sum(m.matrix(), psi_matrix(m.matrix().ring(), s)));
}

WittRep witt_inverse(const WittRep& m) {
    const Ring& R = m.matrix().ring();
    Matrix sigma = standard_form(R, standard_kind::sigma, m.size() / 2);
    return WittRep(sigma * inverse(m.matrix()) * sigma);
}

bool verify_equiv(const WittRep& m, const WittRep& n, const EquivCert& cert) {
    size_t total = m.size() + n.size() + 2 * cert.stab;
    if (cert.word.dim() != total)
        throw domain_error("certificate word has dimension " + std::to_string(cert.word.dim()) +
                           ", expected " + std::to_string(total));
    Matrix lhs = orth_sum(m.matrix(), psi_matrix(m.matrix().ring(), n.size() / 2 + cert.stab));
    Matrix rhs = orth_sum(n.matrix(), psi_matrix(n.matrix().ring(), m.size() / 2 + cert.stab));
    return lhs == congruence(eval_word(cert.word), rhs);
}

// ---------------------------------------------------------------------------
// VTriple / VElement

VTriple::VTriple(ProjModule mod, Matrix g, Matrix f)
    : mod_(std::move(mod)), g_(std::move(g)), f_(std::move(f)) {
    require_form_ring(mod_.ring());
    size_t m = mod_.ambient();
    if (g_.rows() != m || g_.cols() != m || f_.rows() != m || f_.cols() != m)
        throw domain_error("triple forms must be ambient matrices");
    const Matrix& pi = mod_.idem();
    for (const Matrix* b : {&g_, &f_}) {
        if (!b->is_skew()) throw domain_error("triple forms must be skew-symmetric");
        if (pi.transpose() * *b * pi != *b)
            throw domain_error("form does not factor through the module idempotent");
        restricted_inverse(*b, pi);  // must be invertible on the module
    }
}

int VTriple::cmp(const VTriple& a, const VTriple& b) {
    int c = ProjModule::cmp(a.mod_, b.mod_);
    if (c != 0) return c;
    c = Matrix::cmp(a.g_, b.g_);
    if (c != 0) return c;
    return Matrix::cmp(a.f_, b.f_);
}

VElement VElement::single(VTriple t) {
    VElement e;
    e.add(t, 1);
    return e;
}

VElement& VElement::add(const VTriple& t, long coeff) {
    if (coeff == 0) return *this;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), t,
        [](const auto& term, const VTriple& key) { return VTriple::cmp(term.first, key) < 0; });
    if (it != terms_.end() && VTriple::cmp(it->first, t) == 0) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {t, coeff});
    }
    return *this;
}

VElement operator+(const VElement& a, const VElement& b) {
    VElement out = a;
    for (const auto& [t, c] : b.terms_) out.add(t, c);
    return out;
}

// ---------------------------------------------------------------------------
// nu and xi

VElement nu(const WittRep& m) {
    const Ring& R = m.matrix().ring();
    ProjModule free = ProjModule::free_module(R, m.size());
    return VElement::single(VTriple(free, psi_matrix(R, m.size() / 2), m.matrix()));
}

WittRep xi(const VTriple& t) {
    if (!t.module().is_free()) throw domain_error("xi expects a triple on a free module");
    const Ring& R = t.module().ring();
    size_t n2 = t.module().rank();
    if (n2 % 2 != 0) throw domain_error("xi expects even rank");
    Matrix sigma = standard_form(R, standard_kind::sigma, n2 / 2);
    return WittRep(orth_sum(t.f(), sigma * inverse(t.g()) * sigma));
}

// ---------------------------------------------------------------------------
// v_reduce

namespace {

// Finest splitting of a free-module triple along common block-diagonal cuts.
std::vector<VTriple> split_triple(const VTriple& t) {
    if (!t.module().is_free()) return {t};
    size_t n = t.module().rank();
    const Ring& R = t.module().ring();
    std::vector<VTriple> out;
    size_t start = 0;
    for (size_t cut = 1; cut <= n; ++cut) {
        if (cut < n) {
            bool clean = true;
            for (size_t i = start; i < cut && clean; ++i)
                for (size_t j = cut; j < n && clean; ++j)
                    if (!t.g().at(i, j).is_zero() || !t.f().at(i, j).is_zero()) clean = false;
            if (!clean) continue;
        }
        size_t len = cut - start;
        Matrix g = t.g().block(start, start, len, len);
        Matrix f = t.f().block(start, start, len, len);
        out.emplace_back(ProjModule::free_module(R, len), g, f);
        start = cut;
    }
    return out;
}

}  // namespace

VElement v_reduce(const VElement& x) {
    // Each [P, g, f] behaves like delta(f) - delta(g); collecting deltas per
    // module realizes the chain and antisymmetry relations syntactically.
    std::map<std::string, std::pair<ProjModule, std::map<std::string, std::pair<Matrix, long>>>>
        buckets;
    auto module_key = [](const ProjModule& p) {
        return std::to_string(p.rank()) + "|" + p.idem().text();
    };
    for (const auto& [triple, coeff] : x.terms()) {
        for (const VTriple& piece : split_triple(triple)) {
            auto& bucket = buckets.try_emplace(module_key(piece.module()), piece.module(),
                                               std::map<std::string, std::pair<Matrix, long>>{})
                               .first->second;
            auto upd = [&](const Matrix& form, long d) {
                auto it = bucket.second.try_emplace(form.text(), form, 0).first;
                it->second.second += d;
                if (it->second.second == 0) bucket.second.erase(it);
            };
            upd(piece.f(), coeff);
            upd(piece.g(), -coeff);
        }
    }

    VElement out;
    for (auto& [key, bucket] : buckets) {
        std::vector<std::pair<Matrix, long>> pos, neg;
        for (auto& [fk, fc] : bucket.second) {
            if (fc.second > 0)
                pos.push_back(fc);
            else
                neg.push_back({fc.first, -fc.second});
        }
        size_t pi = 0, ni = 0;
        while (pi < pos.size() && ni < neg.size()) {
            long take = std::min(pos[pi].second, neg[ni].second);
            out.add(VTriple(bucket.first, neg[ni].first, pos[pi].first), take);
            pos[pi].second -= take;
            neg[ni].second -= take;
            if (pos[pi].second == 0) ++pi;
            if (neg[ni].second == 0) ++ni;
        }
        if (pi != pos.size() || ni != neg.size())
            throw verify_error("internal: unbalanced V element");
    }
    return out;
}

VTriple unit_action(const RingElement& u, const VTriple& t) {
    if (!is_unit(u)) throw domain_error("unit_action requires a unit");
    return VTriple(t.module(), t.g().scaled(u), t.f().scaled(u));
}

// ---------------------------------------------------------------------------
// Hyperbolic forms

Matrix hyperbolic(const ProjModule& p) {
    size_t m = p.ambient();
    Matrix h(p.ring(), 2 * m, 2 * m);
    h.set_block(0, m, p.idem().transpose());
    h.set_block(m, 0, -p.idem());
    return h;
}

Matrix hyperbolic_diagonalize_input(const Matrix& chi, size_t q_rank) {
    const Ring& R = chi.ring();
    size_t p = chi.rows(), n = p + q_rank;
    Matrix in(R, 2 * n, 2 * n);
    in.set_block(0, 0, chi);
    for (size_t i = 0; i < q_rank; ++i) {
        in.set(p + i, n + p + i, R->one());
        in.set(n + p + i, p + i, -R->one());
    }
    in.set_block(n, n, restricted_inverse(chi, Matrix::identity(R, p)));
    return in;
}

ElemWord hyperbolic_diagonalize(const Matrix& chi, size_t q_rank) {
    if (!chi.is_skew()) throw domain_error("hyperbolic_diagonalize requires a skew form");
    const Ring& R = chi.ring();
    size_t p = chi.rows(), n = p + q_rank;
    Matrix chi_inv = inverse(chi);

    BlockDecomposition blocks(R, {n, n});
    ElemWord w(blocks);

    Matrix sa(R, 2 * n, 2 * n);
    sa.set_block(0, n, chi_inv);
    w.push(0, 1, sa);

    // X - X^t = -chi with X strictly upper triangular; exact over any ring.
    Matrix x(R, p, p);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = i + 1; j < p; ++j) x.set(i, j, -chi.at(i, j));
    Matrix sx(R, 2 * n, 2 * n);
    sx.set_block(n, 0, x);
    w.push(1, 0, sx);

    Matrix target(R, 2 * n, 2 * n);
    target.set_block(0, n, Matrix::identity(R, n));
    target.set_block(n, 0, -Matrix::identity(R, n));
    if (congruence(eval_word(w), hyperbolic_diagonalize_input(chi, q_rank)) != target)
        throw verify_error("internal: hyperbolic diagonalization fails its congruence");
    return w;
}

// ---------------------------------------------------------------------------
// Lemma 2.10 split

std::pair<ElemWord, Matrix> split_off_hyperbolic(const Matrix& chi) {
    if (!chi.is_skew()) throw domain_error("split_off_hyperbolic requires a skew form");
    size_t dim = chi.rows();
    if (dim < 4 || dim % 2 != 0)
        throw domain_error("split_off_hyperbolic expects an even form of size >= 4");
    const Ring& R = chi.ring();
    size_t last = dim - 1;

    // d = chi(-, e_last) restricted to the first dim-1 coordinates
    Matrix dcol = chi * col_vector(R, [&] {
        std::vector<RingElement> v(dim, R->zero());
        v[last] = R->one();
        return v;
    }());
    Matrix drow(R, 1, dim - 1);
    for (size_t j = 0; j + 1 < dim; ++j) drow.set(0, j, dcol.at(j, 0));

    ElemWord w1 = reduce_row_to_last(drow);

    BlockDecomposition fine(R, std::vector<size_t>(dim, 1));
    ElemWord w(fine);
    for (const auto& f : w1.factors()) {
        Matrix coeff(R, dim, dim);
        coeff.set_block(0, 0, f.coeff());
        w.push(f.target(), f.source(), std::move(coeff));
    }

    Matrix chi1 = congruence(eval_word(w), chi);
    // c = chi'(-, e_{dim-2}) restricted to the first dim-1 coordinates
    for (size_t j = 0; j + 1 < dim; ++j) {
        RingElement cj = chi1.at(j, dim - 2);
        if (cj.is_zero()) continue;
        Matrix coeff(R, dim, dim);
        coeff.set(last, j, cj);
        w.push(last, j, std::move(coeff));
    }

    Matrix split = congruence(eval_word(w), chi);
    Matrix psi_part = split.block(0, 0, dim - 2, dim - 2);
    Matrix expect = orth_sum(psi_part, psi_matrix(R, 1));
    if (split != expect)
        throw verify_error("internal: split_off_hyperbolic congruence is not psi-split");
    if (!is_unit(pfaffian(psi_part)))
        throw verify_error("internal: split_off_hyperbolic produced a degenerate form");
    return {w, psi_part};
}

// ---------------------------------------------------------------------------
// Free embedding of triples

VTriple free_embed(const VTriple& t) {
    const ProjModule& p = t.module();
    const Ring& R = p.ring();
    size_t m = p.ambient();
    Matrix q = Matrix::identity(R, m) - p.idem();
    Matrix k = restricted_inverse(t.g(), p.idem());
    if (!k.is_skew())
        throw verify_error("internal: restricted inverse of g is not skew");

    auto embed = [&](const Matrix& form) {
        Matrix e(R, 2 * m, 2 * m);
        e.set_block(0, 0, form);
        e.set_block(0, m, q.transpose());
        e.set_block(m, 0, -q);
        e.set_block(m, m, k);
        return e;
    };
    return VTriple(ProjModule::free_module(R, 2 * m), embed(t.g()), embed(t.f()));
}

}  // namespace vsym
