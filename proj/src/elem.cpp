#include "vsym/elem.hpp"

#include <algorithm>
#include <numeric>

namespace vsym {

// ---------------------------------------------------------------------------
// BlockDecomposition

BlockDecomposition::BlockDecomposition(Ring ring, std::vector<size_t> sizes)
    : ring_(std::move(ring)), sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw domain_error("block decomposition needs at least one block");
    offsets_.reserve(sizes_.size());
    for (size_t s : sizes_) {
        if (s == 0) throw domain_error("zero-size block");
        offsets_.push_back(dim_);
        dim_ += s;
    }
}

BlockDecomposition::BlockDecomposition(Ring ring, std::vector<size_t> sizes, size_t idem_index,
                                       Matrix idem)
    : BlockDecomposition(std::move(ring), std::move(sizes)) {
    if (idem_index >= sizes_.size()) throw domain_error("idempotent block index out of range");
    if (idem.rows() != sizes_[idem_index] || idem.cols() != sizes_[idem_index])
        throw domain_error("idempotent size does not match its block");
    if (!idem.is_idempotent()) throw domain_error("block projector is not idempotent");
    idem_index_ = idem_index;
    idem_ = std::move(idem);
}

const Matrix& BlockDecomposition::idem() const {
    if (!idem_) throw domain_error("decomposition has no idempotent block");
    return *idem_;
}

Matrix BlockDecomposition::projector(size_t i) const {
    Matrix p(ring_, dim_, dim_);
    if (idem_index_ && *idem_index_ == i) {
        p.set_block(offset(i), offset(i), *idem_);
    } else {
        for (size_t k = 0; k < size(i); ++k) p.set(offset(i) + k, offset(i) + k, ring_->one());
    }
    return p;
}

bool operator==(const BlockDecomposition& a, const BlockDecomposition& b) {
    if (!same_ring(a.ring_, b.ring_) || a.sizes_ != b.sizes_ || a.idem_index_ != b.idem_index_)
        return false;
    if (a.idem_index_ && *a.idem_ != *b.idem_) return false;
    return true;
}

// ---------------------------------------------------------------------------
// ElemFactor / ElemWord

ElemFactor::ElemFactor(const BlockDecomposition& blocks, size_t target, size_t source, Matrix coeff)
    : target_(target), source_(source), coeff_(std::move(coeff)) {
    if (target_ == source_) throw domain_error("elementary factor requires target != source");
    if (target_ >= blocks.count() || source_ >= blocks.count())
        throw domain_error("factor block index out of range");
    if (coeff_.rows() != blocks.dim() || coeff_.cols() != blocks.dim())
        throw domain_error("factor coefficient must be an ambient matrix");
    Matrix projected = blocks.projector(target_) * coeff_ * blocks.projector(source_);
    if (projected != coeff_)
        throw domain_error("factor coefficient does not respect its blocks");
}

Matrix ElemFactor::eval(const BlockDecomposition& blocks) const {
    return Matrix::identity(blocks.ring(), blocks.dim()) + coeff_;
}

ElemWord::ElemWord(BlockDecomposition blocks) : blocks_(std::move(blocks)) {}

void ElemWord::push(size_t target, size_t source, Matrix coeff) {
    factors_.emplace_back(blocks_, target, source, std::move(coeff));
}

void ElemWord::push(ElemFactor f) { factors_.push_back(std::move(f)); }

void ElemWord::append(const ElemWord& other) {
    if (blocks_ != other.blocks_) throw domain_error("cannot append word on different blocks");
    for (const auto& f : other.factors_) factors_.push_back(f);
}

Matrix eval_word(const ElemWord& w) {
    Matrix m = Matrix::identity(w.ring(), w.dim());
    for (const auto& f : w.factors()) m = m * f.eval(w.blocks());
    return m;
}

ElemWord invert_word(const ElemWord& w) {
    ElemWord inv(w.blocks());
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
        inv.push(it->target(), it->source(), -it->coeff());
    return inv;
}

// ---------------------------------------------------------------------------
// Whitehead and commutator words

ElemWord whitehead_word(const BlockDecomposition& blocks, const Matrix& f, const Matrix& g) {
    if (blocks.count() != 2) throw domain_error("whitehead_word needs exactly two blocks");
    const Ring& R = blocks.ring();
    Matrix id = Matrix::identity(R, blocks.dim());
    Matrix gf = g * f;
    Matrix inv_gf = inverse(id + gf);  // throws not_invertible when id + gf is singular

    ElemWord w(blocks);
    w.push(0, 1, -g);
    w.push(1, 0, -f);
    w.push(0, 1, g);
    w.push(0, 1, inv_gf * g - g);
    w.push(1, 0, f * g * f + f);
    return w;
}

ElemWord commutator_factorization(const BlockDecomposition& blocks, size_t i, size_t j, size_t k,
                                  const Matrix& s_ij, const Matrix& s_jk) {
    if (i == j || j == k || i == k)
        throw domain_error("commutator_factorization requires distinct blocks");
    ElemWord w(blocks);
    w.push(i, j, s_ij);
    w.push(j, k, s_jk);
    w.push(i, j, -s_ij);
    w.push(j, k, -s_jk);
    return w;
}

// ---------------------------------------------------------------------------
// Permutations and integer factorizations

bool is_even_permutation(const std::vector<size_t>& perm) {
    size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (size_t v : perm)
        if (v >= n) throw domain_error("bad permutation entry");
    size_t transpositions = 0;
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
            if (len > n) throw domain_error("not a permutation");
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

namespace {

struct RowOp {
    size_t a, b;  // row_a += lambda * row_b
    mpz_class lambda;
};

// Reduce an integer matrix of determinant 1 to the identity with row
// transvections; the recorded ops satisfy (T_m ... T_1) M = I.
std::vector<RowOp> reduce_integer_matrix(std::vector<std::vector<mpz_class>> g) {
    size_t n = g.size();
    std::vector<RowOp> ops;
    auto apply = [&](size_t a, size_t b, const mpz_class& lambda) {
        for (size_t j = 0; j < n; ++j) g[a][j] += lambda * g[b][j];
        ops.push_back({a, b, lambda});
    };

    for (size_t c = 0; c < n; ++c) {
        while (true) {
            // pick any nonzero entry below the pivot
            size_t r = c;
            for (size_t k = c + 1; k < n; ++k) {
                if (g[k][c] != 0) {
                    r = k;
                    break;
                }
            }
            if (r == c) {
                if (g[c][c] == 1) break;
                if (g[c][c] == -1) {
                    if (c + 1 >= n)
                        throw domain_error("integer matrix has determinant -1, not in SL");
                    apply(c + 1, c, 1);
                    apply(c, c + 1, -2);
                    apply(c + 1, c, 1);
                    break;
                }
                throw domain_error("integer matrix is not in SL_n(Z)");
            }
            if (g[c][c] == 0) {
                apply(c, r, 1);
                continue;
            }
            if (abs(g[r][c]) >= abs(g[c][c])) {
                mpz_class q = g[r][c] / g[c][c];
                apply(r, c, -q);
            } else {
                mpz_class q = g[c][c] / g[r][c];
                apply(c, r, -q);
            }
        }
        for (size_t r = 0; r < n; ++r) {
            if (r != c && g[r][c] != 0) apply(r, c, -g[r][c]);
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (g[i][j] != (i == j ? 1 : 0))
                throw domain_error("integer matrix reduction failed");
    return ops;
}

}  // namespace

ElemWord integer_elementary_word(const Ring& target, const Matrix& m_int) {
    if (m_int.ring()->family != ring_family::integers)
        throw domain_error("integer_elementary_word expects a matrix over Z");
    if (!m_int.is_square()) throw domain_error("integer_elementary_word expects a square matrix");
    size_t n = m_int.rows();
    std::vector<std::vector<mpz_class>> g(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = m_int.at(i, j).as_mpz();
    auto ops = reduce_integer_matrix(std::move(g));

    // (T_m ... T_1) M = I, so M = T_1^-1 ... T_m^-1.
    BlockDecomposition blocks(target, std::vector<size_t>(n, 1));
    ElemWord w(blocks);
    for (const auto& op : ops) {
        Matrix coeff(target, n, n);
        coeff.set(op.a, op.b, target->from_mpz(-op.lambda));
        w.push(op.a, op.b, std::move(coeff));
    }
    return w;
}

ElemWord permutation_word(const Ring& ring, const std::vector<size_t>& perm) {
    if (!is_even_permutation(perm)) throw domain_error("permutation is odd, not in E_n");
    Ring Z = RingSpec::integers();
    size_t n = perm.size();
    Matrix p(Z, n, n);
    for (size_t i = 0; i < n; ++i) p.set(perm[i], i, Z->one());
    return integer_elementary_word(ring, p);
}

// ---------------------------------------------------------------------------
// Unimodular row reduction

namespace {

std::vector<mpz_class> prime_factors(const mpz_class& n_in) {
    std::vector<mpz_class> out;
    mpz_class n = n_in;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (p > 1000000) break;
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
            throw unsupported_ring("modulus too large to factor for row reduction");
        out.push_back(n);
    }
    return out;
}

// Mutable row with op recording; an op adds lambda * entry(i) to entry(j),
// which is right multiplication by the transvection with coefficient at (i, j).
struct RowReducer {
    std::vector<RingElement> v;
    ElemWord word;

    RowReducer(const Matrix& row)
        : v(), word(BlockDecomposition(row.ring(), std::vector<size_t>(row.cols(), 1))) {
        for (size_t j = 0; j < row.cols(); ++j) v.push_back(row.at(0, j));
    }

    const Ring& ring() const { return word.ring(); }
    size_t n() const { return v.size(); }

    void op(size_t i, size_t j, const RingElement& lambda) {
        if (lambda.is_zero()) return;
        Matrix coeff(ring(), n(), n());
        coeff.set(i, j, lambda);
        word.push(i, j, std::move(coeff));
        v[j] += lambda * v[i];
    }

    // Entry i holds a unit u; drive the row to (0,...,0,1).
    void finish_with_unit(size_t i, const RingElement& u) {
        RingElement ui = *is_unit(u);
        for (size_t j = 0; j < n(); ++j)
            if (j != i && !v[j].is_zero()) op(i, j, -(v[j] * ui));
        size_t last = n() - 1;
        if (i != last) {
            op(i, last, ui);          // entry last becomes 1
            op(last, i, -v[i]);       // clear entry i
        } else if (!v[last].is_one()) {
            size_t j = 0;             // any other index
            op(last, j, ui);          // entry j becomes 1
            op(j, last, ring()->one() - v[last]);
            op(last, j, -v[j]);
        }
    }
};

}  // namespace

ElemWord reduce_row_to_last(const Matrix& row) {
    if (row.rows() != 1 || row.cols() < 2)
        throw domain_error("reduce_row_to_last expects a row of length >= 2");
    const Ring& R = row.ring();
    RowReducer red(row);
    size_t n = red.n();
    size_t last = n - 1;

    switch (R->family) {
        case ring_family::rationals:
        case ring_family::prime_field: {
            for (size_t i = 0; i < n; ++i) {
                if (auto u = is_unit(red.v[i])) {
                    red.finish_with_unit(i, red.v[i]);
                    return red.word;
                }
            }
            throw not_unimodular{};
        }
        case ring_family::mod_n: {
            for (size_t i = 0; i < n; ++i) {
                if (is_unit(red.v[i])) {
                    red.finish_with_unit(i, red.v[i]);
                    return red.word;
                }
            }
            // No single entry is a unit: fix up the last entry prime by prime.
            // For each prime p | n dividing v[last], some v[i] avoids p; add it
            // with a CRT coefficient that is 1 at those primes and 0 elsewhere.
            bezout_witness(std::vector<RingElement>(red.v));  // throws if not unimodular
            auto primes = prime_factors(R->modulus);
            std::vector<mpz_class> assigned_products(n, 1);
            for (const auto& p : primes) {
                if (red.v[last].as_mpz() % p != 0) continue;
                bool found = false;
                for (size_t i = 0; i < last; ++i) {
                    if (red.v[i].as_mpz() % p != 0) {
                        assigned_products[i] *= p;
                        found = true;
                        break;
                    }
                }
                if (!found) throw not_unimodular{};
            }
            for (size_t i = 0; i < last; ++i) {
                if (assigned_products[i] == 1) continue;
                mpz_class a = assigned_products[i];
                mpz_class b = 1;
                for (const auto& p : primes)
                    if (a % p != 0) b *= p;
                // lambda = 1 mod a, 0 mod b
                mpz_class binv;
                if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t()) == 0)
                    throw domain_error("internal CRT failure in row reduction");
                red.op(i, last, R->from_mpz(b * binv));
            }
            auto u = is_unit(red.v[last]);
            if (!u) throw verify_error("internal: row reduction failed to produce a unit");
            red.finish_with_unit(last, red.v[last]);
            return red.word;
        }
        case ring_family::integers: {
            // Euclid across entries until a single +-1 survives.
            while (true) {
                size_t mi = n, nonzero = 0;
                for (size_t i = 0; i < n; ++i) {
                    if (red.v[i].is_zero()) continue;
                    ++nonzero;
                    if (mi == n || abs(red.v[i].as_mpz()) < abs(red.v[mi].as_mpz())) mi = i;
                }
                if (nonzero == 0) throw not_unimodular{};
                if (nonzero == 1) {
                    mpz_class g = red.v[mi].as_mpz();
                    if (g != 1 && g != -1) throw not_unimodular{};
                    if (g == -1) {
                        size_t j = mi == 0 ? 1 : 0;
                        red.op(mi, j, R->one());
                        red.op(j, mi, R->from_int(-2));
                        red.op(mi, j, R->one());
                    }
                    size_t one_idx = n;
                    for (size_t i = 0; i < n; ++i)
                        if (red.v[i].is_one()) one_idx = i;
                    if (one_idx == n) throw verify_error("internal: integer row reduction lost 1");
                    red.finish_with_unit(one_idx, red.v[one_idx]);
                    return red.word;
                }
                for (size_t j = 0; j < n; ++j) {
                    if (j == mi || red.v[j].is_zero()) continue;
                    mpz_class q = red.v[j].as_mpz() / red.v[mi].as_mpz();
                    red.op(mi, j, R->from_mpz(-q));
                }
            }
        }
        case ring_family::polynomial:
            throw unsupported_ring("row reduction over polynomial rings is not supported");
    }
    throw domain_error("bad ring family");
}

// ---------------------------------------------------------------------------
// Symplectic transvections (Lemma 2.7 data)

namespace {

Matrix unit_col(const Ring& R, size_t dim, size_t i) {
    Matrix c(R, dim, 1);
    c.set(i, 0, R->one());
    return c;
}

Matrix unit_row(const Ring& R, size_t dim, size_t i) {
    Matrix r(R, 1, dim);
    r.set(0, i, R->one());
    return r;
}

void check_symplectic(const ElemWord& w, const Matrix& chi) {
    Matrix e = eval_word(w);
    if (congruence(e, chi) != chi)
        throw verify_error("internal: constructed word is not symplectic for chi");
}

}  // namespace

ElemWord symplectic_transvection(const Matrix& chi, transvection_kind kind, const Matrix& data) {
    if (!chi.is_skew()) throw domain_error("symplectic_transvection requires a skew form");
    const Ring& R = chi.ring();
    size_t dim = chi.rows();
    if (dim < 2) throw domain_error("form too small");
    size_t last = dim - 1;
    BlockDecomposition blocks(R, {dim - 1, 1});
    ElemWord w(blocks);

    if (kind == transvection_kind::add_vector) {
        if (data.rows() != dim || data.cols() != 1 || !data.at(last, 0).is_zero())
            throw domain_error("add_vector data must be a column in the first 2n-1 coordinates");
        if (data.is_zero()) return w;
        Matrix binv = inverse(chi);  // throws when chi is not invertible
        Matrix d = binv * unit_col(R, dim, last);
        Matrix nu = data.transpose() * chi;  // chi(p, -)
        nu.set(0, last, R->zero());          // restrict to P_{2n-1}
        Matrix s_f = unit_col(R, dim, last) * nu;
        Matrix s_g = -(d * unit_row(R, dim, last));
        w = whitehead_word(blocks, s_f, s_g);
        w.push(0, 1, data * unit_row(R, dim, last));
        check_symplectic(w, chi);
        return w;
    }

    if (data.rows() != 1 || data.cols() != dim || !data.at(0, last).is_zero())
        throw domain_error("add_functional data must be a row vanishing on the last coordinate");
    if (data.is_zero()) return w;
    Matrix binv = inverse(chi);
    Matrix theta = -(binv * data.transpose());
    theta.set(last, 0, R->zero());  // project into P_{2n-1}
    Matrix c = (chi * unit_col(R, dim, last)).transpose();  // chi(-, e_last)
    Matrix s_f = unit_col(R, dim, last) * c;
    Matrix s_g = -(theta * unit_row(R, dim, last));
    w = whitehead_word(blocks, s_f, s_g);
    w.push(1, 0, unit_col(R, dim, last) * data);
    check_symplectic(w, chi);
    return w;
}

// ---------------------------------------------------------------------------
// Lemma 2.8: symplectic realization of an orbit word

namespace {

struct CornerGen {
    transvection_kind kind;
    Matrix data;  // column (add_vector) or row (add_functional)
};

Matrix corner_eval(const CornerGen& g, size_t dim) {
    const Ring& R = g.data.ring();
    Matrix m = Matrix::identity(R, dim);
    size_t last = dim - 1;
    if (g.kind == transvection_kind::add_vector) {
        for (size_t i = 0; i < dim; ++i) m.set(i, last, m.at(i, last) + g.data.at(i, 0));
    } else {
        for (size_t j = 0; j < dim; ++j) m.set(last, j, m.at(last, j) + g.data.at(0, j));
    }
    return m;
}

}  // namespace

ElemWord symplectic_orbit_word(const Matrix& chi, const ElemWord& w) {
    if (!chi.is_skew()) throw domain_error("symplectic_orbit_word requires a skew form");
    const Ring& R = chi.ring();
    size_t dim = chi.rows();
    size_t last = dim - 1;
    if (w.dim() != dim) throw domain_error("word dimension does not match the form");
    for (size_t i = 0; i < w.blocks().count(); ++i)
        if (w.blocks().size(i) != 1)
            throw domain_error("symplectic_orbit_word expects rank-1 blocks");

    // Rewrite into corner generators relative to the last coordinate.
    std::vector<CornerGen> gens;
    for (const auto& f : w.factors()) {
        size_t i = f.target(), j = f.source();
        if (f.coeff().is_zero()) continue;
        if (j == last) {
            Matrix p = f.coeff() * unit_col(R, dim, last);
            gens.push_back({transvection_kind::add_vector, p});
        } else if (i == last) {
            Matrix a = unit_row(R, dim, last) * f.coeff();
            gens.push_back({transvection_kind::add_functional, a});
        } else {
            // Lemma 2.3(c): factor through the last coordinate.
            RingElement s = f.coeff().at(i, j);
            Matrix p(R, dim, 1);
            p.set(i, 0, s);
            Matrix a = unit_row(R, dim, j);
            gens.push_back({transvection_kind::add_vector, p});
            gens.push_back({transvection_kind::add_functional, a});
            gens.push_back({transvection_kind::add_vector, -p});
            gens.push_back({transvection_kind::add_functional, -a});
        }
    }

    Matrix p_cur = inverse(eval_word(w)) * unit_col(R, dim, last);
    Matrix p_start = p_cur;

    std::vector<ElemWord> pieces;
    while (!gens.empty()) {
        CornerGen g = gens.back();
        gens.pop_back();
        ElemWord s_word = symplectic_transvection(chi, g.kind, g.data);
        Matrix s_mat = eval_word(s_word);
        Matrix a_mat = corner_eval(g, dim);
        Matrix gamma = s_mat * inverse(a_mat);
        Matrix gamma_inv = a_mat * inverse(s_mat);
        for (auto& h : gens) {
            if (h.kind == transvection_kind::add_vector)
                h.data = gamma * h.data;
            else
                h.data = h.data * gamma_inv;
        }
        p_cur = s_mat * p_cur;
        pieces.push_back(std::move(s_word));
    }

    BlockDecomposition blocks(R, {dim - 1, 1});
    ElemWord out(blocks);
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) out.append(*it);

    if (p_cur != unit_col(R, dim, last))
        throw domain_error("input word does not carry its vector to e_last");
    Matrix e = eval_word(out);
    if (congruence(e, chi) != chi || e * p_start != unit_col(R, dim, last))
        throw verify_error("internal: symplectic orbit word fails its contract");
    return out;
}

}  // namespace vsym
