#include "vsym/matrix.hpp"

#include <random>
#include <sstream>
#include <unordered_map>

namespace vsym {

Matrix::Matrix(Ring ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, ring_->zero()) {}

Matrix Matrix::identity(const Ring& ring, size_t n) {
    Matrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
    return m;
}

void Matrix::set(size_t i, size_t j, RingElement v) {
    if (!same_ring(v.ring(), ring_)) throw domain_error("matrix entry from wrong ring");
    e_[i * cols_ + j] = std::move(v);
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

Matrix Matrix::operator-() const {
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, -at(i, j));
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix size mismatch in +");
    Matrix r(a.ring_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix size mismatch in -");
    Matrix r(a.ring_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix size mismatch in *");
    Matrix r(a.ring_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const RingElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const RingElement& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.e_[i * r.cols_ + j] += aik * bkj;
            }
        }
    }
    return r;
}

Matrix Matrix::scaled(const RingElement& c) const {
    Matrix r(ring_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !same_ring(a.ring_, b.ring_)) return false;
    return Matrix::cmp(a, b) == 0;
}

int Matrix::cmp(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
    for (size_t i = 0; i < a.e_.size(); ++i) {
        int c = RingElement::cmp(a.e_[i], b.e_[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_skew() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i) {
        if (!at(i, i).is_zero()) return false;
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    }
    return true;
}

bool Matrix::is_idempotent() const { return is_square() && (*this) * (*this) == *this; }

Matrix Matrix::block(size_t i0, size_t j0, size_t r, size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw domain_error("block out of range");
    Matrix b(ring_, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) b.set(i, j, at(i0 + i, j0 + j));
    return b;
}

void Matrix::set_block(size_t i0, size_t j0, const Matrix& sub) {
    if (i0 + sub.rows() > rows_ || j0 + sub.cols() > cols_) throw domain_error("block out of range");
    for (size_t i = 0; i < sub.rows(); ++i)
        for (size_t j = 0; j < sub.cols(); ++j) set(i0 + i, j0 + j, sub.at(i, j));
}

std::string Matrix::text() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).text();
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Berkowitz characteristic polynomial

std::vector<RingElement> char_poly(const Matrix& m) {
    if (!m.is_square()) throw domain_error("char_poly requires a square matrix");
    const Ring& R = m.ring();
    size_t n = m.rows();
    if (n == 0) return {R->one()};

    std::vector<RingElement> poly{R->one(), -m.at(0, 0)};
    for (size_t k = 1; k < n; ++k) {
        // Extend from the k x k leading minor to (k+1) x (k+1).
        // items = (1, -a, -R C, -R A C, ..., -R A^{k-1} C)
        std::vector<RingElement> items;
        items.reserve(k + 2);
        items.push_back(R->one());
        items.push_back(-m.at(k, k));
        std::vector<RingElement> v;  // A^i C
        v.reserve(k);
        for (size_t i = 0; i < k; ++i) v.push_back(m.at(i, k));
        for (size_t step = 0; step < k; ++step) {
            RingElement dot = R->zero();
            for (size_t j = 0; j < k; ++j) dot += m.at(k, j) * v[j];
            items.push_back(-dot);
            if (step + 1 < k) {
                std::vector<RingElement> nv(k, R->zero());
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) nv[i] += m.at(i, j) * v[j];
                v = std::move(nv);
            }
        }
        // Toeplitz multiply: newpoly[i] = sum_j items[i-j] poly[j]
        std::vector<RingElement> np(k + 2, R->zero());
        for (size_t i = 0; i < np.size(); ++i) {
            for (size_t j = 0; j < poly.size(); ++j) {
                if (i < j || i - j >= items.size()) continue;
                np[i] += items[i - j] * poly[j];
            }
        }
        poly = std::move(np);
    }
    return poly;
}

RingElement determinant(const Matrix& m) {
    if (!m.is_square()) throw domain_error("determinant requires a square matrix");
    size_t n = m.rows();
    if (n == 0) return m.ring()->one();
    auto poly = char_poly(m);
    RingElement d = poly[n];
    return n % 2 == 0 ? d : -d;
}

Matrix adjugate(const Matrix& m) {
    if (!m.is_square()) throw domain_error("adjugate requires a square matrix");
    const Ring& R = m.ring();
    size_t n = m.rows();
    if (n == 0) return Matrix(R, 0, 0);
    if (n == 1) return Matrix::identity(R, 1);
    auto poly = char_poly(m);
    // q(A) = A^{n-1} + c_1 A^{n-2} + ... + c_{n-1} I, adj = (-1)^{n-1} q(A)
    Matrix h = Matrix::identity(R, n);
    for (size_t i = 1; i < n; ++i) {
        h = m * h;
        for (size_t d = 0; d < n; ++d) h.set(d, d, h.at(d, d) + poly[i]);
    }
    return n % 2 == 1 ? h : -h;
}

Matrix inverse(const Matrix& m) {
    RingElement d = determinant(m);
    auto dinv = is_unit(d);
    if (!dinv) throw not_invertible{};
    Matrix inv = adjugate(m).scaled(*dinv);
    if (inv * m != Matrix::identity(m.ring(), m.rows()))
        throw verify_error("internal: inverse fails M * M^-1 = I");
    return inv;
}

// ---------------------------------------------------------------------------
// Pfaffian

namespace {

constexpr size_t kPfaffianCap = 24;

// Expansion along the smallest live index with memoization on the index set.
RingElement pfaffian_dp(const Matrix& m, uint32_t mask,
                        std::unordered_map<uint32_t, RingElement>& memo) {
    if (mask == 0) return m.ring()->one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    uint32_t low = mask & (~mask + 1u);
    size_t i = static_cast<size_t>(__builtin_ctz(mask));
    uint32_t rest = mask ^ low;

    RingElement acc = m.ring()->zero();
    bool plus = true;  // position t=2 carries sign +
    for (uint32_t bits = rest; bits;) {
        uint32_t jbit = bits & (~bits + 1u);
        size_t j = static_cast<size_t>(__builtin_ctz(bits));
        bits ^= jbit;
        const RingElement& a = m.at(i, j);
        if (!a.is_zero()) {
            RingElement sub = pfaffian_dp(m, rest ^ jbit, memo);
            if (!sub.is_zero()) acc += plus ? a * sub : -(a * sub);
        }
        plus = !plus;
    }
    memo.emplace(mask, acc);
    return acc;
}

// Fast path for small residue rings: same recursion over uint64 residues.
uint64_t pfaffian_dp_mod(const std::vector<uint64_t>& a, size_t n, uint64_t mod, uint32_t mask,
                         std::unordered_map<uint32_t, uint64_t>& memo) {
    if (mask == 0) return 1 % mod;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    size_t i = static_cast<size_t>(__builtin_ctz(mask));
    uint32_t rest = mask ^ (mask & (~mask + 1u));

    uint64_t acc = 0;
    bool plus = true;
    for (uint32_t bits = rest; bits;) {
        uint32_t jbit = bits & (~bits + 1u);
        size_t j = static_cast<size_t>(__builtin_ctz(bits));
        bits ^= jbit;
        uint64_t aij = a[i * n + j];
        if (aij != 0) {
            uint64_t sub = pfaffian_dp_mod(a, n, mod, rest ^ jbit, memo);
            uint64_t term = (aij * sub) % mod;
            acc = plus ? (acc + term) % mod : (acc + mod - term) % mod;
        }
        plus = !plus;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

RingElement pfaffian(const Matrix& m) {
    if (!m.is_square()) throw domain_error("pfaffian requires a square matrix");
    if (m.rows() % 2 != 0) throw domain_error("pfaffian requires even size");
    if (!m.is_skew()) throw domain_error("pfaffian requires a skew-symmetric matrix");
    size_t n = m.rows();
    if (n > kPfaffianCap)
        throw size_limit("pfaffian size cap is " + std::to_string(kPfaffianCap) + ", got " +
                         std::to_string(n));
    if (n == 0) return m.ring()->one();

    const Ring& R = m.ring();
    if (R->finite() && R->modulus.fits_ulong_p() && R->modulus.get_ui() < (1ull << 31)) {
        uint64_t mod = R->modulus.get_ui();
        std::vector<uint64_t> a(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).as_mpz().get_ui();
        std::unordered_map<uint32_t, uint64_t> memo;
        uint64_t pf = pfaffian_dp_mod(a, n, mod, (n == 32 ? ~0u : ((1u << n) - 1u)), memo);
        return R->from_mpz(mpz_class(static_cast<unsigned long>(pf)));
    }

    std::unordered_map<uint32_t, RingElement> memo;
    return pfaffian_dp(m, (1u << n) - 1u, memo);
}

// ---------------------------------------------------------------------------

Matrix congruence(const Matrix& g, const Matrix& n) {
    if (!n.is_square() || g.rows() != n.rows())
        throw domain_error("congruence size mismatch: G is " + std::to_string(g.rows()) + "x" +
                           std::to_string(g.cols()) + ", N is " + std::to_string(n.rows()) + "x" +
                           std::to_string(n.cols()));
    return g.transpose() * n * g;
}

// ---------------------------------------------------------------------------
// Exact linear solving

namespace {

// Gaussian elimination over a field (every nonzero element is a unit).
std::optional<Matrix> solve_field(const Matrix& a, const Matrix& b) {
    const Ring& R = a.ring();
    size_t k = a.rows(), l = a.cols();
    Matrix g = a;
    Matrix rhs = b;
    std::vector<long> pivot_col_of_row(k, -1);
    size_t rank = 0;
    for (size_t c = 0; c < l && rank < k; ++c) {
        size_t pr = rank;
        while (pr < k && !is_unit(g.at(pr, c))) ++pr;
        if (pr == k) continue;
        if (pr != rank) {
            for (size_t j = 0; j < l; ++j) {
                RingElement t = g.at(rank, j);
                g.set(rank, j, g.at(pr, j));
                g.set(pr, j, t);
            }
            RingElement t = rhs.at(rank, 0);
            rhs.set(rank, 0, rhs.at(pr, 0));
            rhs.set(pr, 0, t);
        }
        RingElement inv = *is_unit(g.at(rank, c));
        for (size_t r = 0; r < k; ++r) {
            if (r == rank || g.at(r, c).is_zero()) continue;
            RingElement f = g.at(r, c) * inv;
            for (size_t j = 0; j < l; ++j) g.set(r, j, g.at(r, j) - f * g.at(rank, j));
            rhs.set(r, 0, rhs.at(r, 0) - f * rhs.at(rank, 0));
        }
        pivot_col_of_row[rank] = static_cast<long>(c);
        ++rank;
    }
    Matrix x(R, l, 1);
    for (size_t r = 0; r < k; ++r) {
        if (pivot_col_of_row[r] >= 0) {
            size_t c = static_cast<size_t>(pivot_col_of_row[r]);
            x.set(c, 0, rhs.at(r, 0) * *is_unit(g.at(r, c)));
        } else if (r >= rank && !rhs.at(r, 0).is_zero()) {
            return std::nullopt;
        }
    }
    // rows beyond the pivots must be consistent
    if (a * x != b) return std::nullopt;
    return x;
}

// Column Hermite reduction over Z: change of variables x = U y so that A U
// is in lower column-echelon form, then forced forward substitution.
std::optional<Matrix> solve_integers(const Matrix& a, const Matrix& b) {
    const Ring& R = a.ring();
    size_t k = a.rows(), l = a.cols();
    std::vector<std::vector<mpz_class>> g(k, std::vector<mpz_class>(l));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < l; ++j) g[i][j] = a.at(i, j).as_mpz();
    std::vector<std::vector<mpz_class>> u(l, std::vector<mpz_class>(l, 0));
    for (size_t j = 0; j < l; ++j) u[j][j] = 1;

    auto colop = [&](size_t dst, size_t src, const mpz_class& q) {
        // col_dst += q * col_src
        for (size_t i = 0; i < k; ++i) g[i][dst] += q * g[i][src];
        for (size_t i = 0; i < l; ++i) u[i][dst] += q * u[i][src];
    };
    auto colswap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < k; ++i) std::swap(g[i][x], g[i][y]);
        for (size_t i = 0; i < l; ++i) std::swap(u[i][x], u[i][y]);
    };

    size_t pc = 0;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    for (size_t r = 0; r < k && pc < l; ++r) {
        // Euclid across columns pc..l-1 on row r
        while (true) {
            size_t n_nonzero = 0, first = l;
            for (size_t c = pc; c < l; ++c) {
                if (g[r][c] != 0) {
                    ++n_nonzero;
                    if (first == l || abs(g[r][c]) < abs(g[r][first])) first = c;
                }
            }
            if (n_nonzero == 0) break;
            if (n_nonzero == 1) {
                if (first != pc) colswap(first, pc);
                pivots.push_back({r, pc});
                ++pc;
                break;
            }
            for (size_t c = pc; c < l; ++c) {
                if (c == first || g[r][c] == 0) continue;
                mpz_class q = g[r][c] / g[r][first];
                colop(c, first, -q);
            }
        }
    }

    // forward substitution: pivots force y values, zero columns stay free
    std::vector<mpz_class> res(k), y(l, 0);
    for (size_t i = 0; i < k; ++i) res[i] = b.at(i, 0).as_mpz();
    for (const auto& [r, c] : pivots) {
        mpz_class num = res[r];
        if (num % g[r][c] != 0) return std::nullopt;
        y[c] = num / g[r][c];
        for (size_t i = 0; i < k; ++i) res[i] -= y[c] * g[i][c];
    }
    for (size_t i = 0; i < k; ++i)
        if (res[i] != 0) return std::nullopt;

    Matrix x(R, l, 1);
    for (size_t i = 0; i < l; ++i) {
        mpz_class v = 0;
        for (size_t j = 0; j < l; ++j) v += u[i][j] * y[j];
        x.set(i, 0, R->from_mpz(v));
    }
    if (a * x != b) return std::nullopt;
    return x;
}

}  // namespace

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (b.cols() != 1 || b.rows() != a.rows()) throw domain_error("solve_linear shape mismatch");
    const Ring& R = a.ring();
    switch (R->family) {
        case ring_family::rationals:
        case ring_family::prime_field: return solve_field(a, b);
        case ring_family::integers: return solve_integers(a, b);
        case ring_family::mod_n: {
            // lift to Z with modulus columns: [A | n I] (x; t) = b_lift
            Ring Z = RingSpec::integers();
            size_t k = a.rows(), l = a.cols();
            Matrix big(Z, k, l + k);
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = 0; j < l; ++j) big.set(i, j, Z->from_mpz(a.at(i, j).as_mpz()));
                big.set(i, l + i, Z->from_mpz(R->modulus));
            }
            Matrix bz(Z, k, 1);
            for (size_t i = 0; i < k; ++i) bz.set(i, 0, Z->from_mpz(b.at(i, 0).as_mpz()));
            auto sol = solve_integers(big, bz);
            if (!sol) return std::nullopt;
            Matrix x(R, l, 1);
            for (size_t j = 0; j < l; ++j) x.set(j, 0, R->from_mpz(sol->at(j, 0).as_mpz()));
            if (a * x != b) return std::nullopt;
            return x;
        }
        case ring_family::polynomial:
            throw unsupported_ring("linear solving over polynomial rings is not supported");
    }
    throw domain_error("bad ring family");
}

Matrix restricted_inverse(const Matrix& b, const Matrix& pi) {
    if (!b.is_square() || b.rows() != pi.rows() || !pi.is_square())
        throw domain_error("restricted_inverse size mismatch");
    const Ring& R = b.ring();
    size_t m = b.rows();
    Matrix id = Matrix::identity(R, m);
    Matrix q = id - pi;
    Matrix qt = q.transpose();
    Matrix pit = pi.transpose();

    // Fast path: C = B + (I-pi)^t D (I-pi). D = I can be singular on the
    // complement (the standard dot product may degenerate on image(I-pi)),
    // so retry with deterministically seeded symmetric D.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    int attempts = R->finite() ? 48 : 4;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Matrix d = id;
        if (attempt > 0) {
            d = Matrix(R, m, m);
            std::uniform_int_distribution<long> dist(0, 8);
            for (size_t i = 0; i < m; ++i)
                for (size_t j = i; j < m; ++j) {
                    RingElement v = R->from_int(i == j ? dist(rng) + 1 : dist(rng));
                    d.set(i, j, v);
                    d.set(j, i, v);
                }
        }
        Matrix c = b + qt * d * q;
        if (!is_unit(determinant(c))) continue;
        Matrix bplus = pi * inverse(c) * pit;
        if (b * bplus * pit == pit && bplus * b * pi == pi) return bplus;
    }

    // Complete path: solve B Y pi^t = pi^t and pi Y B = pi for Y and take
    // X = pi Y pi^t. The solution is unique when B is invertible on the
    // module, so X is the intrinsic generalized inverse.
    Ring R2 = R;
    size_t vars = m * m;
    Matrix sys(R2, 2 * m * m, vars);
    Matrix rhs(R2, 2 * m * m, 1);
    // equation block 1: (B Y pi^t)[i][j] = pi^t[i][j]
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            size_t row = i * m + j;
            for (size_t p = 0; p < m; ++p)
                for (size_t s = 0; s < m; ++s) {
                    RingElement coef = b.at(i, p) * pit.at(s, j);
                    if (!coef.is_zero())
                        sys.set(row, p * m + s, sys.at(row, p * m + s) + coef);
                }
            rhs.set(row, 0, pit.at(i, j));
        }
    // equation block 2: (pi Y B)[i][j] = pi[i][j]
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            size_t row = m * m + i * m + j;
            for (size_t p = 0; p < m; ++p)
                for (size_t s = 0; s < m; ++s) {
                    RingElement coef = pi.at(i, p) * b.at(s, j);
                    if (!coef.is_zero())
                        sys.set(row, p * m + s, sys.at(row, p * m + s) + coef);
                }
            rhs.set(row, 0, pi.at(i, j));
        }
    auto sol = solve_linear(sys, rhs);
    if (!sol) throw not_invertible{};
    Matrix y(R2, m, m);
    for (size_t p = 0; p < m; ++p)
        for (size_t s = 0; s < m; ++s) y.set(p, s, sol->at(p * m + s, 0));
    Matrix bplus = pi * y * pit;
    if (b * bplus * pit != pit || bplus * b * pi != pi) throw not_invertible{};
    return bplus;
}

bool is_restricted_invertible(const Matrix& b, const Matrix& pi) {
    try {
        restricted_inverse(b, pi);
        return true;
    } catch (const not_invertible&) {
        return false;
    }
}

Matrix orth_sum(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square()) throw domain_error("orth_sum requires square blocks");
    Matrix r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

Matrix standard_form(const Ring& ring, standard_kind kind, size_t halfsize,
                     const std::optional<RingElement>& unit) {
    if (halfsize < 1) throw domain_error("standard form requires halfsize >= 1");
    switch (kind) {
        case standard_kind::psi: {
            Matrix psi2(ring, 2, 2);
            psi2.set(0, 1, ring->one());
            psi2.set(1, 0, -ring->one());
            Matrix m = psi2;
            for (size_t i = 1; i < halfsize; ++i) m = orth_sum(m, psi2);
            return m;
        }
        case standard_kind::sigma: {
            Matrix s2(ring, 2, 2);
            s2.set(0, 1, ring->one());
            s2.set(1, 0, ring->one());
            Matrix m = s2;
            for (size_t i = 1; i < halfsize; ++i) m = orth_sum(m, s2);
            return m;
        }
        case standard_kind::h: {
            size_t n = halfsize;
            Matrix m(ring, 2 * n, 2 * n);
            for (size_t i = 0; i < n; ++i) {
                m.set(i, n + i, ring->one());
                m.set(n + i, i, -ring->one());
            }
            return m;
        }
        case standard_kind::gamma: {
            if (!unit) throw domain_error("gamma form requires a unit");
            if (!is_unit(*unit)) throw domain_error("gamma form requires u to be a unit");
            Matrix g2(ring, 2, 2);
            g2.set(0, 0, *unit);
            g2.set(1, 1, ring->one());
            Matrix m = g2;
            for (size_t i = 1; i < halfsize; ++i) m = orth_sum(m, g2);
            return m;
        }
    }
    throw domain_error("bad standard form kind");
}

Matrix row_vector(const Ring& ring, const std::vector<RingElement>& v) {
    Matrix m(ring, 1, v.size());
    for (size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
    return m;
}

Matrix col_vector(const Ring& ring, const std::vector<RingElement>& v) {
    Matrix m(ring, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
}

Matrix row_from_ints(const Ring& ring, const std::vector<long>& v) {
    Matrix m(ring, 1, v.size());
    for (size_t j = 0; j < v.size(); ++j) m.set(0, j, ring->from_int(v[j]));
    return m;
}

Matrix col_from_ints(const Ring& ring, const std::vector<long>& v) {
    Matrix m(ring, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.set(i, 0, ring->from_int(v[i]));
    return m;
}

Matrix matrix_from_ints(const Ring& ring, size_t rows, size_t cols,
                        const std::vector<long>& entries) {
    if (entries.size() != rows * cols) throw domain_error("matrix_from_ints entry count mismatch");
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, ring->from_int(entries[i * cols + j]));
    return m;
}

}  // namespace vsym
