#pragma once

#include <random>
#include <vector>

#include "vsym/elem.hpp"
#include "vsym/matrix.hpp"
#include "vsym/ring.hpp"

namespace vsym::testutil {

inline std::mt19937_64 make_rng(uint64_t seed = 0x5eed5eedULL) { return std::mt19937_64(seed); }

inline long rand_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline RingElement rand_element(const Ring& R, std::mt19937_64& rng, long span = 9) {
    if (R->finite()) {
        long n = static_cast<long>(R->size().get_ui());
        return R->from_int(rand_int(rng, 0, n - 1));
    }
    return R->from_int(rand_int(rng, -span, span));
}

inline RingElement rand_unit(const Ring& R, std::mt19937_64& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        RingElement x = rand_element(R, rng, 1);
        if (R->family == ring_family::integers && rand_int(rng, 0, 1)) x = R->from_int(-1);
        if (is_unit(x)) return x;
    }
    return R->one();
}

inline Matrix rand_matrix(const Ring& R, std::mt19937_64& rng, size_t rows, size_t cols,
                          long span = 9) {
    Matrix m(R, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, rand_element(R, rng, span));
    return m;
}

inline Matrix rand_skew(const Ring& R, std::mt19937_64& rng, size_t n, long span = 9) {
    Matrix m(R, n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            RingElement x = rand_element(R, rng, span);
            m.set(i, j, x);
            m.set(j, i, -x);
        }
    }
    return m;
}

// Random invertible skew matrix (unit Pfaffian after rejection sampling).
inline Matrix rand_invertible_skew(const Ring& R, std::mt19937_64& rng, size_t n, long span = 9) {
    for (int tries = 0; tries < 10000; ++tries) {
        Matrix m = rand_skew(R, rng, n, span);
        if (is_unit(pfaffian(m))) return m;
    }
    return standard_form(R, standard_kind::psi, n / 2);
}

// Independent oracle: determinant by cofactor expansion along the first row.
inline RingElement cofactor_det(const Matrix& m) {
    size_t n = m.rows();
    if (n == 0) return m.ring()->one();
    if (n == 1) return m.at(0, 0);
    RingElement acc = m.ring()->zero();
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix sub(m.ring(), n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.set(r - 1, cc++, m.at(r, c));
            }
        }
        RingElement term = m.at(0, j) * cofactor_det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Independent oracle: Pfaffian as the signed sum over perfect matchings,
// computed by plain recursion on index lists (no memoization, no sharing
// with the library implementation).
inline RingElement matching_pfaffian(const Matrix& m, std::vector<size_t> idx) {
    if (idx.empty()) return m.ring()->one();
    RingElement acc = m.ring()->zero();
    size_t i = idx.front();
    for (size_t t = 1; t < idx.size(); ++t) {
        std::vector<size_t> rest;
        for (size_t k = 1; k < idx.size(); ++k)
            if (k != t) rest.push_back(idx[k]);
        RingElement term = m.at(i, idx[t]) * matching_pfaffian(m, rest);
        acc += (t % 2 == 1) ? term : -term;
    }
    return acc;
}

inline RingElement matching_pfaffian(const Matrix& m) {
    std::vector<size_t> idx(m.rows());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return matching_pfaffian(m, idx);
}

}  // namespace vsym::testutil
