// Acceptance suite: every criterion prints one PASS/FAIL line; the exit
// code is the number of failed criteria. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "vsym/complete.hpp"
#include "vsym/instances.hpp"
#include "vsym/oracle.hpp"
#include "vsym/symbol.hpp"

using namespace vsym;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Matrix psi(const Ring& r, size_t half) { return standard_form(r, standard_kind::psi, half); }

// -------------------------------------------------------------------------
// 1. Pfaffian identity suite

Outcome pfaffian_suite() {
    auto t0 = Clock::now();
    InstanceGen gen(1001);
    size_t instances = 0, failures = 0;
    for (const char* rs : {"Z", "F_5", "Z/9"}) {
        Ring R = ring_parse(rs);
        for (size_t n = 2; n <= 8; n += 2) {
            for (int t = 0; t < 42; ++t) {
                ++instances;
                size_t n2 = 2 + 2 * static_cast<size_t>(gen.pick(0, 2));
                Matrix m(R, n, n), nn(R, n2, n2), g(R, n2, n2);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = i + 1; j < n; ++j) {
                        RingElement x = gen.element(R, 9);
                        m.set(i, j, x);
                        m.set(j, i, -x);
                    }
                for (size_t i = 0; i < n2; ++i)
                    for (size_t j = 0; j < n2; ++j) {
                        if (j > i) {
                            RingElement x = gen.element(R, 9);
                            nn.set(i, j, x);
                            nn.set(j, i, -x);
                        }
                        g.set(i, j, gen.element(R, 9));
                    }
                bool ok = pfaffian(orth_sum(m, nn)) == pfaffian(m) * pfaffian(nn);
                ok = ok && pfaffian(congruence(g, nn)) == determinant(g) * pfaffian(nn);
                ok = ok && pfaffian(nn) * pfaffian(nn) == determinant(nn);
                if (!ok) ++failures;
            }
        }
        for (size_t half = 1; half <= 4; ++half) {
            ++instances;
            if (!pfaffian(psi(R, half)).is_one()) ++failures;
        }
        ++instances;
        if (pfaffian(standard_form(R, standard_kind::h, 2)) != -R->one()) ++failures;
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " instances, " << failures << " failures, " << secs << " s";
    return {failures == 0 && instances >= 500 && secs < 10.0, d.str()};
}

// -------------------------------------------------------------------------
// 2. Elementary-word identity suite: Lemma 2.3(a)-(d) and Whitehead

Outcome elem_suite() {
    auto t0 = Clock::now();
    InstanceGen gen(1002);
    size_t instances = 0, failures = 0;
    for (const char* rs : {"Z", "F_7"}) {
        Ring R = ring_parse(rs);
        size_t done = 0;
        while (done < 110) {
            std::vector<size_t> sizes;
            for (int b = 0; b < 4; ++b) sizes.push_back(static_cast<size_t>(gen.pick(1, 3)));
            BlockDecomposition blocks(R, sizes);
            size_t dim = blocks.dim();
            auto coeff = [&](size_t i, size_t j) {
                Matrix c(R, dim, dim);
                for (size_t r = 0; r < sizes[i]; ++r)
                    for (size_t s = 0; s < sizes[j]; ++s)
                        c.set(blocks.offset(i) + r, blocks.offset(j) + s, gen.element(R, 3));
                return c;
            };
            bool ok = true;
            {  // (a)
                Matrix s = coeff(0, 1), t = coeff(0, 1);
                ElemWord lhs(blocks), rhs(blocks);
                lhs.push(0, 1, s);
                lhs.push(0, 1, t);
                rhs.push(0, 1, s + t);
                ok = ok && eval_word(lhs) == eval_word(rhs);
            }
            {  // (b)
                Matrix s = coeff(0, 1), t = coeff(2, 3);
                ElemWord lhs(blocks), rhs(blocks);
                lhs.push(0, 1, s);
                lhs.push(2, 3, t);
                rhs.push(2, 3, t);
                rhs.push(0, 1, s);
                ok = ok && eval_word(lhs) == eval_word(rhs);
            }
            {  // (c)
                Matrix s = coeff(0, 1), t = coeff(1, 2);
                ElemWord rhs(blocks);
                rhs.push(0, 2, s * t);
                ok = ok &&
                     eval_word(commutator_factorization(blocks, 0, 1, 2, s, t)) == eval_word(rhs);
            }
            {  // (d)
                Matrix s = coeff(0, 1), t = coeff(2, 0);
                ElemWord lhs(blocks), rhs(blocks);
                lhs.push(0, 1, s);
                lhs.push(2, 0, t);
                lhs.push(0, 1, -s);
                lhs.push(2, 0, -t);
                rhs.push(2, 1, -(t * s));
                ok = ok && eval_word(lhs) == eval_word(rhs);
            }
            {  // Whitehead five-factor identity
                BlockDecomposition two(R, {sizes[0], sizes[1]});
                size_t d2 = two.dim();
                Matrix f(R, d2, d2), g(R, d2, d2);
                for (size_t r = 0; r < sizes[1]; ++r)
                    for (size_t s = 0; s < sizes[0]; ++s)
                        f.set(two.offset(1) + r, s, gen.element(R, 2));
                for (size_t r = 0; r < sizes[0]; ++r)
                    for (size_t s = 0; s < sizes[1]; ++s)
                        g.set(r, two.offset(1) + s, gen.element(R, 2));
                Matrix id = Matrix::identity(R, d2);
                if (!is_unit(determinant(id + g * f))) continue;  // resample
                ElemWord w = whitehead_word(two, f, g);
                Matrix k = inverse(id + f * g);
                Matrix range1(R, d2, d2);
                for (size_t r = 0; r < sizes[1]; ++r)
                    range1.set(two.offset(1) + r, two.offset(1) + r, R->one());
                Matrix target = id + g * f + (k - id) * range1;
                ok = ok && eval_word(w) == target && w.factors().size() == 5;
            }
            ++instances;
            ++done;
            if (!ok) ++failures;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " instances, " << failures << " failures, " << secs << " s";
    return {failures == 0 && instances >= 200 && secs < 5.0, d.str()};
}

// -------------------------------------------------------------------------
// 3/4/5. Theorem 4.1 witness, Theorem 4.3 invariance, Lemma 4.2 Pfaffians

size_t g_symbols_checked = 0;
size_t g_symbols_pf_one = 0;

void count_symbol(const Trivialization& triv, const UmEpi& e) {
    ++g_symbols_checked;
    SymbolResult r = generalized_symbol(triv, e);  // throws if Pf != 1
    if (r.pf.is_one()) ++g_symbols_pf_one;
}

Outcome t41_suite() {
    auto t0 = Clock::now();
    InstanceGen gen(1003);
    size_t instances = 0, failures = 0;
    struct Plan {
        const char* ring;
        bool kernel;
        int count;
    };
    for (const Plan& plan : {Plan{"Z/5", false, 22}, Plan{"Z/5", true, 22},
                             Plan{"Z/7", false, 22}, Plan{"Z/7", true, 22},
                             Plan{"Z", false, 10}, Plan{"Z", true, 6}}) {
        Ring R = ring_parse(plan.ring);
        for (int t = 0; t < plan.count; ++t) {
            ++instances;
            try {
                auto [p0, triv] =
                    plan.kernel ? gen.kernel_p0(R) : gen.free_p0(R, gen.unit(R));
                UmEpi e = gen.random_epi(p0);
                Matrix other = gen.second_section(e);
                ElemWord w = section_independence_witness(triv, e.a(), e.s(), other, p0);
                UmEpi e2(p0, e.a(), other);
                if (congruence(eval_word(w), pulled_back_form(triv, e)) !=
                    pulled_back_form(triv, e2)) {
                    ++failures;
                    continue;
                }
                count_symbol(triv, e);
                count_symbol(triv, e2);
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " instances, " << failures << " failures, " << secs << " s";
    return {failures == 0 && instances >= 100 && secs < 30.0, d.str()};
}

Outcome t43_suite() {
    auto t0 = Clock::now();
    InstanceGen gen(1004);
    size_t instances = 0, failures = 0;
    struct Plan {
        const char* ring;
        bool kernel;
        int count;
    };
    for (const Plan& plan : {Plan{"Z/5", false, 24}, Plan{"Z/5", true, 22},
                             Plan{"Z/7", false, 24}, Plan{"Z/7", true, 22},
                             Plan{"Z", false, 10}, Plan{"Z", true, 4}}) {
        Ring R = ring_parse(plan.ring);
        for (int t = 0; t < plan.count; ++t) {
            ++instances;
            try {
                auto [p0, triv] =
                    plan.kernel ? gen.kernel_p0(R) : gen.free_p0(R, gen.unit(R));
                UmEpi e = gen.random_epi(p0);
                ElemWord phi = gen.random_word_p0r(p0, 1 + t % 2);
                if (!elementary_invariance_check(triv, e, phi)) {
                    ++failures;
                    continue;
                }
                count_symbol(triv, e);
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " instances (single- and two-factor words), " << failures << " failures, "
      << secs << " s";
    return {failures == 0 && instances >= 100 && secs < 30.0, d.str()};
}

Outcome l42_suite() {
    std::ostringstream d;
    d << g_symbols_pf_one << "/" << g_symbols_checked << " symbols with Pfaffian exactly 1";
    return {g_symbols_checked > 0 && g_symbols_pf_one == g_symbols_checked, d.str()};
}

// -------------------------------------------------------------------------
// 6. Classical coincidence

Outcome coincidence_suite() {
    auto t0 = Clock::now();
    InstanceGen gen(1005);
    size_t instances = 0, failures = 0;
    auto run_one = [&](const Ring& R) {
        ++instances;
        try {
            Matrix a = gen.unimodular_row3(R);
            if (!coincide_classical_check(a, gen.witness_for(a))) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    };
    for (const char* rs : {"F_5", "F_7"}) {
        Ring R = ring_parse(rs);
        for (int t = 0; t < 52; ++t) run_one(R);
    }
    Ring z = ring_parse("Z");
    for (int t = 0; t < 20; ++t) run_one(z);
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " rows, " << failures << " failures, " << secs << " s";
    return {failures == 0 && instances >= 120, d.str()};
}

// -------------------------------------------------------------------------
// 7. Completion suite

Outcome completion_suite() {
    auto t0 = Clock::now();
    InstanceGen gen(1006);
    size_t kru = 0, gen_count = 0, failures = 0;
    for (const char* rs : {"Z", "Z/9", "F_7"}) {
        Ring R = ring_parse(rs);
        for (int t = 0; t < 70; ++t) {
            ++kru;
            Matrix row = gen.unimodular_row3(R);
            Matrix wit = gen.witness_for(row);
            const RingElement &b = row.at(0, 0), &c = row.at(0, 1), &a = row.at(0, 2);
            const RingElement &q = wit.at(0, 0), &r = wit.at(1, 0), &p = wit.at(2, 0);
            try {
                Matrix k = krusemeyer(b, c, a, q, r, p);
                bool ok = determinant(k).is_one() && k.at(2, 0) == b && k.at(2, 1) == c &&
                          k.at(2, 2) == a * a;
                if (!ok) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    for (const char* rs : {"Z", "Z/9", "F_7"}) {
        Ring R = ring_parse(rs);
        for (int t = 0; t < 20; ++t) {
            ++gen_count;
            try {
                auto [p0, triv] = gen.free_p0(R, R->one());
                UmEpi e = gen.random_epi(p0);
                Completion comp = generalized_completion(triv, e);
                Matrix k = krusemeyer(e.a().at(0, 0), e.a().at(0, 1), e.a().at(0, 2),
                                      e.s().at(0, 0), e.s().at(1, 0), e.s().at(2, 0));
                if (comp.phi != k) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
        for (int t = 0; t < 16; ++t) {
            ++gen_count;
            try {
                auto [p0, triv] = gen.kernel_p0(R);
                UmEpi e = gen.random_epi(p0);
                Completion comp = generalized_completion(triv, e);
                if (!determinant(comp.phi).is_one()) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << kru << " krusemeyer + " << gen_count << " generalized, " << failures << " failures, "
      << secs << " s";
    return {failures == 0 && kru >= 200 && gen_count >= 100 && secs < 10.0, d.str()};
}

// -------------------------------------------------------------------------
// 8. Lemma 4.8

Outcome l48_suite() {
    auto t0 = Clock::now();
    size_t instances = 0, failures = 0;
    auto check = [&](const Matrix& chi, size_t q_rank) {
        ++instances;
        try {
            ElemWord w = hyperbolic_diagonalize(chi, q_rank);
            Matrix target = standard_form(chi.ring(), standard_kind::h, chi.rows() + q_rank);
            if (congruence(eval_word(w), hyperbolic_diagonalize_input(chi, q_rank)) != target)
                ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    };
    for (const char* rs : {"F_5", "Z"}) {
        Ring R = ring_parse(rs);
        for (size_t q = 0; q <= 2; ++q) {
            check(psi(R, 1), q);
            check(psi(R, 2), q);
        }
        if (R->finite()) {
            for (long u = 2; u <= 4; ++u) check(psi(R, 1).scaled(R->from_int(u)), 0);
        } else {
            check(psi(R, 1).scaled(R->from_int(-1)), 0);
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " forms, " << failures << " failures, " << secs << " s";
    return {failures == 0, d.str()};
}

// -------------------------------------------------------------------------
// 9. Oracle bijectivity

Outcome oracle_suite() {
    std::ostringstream d;
    bool ok = true;
    for (const char* rs : {"F_3", "F_5"}) {
        auto t0 = Clock::now();
        SymbolMapReport rep = symbol_map_report(ring_parse(rs));
        double secs = seconds_since(t0);
        bool this_ok = rep.rows.orbits.size() == 1 && rep.classes.orbits.size() == 1 &&
                       rep.injective && rep.surjective && secs < 120.0;
        ok = ok && this_ok;
        d << rs << ": " << rep.rows.orbits.size() << " orbit / " << rep.classes.orbits.size()
          << " class, " << (rep.injective && rep.surjective ? "bijective" : "NOT bijective")
          << ", " << secs << " s; ";
    }
    {
        auto t0 = Clock::now();
        SymbolMapReport rep = symbol_map_report(ring_parse("Z/9"));
        double secs = seconds_since(t0);
        ok = ok && rep.surjective && secs < 120.0;
        d << "Z/9: " << (rep.surjective ? "surjective" : "NOT surjective") << ", " << secs
          << " s";
    }
    return {ok, d.str()};
}

// -------------------------------------------------------------------------
// 10. Lemma 2.10 split

Outcome l210_suite() {
    auto t0 = Clock::now();
    size_t instances = 0, failures = 0;
    for (const char* rs : {"F_3", "F_5"}) {
        Ring R = ring_parse(rs);
        long n = static_cast<long>(R->size().get_ui());
        // enumerate every Pfaffian-1 skew 4x4 matrix
        std::array<long, 6> e{};
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == 6) {
                Matrix m(R, 4, 4);
                static constexpr int pos[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                                  {1, 2}, {1, 3}, {2, 3}};
                for (int i = 0; i < 6; ++i) {
                    m.set(pos[i][0], pos[i][1], R->from_int(e[i]));
                    m.set(pos[i][1], pos[i][0], -R->from_int(e[i]));
                }
                if (!pfaffian(m).is_one()) return;
                ++instances;
                try {
                    auto [w, part] = split_off_hyperbolic(m);
                    if (congruence(eval_word(w), m) != orth_sum(part, psi(R, 1))) ++failures;
                } catch (const std::exception&) {
                    ++failures;
                }
                return;
            }
            for (long v = 0; v < n; ++v) {
                e[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
    }
    InstanceGen gen(1010);
    Ring f5 = ring_parse("F_5");
    for (int t = 0; t < 50; ++t) {
        ++instances;
        try {
            Matrix chi = gen.skew_invertible(f5, 6);
            auto [w, part] = split_off_hyperbolic(chi);
            if (congruence(eval_word(w), chi) != orth_sum(part, psi(f5, 1))) ++failures;
            if (pfaffian(part) != pfaffian(chi)) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << instances << " splits, " << failures << " failures, " << secs << " s";
    return {failures == 0 && secs < 60.0, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"pfaffian-identities", pfaffian_suite},
        {"elementary-word-identities", elem_suite},
        {"theorem-4.1-section-independence", t41_suite},
        {"theorem-4.3-elementary-invariance", t43_suite},
        {"lemma-4.2-pfaffian-one", l42_suite},
        {"classical-coincidence", coincidence_suite},
        {"completion-suite", completion_suite},
        {"lemma-4.8-hyperbolic-diagonalization", l48_suite},
        {"oracle-bijectivity", oracle_suite},
        {"lemma-2.10-split", l210_suite},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " (" << o.detail << ")\n";
        if (!o.pass) ++failed;
    }
    std::cout << (failed == 0 ? "acceptance: all criteria passed\n"
                              : "acceptance: " + std::to_string(failed) + " criteria failed\n");
    return failed;
}
