#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "vsym/instances.hpp"
#include "vsym/symbol.hpp"

using namespace vsym;
using namespace vsym::testutil;

namespace {

Matrix psi(const Ring& r, size_t half) { return standard_form(r, standard_kind::psi, half); }

// The 4x4 display of the pulled-back form in the free case with w = e1^e2:
// [[0, s3, -s2, a1], [-s3, 0, s1, a2], [s2, -s1, 0, a3], [-a1, -a2, -a3, 0]].
Matrix theorem41_display(const Matrix& a, const Matrix& s) {
    const Ring& R = a.ring();
    Matrix m(R, 4, 4);
    auto set_pair = [&](size_t i, size_t j, const RingElement& v) {
        m.set(i, j, v);
        m.set(j, i, -v);
    };
    set_pair(0, 1, s.at(2, 0));
    set_pair(0, 2, -s.at(1, 0));
    set_pair(1, 2, s.at(0, 0));
    set_pair(0, 3, a.at(0, 0));
    set_pair(1, 3, a.at(0, 1));
    set_pair(2, 3, a.at(0, 2));
    return m;
}

}  // namespace

TEST_CASE("classical_vaserstein") {
    Ring z = ring_parse("Z");
    Matrix base = classical_vaserstein(row_from_ints(z, {1, 0, 0}), col_from_ints(z, {1, 0, 0}));
    CHECK(base == matrix_from_ints(z, 4, 4,
                                   {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
    CHECK(pfaffian(base).is_one());

    Matrix v = classical_vaserstein(row_from_ints(z, {2, 3, 25}), col_from_ints(z, {-1, 1, 0}));
    CHECK(pfaffian(v).is_one());
    CHECK(v.at(1, 0) == z->from_int(2));

    CHECK_THROWS_AS(
        classical_vaserstein(row_from_ints(z, {2, 4, 6}), col_from_ints(z, {1, 1, 1})),
        domain_error);
}

TEST_CASE("generalized symbol at the basepoint reduces to zero") {
    Ring z5 = ring_parse("Z/5");
    InstanceGen gen(70);
    auto [p0, triv] = gen.free_p0(z5, z5->one());
    SymbolResult r = generalized_symbol(triv, gen.basepoint_epi(p0));
    CHECK(r.base.g() == r.base.f());
    CHECK(v_reduce(VElement::single(r.base)).is_zero());
    CHECK(r.pf.is_one());

    // idempotent-presented basepoint too
    auto [pk, trivk] = gen.kernel_p0(z5);
    SymbolResult rk = generalized_symbol(trivk, gen.basepoint_epi(pk));
    CHECK(rk.base.g() == rk.base.f());
    CHECK(rk.pf.is_one());
}

TEST_CASE("free case matches sigma^t V(a,b)^t sigma") {
    auto check_row = [](const Ring& R, const Matrix& a, const Matrix& b) {
        InstanceGen gen(71);
        auto [p0, triv] = gen.free_p0(R, R->one());
        UmEpi e(p0, a, b);
        Matrix pulled = pulled_back_form(triv, e);
        Matrix sigma = classical_sigma(R);
        Matrix v = classical_vaserstein(a, b);
        CHECK(pulled == congruence(sigma, v.transpose()));
        CHECK(pulled == theorem41_display(a, b));
        SymbolResult r = generalized_symbol(triv, e);
        CHECK(r.pf.is_one());
    };
    Ring z = ring_parse("Z");
    check_row(z, row_from_ints(z, {2, 3, 25}), col_from_ints(z, {-1, 1, 0}));

    Ring f7 = ring_parse("F_7");
    InstanceGen gen(72);
    for (int t = 0; t < 10; ++t) {
        Matrix a = gen.unimodular_row3(f7);
        check_row(f7, a, gen.witness_for(a));
    }
}

TEST_CASE("kernel-presented base over Z/5 has Pfaffian 1") {
    Ring z5 = ring_parse("Z/5");
    InstanceGen gen(73);
    for (int t = 0; t < 5; ++t) {
        auto [p0, triv] = gen.kernel_p0(z5);
        UmEpi e = gen.random_epi(p0);
        SymbolResult r = generalized_symbol(triv, e);
        CHECK(r.pf.is_one());
        CHECK(r.witt.size() == 20);
    }
}

TEST_CASE("section independence witness") {
    SUBCASE("equal sections give the empty word") {
        Ring z5 = ring_parse("Z/5");
        InstanceGen gen(74);
        auto [p0, triv] = gen.free_p0(z5, z5->one());
        UmEpi e = gen.random_epi(p0);
        ElemWord w = section_independence_witness(triv, e.a(), e.s(), e.s(), p0);
        CHECK(w.factors().empty());
    }
    SUBCASE("free case, two Bezout witnesses over Z/5") {
        Ring z5 = ring_parse("Z/5");
        InstanceGen gen(75);
        auto [p0, triv] = gen.free_p0(z5, z5->one());
        for (int t = 0; t < 10; ++t) {
            UmEpi e = gen.random_epi(p0);
            Matrix other = gen.second_section(e);
            ElemWord w = section_independence_witness(triv, e.a(), e.s(), other, p0);
            CHECK(w.factors().size() <= 2);
            // the congruence was verified inside; double-check independently
            UmEpi e2(p0, e.a(), other);
            CHECK(congruence(eval_word(w), pulled_back_form(triv, e)) ==
                  pulled_back_form(triv, e2));
        }
    }
    SUBCASE("kernel-presented base over Z/7") {
        Ring z7 = ring_parse("Z/7");
        InstanceGen gen(76);
        auto [p0, triv] = gen.kernel_p0(z7);
        for (int t = 0; t < 5; ++t) {
            UmEpi e = gen.random_epi(p0);
            Matrix other = gen.second_section(e);
            section_independence_witness(triv, e.a(), e.s(), other, p0);
        }
    }
}

TEST_CASE("elementary invariance") {
    Ring z5 = ring_parse("Z/5");
    InstanceGen gen(77);
    auto [p0, triv] = gen.free_p0(z5, z5->one());
    UmEpi e = gen.random_epi(p0);

    ElemWord id_word = gen.random_word_p0r(p0, 0);
    CHECK(elementary_invariance_check(triv, e, id_word));

    for (int t = 0; t < 10; ++t) {
        CHECK(elementary_invariance_check(triv, e, gen.random_word_p0r(p0, 1)));
    }

    Ring z7 = ring_parse("Z/7");
    InstanceGen gen7(78);
    auto [pk, trivk] = gen7.kernel_p0(z7);
    UmEpi ek = gen7.random_epi(pk);
    for (int t = 0; t < 5; ++t) {
        CHECK(elementary_invariance_check(trivk, ek, gen7.random_word_p0r(pk, 2)));
    }
}

TEST_CASE("scale_check") {
    Ring z5 = ring_parse("Z/5");
    InstanceGen gen(79);
    auto [p0, triv] = gen.free_p0(z5, z5->one());
    UmEpi base = gen.basepoint_epi(p0);
    CHECK(scale_check(triv, base, z5->one()));
    CHECK(scale_check(triv, base, -z5->one()));
    for (int t = 0; t < 8; ++t) {
        UmEpi e = gen.random_epi(p0);
        CHECK(scale_check(triv, e, z5->from_int(2)));
        CHECK(scale_check(triv, e, gen.unit(z5)));
    }
    auto [pk, trivk] = gen.kernel_p0(z5);
    UmEpi ek = gen.random_epi(pk);
    CHECK(scale_check(trivk, ek, z5->from_int(3)));
    CHECK_THROWS_AS(scale_check(triv, base, z5->zero()), domain_error);
}

TEST_CASE("classical coincidence") {
    Ring z = ring_parse("Z");
    CHECK(coincide_classical_check(row_from_ints(z, {1, 0, 0}), col_from_ints(z, {1, 0, 0})));
    CHECK(coincide_classical_check(row_from_ints(z, {2, 3, 25}), col_from_ints(z, {-1, 1, 0})));

    Ring f7 = ring_parse("F_7");
    InstanceGen gen(80);
    for (int t = 0; t < 10; ++t) {
        Matrix a = gen.unimodular_row3(f7);
        CHECK(coincide_classical_check(a, gen.witness_for(a)));
    }
}
