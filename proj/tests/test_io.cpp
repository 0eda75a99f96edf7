#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "vsym/instances.hpp"
#include "vsym/io.hpp"

using namespace vsym;
using namespace vsym::testutil;

namespace {

template <typename T, typename W, typename R>
void roundtrip(const T& value, W writer, R reader, bool check_bytes = true) {
    std::ostringstream os;
    writer(os, value);
    std::istringstream is(os.str());
    T back = reader(is);
    std::ostringstream os2;
    writer(os2, back);
    if (check_bytes) CHECK(os.str() == os2.str());
}

}  // namespace

TEST_CASE("matrix round trip") {
    auto rng = make_rng(100);
    for (const char* rs : {"Z", "Q", "Z/9", "F_7"}) {
        Ring R = ring_parse(rs);
        for (int t = 0; t < 10; ++t) {
            Matrix m = rand_matrix(R, rng, 1 + t % 4, 1 + (t * 3) % 5, 20);
            std::ostringstream os;
            write_matrix(os, m);
            std::istringstream is(os.str());
            CHECK(read_matrix(is) == m);
        }
    }

    // polynomial entries survive the compact encoding
    Ring zx = ring_parse("Z[x,y]");
    Matrix pm(zx, 2, 2);
    pm.set(0, 0, RingElement::parse(zx, "3*x^2*y-1"));
    pm.set(0, 1, RingElement::parse(zx, "-x+2"));
    pm.set(1, 1, RingElement::parse(zx, "y^3"));
    std::ostringstream os;
    write_matrix(os, pm);
    std::istringstream is(os.str());
    CHECK(read_matrix(is) == pm);
}

TEST_CASE("word round trip") {
    Ring z5 = ring_parse("Z/5");
    InstanceGen gen(101);

    SUBCASE("free blocks") {
        BlockDecomposition blocks(z5, {2, 1, 1});
        ElemWord w(blocks);
        Matrix c(z5, 4, 4);
        c.set(0, 3, z5->from_int(2));
        c.set(1, 3, z5->from_int(4));
        w.push(0, 2, c);
        std::ostringstream os;
        write_word(os, w);
        std::istringstream is(os.str());
        ElemWord back = read_word(is);
        CHECK(back.blocks() == w.blocks());
        CHECK(eval_word(back) == eval_word(w));
        std::ostringstream os2;
        write_word(os2, back);
        CHECK(os.str() == os2.str());
    }
    SUBCASE("idempotent block") {
        auto [p0, triv] = gen.kernel_p0(z5);
        ElemWord w = gen.random_word_p0r(p0, 3);
        std::ostringstream os;
        write_word(os, w);
        std::istringstream is(os.str());
        ElemWord back = read_word(is);
        CHECK(back.blocks() == w.blocks());
        CHECK(eval_word(back) == eval_word(w));
    }
}

TEST_CASE("cert round trip") {
    Ring z5 = ring_parse("Z/5");
    BlockDecomposition fine(z5, std::vector<size_t>(8, 1));
    ElemWord w(fine);
    Matrix c(z5, 8, 8);
    c.set(2, 6, z5->from_int(3));
    w.push(2, 6, c);
    EquivCert cert{1, w};
    std::ostringstream os;
    write_cert(os, cert);
    std::istringstream is(os.str());
    EquivCert back = read_cert(is);
    CHECK(back.stab == 1);
    CHECK(eval_word(back.word) == eval_word(cert.word));
}

TEST_CASE("problem round trip") {
    Ring z7 = ring_parse("Z/7");
    InstanceGen gen(102);
    auto [p0, triv] = gen.kernel_p0(z7);
    UmEpi e = gen.random_epi(p0);
    Problem p{p0, triv, e};

    std::ostringstream os;
    write_problem(os, p);
    std::istringstream is(os.str());
    Problem back = read_problem(is);
    CHECK(back.p0 == p.p0);
    CHECK(back.triv.w() == p.triv.w());
    CHECK(back.triv.lambda() == p.triv.lambda());
    CHECK(back.epi.a() == p.epi.a());
    CHECK(back.epi.s() == p.epi.s());

    std::ostringstream os2;
    write_problem(os2, back);
    CHECK(os.str() == os2.str());
}

TEST_CASE("malformed input raises domain errors") {
    std::istringstream bad1("not a header\n");
    CHECK_THROWS_AS(read_matrix(bad1), domain_error);
    std::istringstream bad2("# vsym matrix v1\nring Z\nrows 2\ncols 2\n1 2 3\n");
    CHECK_THROWS_AS(read_matrix(bad2), domain_error);
    std::istringstream bad3("# vsym matrix v1\nring Z/1\nrows 1\ncols 1\n0\n");
    CHECK_THROWS_AS(read_matrix(bad3), domain_error);
}
