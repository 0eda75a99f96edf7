#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <sstream>

#include "vsym/complete.hpp"
#include "vsym/instances.hpp"
#include "vsym/io.hpp"
#include "vsym/oracle.hpp"
#include "vsym/symbol.hpp"

using namespace vsym;

namespace {

Ring ring_from_flag_or(const std::string& flag, const Ring& fallback) {
    if (flag.empty()) return fallback;
    Ring r = ring_parse(flag);
    if (fallback && !same_ring(r, fallback))
        throw domain_error("--ring " + flag + " does not match the file ring " + fallback->text());
    return r;
}

Matrix parse_csv_row(const Ring& ring, const std::string& csv) {
    std::vector<RingElement> entries;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) entries.push_back(RingElement::parse(ring, tok));
    return row_vector(ring, entries);
}

int run_pfaffian(const std::string& ring_flag, const std::string& in_path) {
    std::istringstream is(slurp_file(in_path));
    Matrix m = read_matrix(is);
    ring_from_flag_or(ring_flag, m.ring());
    std::cout << pfaffian(m).text() << "\n";
    return 0;
}

int run_verify(const std::string& ring_flag, const std::string& left, const std::string& right,
               const std::string& cert_path) {
    std::istringstream ls(slurp_file(left)), rs(slurp_file(right)), cs(slurp_file(cert_path));
    WittRep m(read_matrix(ls));
    WittRep n(read_matrix(rs));
    ring_from_flag_or(ring_flag, m.matrix().ring());
    EquivCert cert = read_cert(cs);
    if (!verify_equiv(m, n, cert)) {
        std::cerr << "verification failed: certificate does not relate the two forms\n";
        return 2;
    }
    std::cout << "verified\n";
    return 0;
}

int run_symbol(const std::string& ring_flag, const std::string& problem_path,
               const std::string& row_csv, const std::string& witness_csv,
               const std::string& out_path) {
    if (!problem_path.empty()) {
        std::istringstream is(slurp_file(problem_path));
        Problem p = read_problem(is);
        ring_from_flag_or(ring_flag, p.p0.ring());
        SymbolResult r = generalized_symbol(p.triv, p.epi);
        std::ostringstream os;
        write_symbol_result(os, r);
        if (!out_path.empty()) spit_file(out_path, os.str());
        std::cout << "pfaffian " << r.pf.text() << "\n";
        return 0;
    }
    if (row_csv.empty()) throw domain_error("symbol needs --problem or --row/--witness");
    Ring ring = ring_parse(ring_flag.empty() ? "Z" : ring_flag);
    Matrix a = parse_csv_row(ring, row_csv);
    Matrix b = witness_csv.empty() ? InstanceGen(1).witness_for(a)
                                   : parse_csv_row(ring, witness_csv).transpose();
    Matrix v = classical_vaserstein(a, b);
    std::ostringstream os;
    write_matrix(os, v);
    if (!out_path.empty())
        spit_file(out_path, os.str());
    else
        std::cout << os.str();
    return 0;
}

int run_complete(const std::string& ring_flag, const std::string& problem_path,
                 const std::string& bca_csv, const std::string& qrp_csv,
                 const std::string& out_path) {
    std::ostringstream os;
    if (!problem_path.empty()) {
        std::istringstream is(slurp_file(problem_path));
        Problem p = read_problem(is);
        ring_from_flag_or(ring_flag, p.p0.ring());
        Completion c = generalized_completion(p.triv, p.epi);
        write_completion(os, c);
    } else {
        if (bca_csv.empty() || qrp_csv.empty())
            throw domain_error("complete needs --problem or --bca/--qrp");
        Ring ring = ring_parse(ring_flag.empty() ? "Z" : ring_flag);
        Matrix bca = parse_csv_row(ring, bca_csv);
        Matrix qrp = parse_csv_row(ring, qrp_csv);
        if (bca.cols() != 3 || qrp.cols() != 3)
            throw domain_error("--bca and --qrp take three comma-separated elements");
        Matrix k = krusemeyer(bca.at(0, 0), bca.at(0, 1), bca.at(0, 2), qrp.at(0, 0), qrp.at(0, 1),
                              qrp.at(0, 2));
        write_matrix(os, k);
    }
    if (!out_path.empty())
        spit_file(out_path, os.str());
    else
        std::cout << os.str();
    return 0;
}

int run_oracle(const std::string& ring_flag, size_t stab, const std::string& out_path) {
    Ring ring = ring_parse(ring_flag);
    auto t0 = std::chrono::steady_clock::now();
    SymbolMapReport rep = symbol_map_report(ring);
    if (stab == 1) rep.classes = orbits_a4(ring, 1);
    auto t1 = std::chrono::steady_clock::now();
    std::string text = rep.text();
    if (!out_path.empty()) spit_file(out_path, text);
    std::cout << text;
    std::cerr << "oracle time "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << " ms\n";
    return 0;
}

// Randomized identity suites: Lemma 2.3, the Whitehead word, Lemma 4.8,
// Theorem 4.1 section independence, Theorem 4.3 elementary invariance.
int run_selftest(uint64_t seed, bool quick) {
    InstanceGen gen(seed);
    size_t n_word = quick ? 20 : 60;
    size_t n_sym = quick ? 8 : 25;

    auto check = [](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) throw verify_error(what);
    };

    for (const char* rs : {"Z", "F_7"}) {
        Ring R = ring_parse(rs);
        size_t good = 0;
        for (size_t i = 0; i < n_word; ++i) {
            BlockDecomposition blocks(R, {1, 1, 1});
            Matrix s_ij(R, 3, 3), s_jk(R, 3, 3);
            s_ij.set(0, 1, gen.element(R, 3));
            s_jk.set(1, 2, gen.element(R, 3));
            ElemWord lhs = commutator_factorization(blocks, 0, 1, 2, s_ij, s_jk);
            ElemWord rhs(blocks);
            rhs.push(0, 2, s_ij * s_jk);
            if (eval_word(lhs) == eval_word(rhs)) ++good;
        }
        check(good == n_word, std::string("lemma 2.3 commutator identities over ") + rs);

        good = 0;
        size_t tried = 0;
        while (good < n_word && tried < n_word * 100) {
            ++tried;
            BlockDecomposition blocks(R, {1, 1});
            Matrix f(R, 2, 2), g(R, 2, 2);
            f.set(1, 0, gen.element(R, 2));
            g.set(0, 1, gen.element(R, 2));
            Matrix id = Matrix::identity(R, 2);
            if (!is_unit(determinant(id + g * f))) continue;
            ElemWord w = whitehead_word(blocks, f, g);
            Matrix target(R, 2, 2);
            target.set(0, 0, (id + g * f).at(0, 0));
            target.set(1, 1, inverse(id + f * g).at(1, 1));
            if (eval_word(w) == target) ++good;
        }
        check(good == n_word, std::string("whitehead five-factor words over ") + rs);
    }

    for (const char* rs : {"F_5", "Z"}) {
        Ring R = ring_parse(rs);
        bool ok = true;
        for (size_t half : {1u, 2u}) {
            Matrix chi = standard_form(R, standard_kind::psi, half);
            ok = ok && !hyperbolic_diagonalize(chi, 0).factors().empty();
            Matrix uchi = chi.scaled(gen.unit(R));
            ok = ok && !hyperbolic_diagonalize(uchi, 1).factors().empty();
        }
        check(ok, std::string("lemma 4.8 hyperbolic diagonalization over ") + rs);
    }

    for (const char* rs : {"Z/5", "Z/7"}) {
        Ring R = ring_parse(rs);
        size_t good = 0;
        for (size_t i = 0; i < n_sym; ++i) {
            auto [p0, triv] = (i % 2 == 0) ? gen.kernel_p0(R) : gen.free_p0(R, gen.unit(R));
            UmEpi e = gen.random_epi(p0);
            Matrix t = gen.second_section(e);
            section_independence_witness(triv, e.a(), e.s(), t, p0);  // throws on failure
            ElemWord phi = gen.random_word_p0r(p0, 1 + (i % 2));
            if (elementary_invariance_check(triv, e, phi)) ++good;
        }
        check(good == n_sym,
              std::string("theorem 4.1 / 4.3 witnesses on random instances over ") + rs);
    }

    std::cout << "selftest passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with the generalized Vaserstein symbol"};
    app.require_subcommand(1);

    std::string ring_flag, in_path, left, right, cert_path, out_path, problem_path;
    std::string row_csv, witness_csv, bca_csv, qrp_csv;
    size_t stab = 0;
    uint64_t seed = 20240;
    bool quick = false;

    auto* pf = app.add_subcommand("pfaffian", "Pfaffian of a skew matrix file");
    pf->add_option("--ring", ring_flag);
    pf->add_option("--in", in_path)->required();

    auto* ver = app.add_subcommand("verify", "check an equivalence certificate");
    ver->add_option("--ring", ring_flag);
    ver->add_option("--left", left)->required();
    ver->add_option("--right", right)->required();
    ver->add_option("--cert", cert_path)->required();

    auto* sym = app.add_subcommand("symbol", "generalized or classical Vaserstein symbol");
    sym->add_option("--ring", ring_flag);
    sym->add_option("--problem", problem_path);
    sym->add_option("--row", row_csv);
    sym->add_option("--witness", witness_csv);
    sym->add_option("--out", out_path);

    auto* comp = app.add_subcommand("complete", "explicit determinant-1 completions");
    comp->add_option("--ring", ring_flag);
    comp->add_option("--problem", problem_path);
    comp->add_option("--bca", bca_csv);
    comp->add_option("--qrp", qrp_csv);
    comp->add_option("--out", out_path);

    auto* orc = app.add_subcommand("oracle", "finite-ring brute-force orbit report");
    orc->add_option("--ring", ring_flag)->required();
    orc->add_option("--stab", stab)->check(CLI::Range(0, 1));
    orc->add_option("--out", out_path);

    auto* st = app.add_subcommand("selftest", "randomized identity suites");
    st->add_option("--seed", seed);
    st->add_flag("--quick", quick);

    CLI11_PARSE(app, argc, argv);

    try {
        if (pf->parsed()) return run_pfaffian(ring_flag, in_path);
        if (ver->parsed()) return run_verify(ring_flag, left, right, cert_path);
        if (sym->parsed()) return run_symbol(ring_flag, problem_path, row_csv, witness_csv, out_path);
        if (comp->parsed()) return run_complete(ring_flag, problem_path, bca_csv, qrp_csv, out_path);
        if (orc->parsed()) return run_oracle(ring_flag, stab, out_path);
        if (st->parsed()) return run_selftest(seed, quick);
    } catch (const verify_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
