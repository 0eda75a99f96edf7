#include "vsym/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vsym {

namespace {

void expect_header(std::istream& is, const std::string& kind) {
    std::string line;
    if (!std::getline(is, line) || line != "# vsym " + kind + " v1")
        throw domain_error("expected header '# vsym " + kind + " v1'");
}

std::string expect_key(std::istream& is, const std::string& key) {
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
        if (line == key) return "";
        throw domain_error("expected '" + key + "', found '" + line + "'");
    }
    throw domain_error("unexpected end of input, expected '" + key + "'");
}

size_t to_count(const std::string& s) {
    size_t pos = 0;
    size_t v = std::stoul(s, &pos);
    if (pos != s.size()) throw domain_error("bad count '" + s + "'");
    return v;
}

void write_entries(std::ostream& os, const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).text();
        os << "\n";
    }
}

Matrix read_entries(std::istream& is, const Ring& ring, size_t rows, size_t cols) {
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw domain_error("unexpected end of matrix entries");
            m.set(i, j, RingElement::parse(ring, tok));
        }
    std::string rest;
    std::getline(is, rest);
    return m;
}

}  // namespace

void write_matrix(std::ostream& os, const Matrix& m) {
    os << "# vsym matrix v1\n";
    os << "ring " << m.ring()->text() << "\n";
    os << "rows " << m.rows() << "\n";
    os << "cols " << m.cols() << "\n";
    write_entries(os, m);
}

Matrix read_matrix(std::istream& is) {
    expect_header(is, "matrix");
    Ring ring = ring_parse(expect_key(is, "ring"));
    size_t rows = to_count(expect_key(is, "rows"));
    size_t cols = to_count(expect_key(is, "cols"));
    return read_entries(is, ring, rows, cols);
}

void write_word(std::ostream& os, const ElemWord& w) {
    os << "# vsym word v1\n";
    os << "ring " << w.ring()->text() << "\n";
    os << "dim " << w.dim() << "\n";
    os << "blocks";
    for (size_t i = 0; i < w.blocks().count(); ++i) os << " " << w.blocks().size(i);
    os << "\n";
    if (w.blocks().idem_index()) {
        os << "idem " << *w.blocks().idem_index() << "\n";
        write_entries(os, w.blocks().idem());
    }
    os << "factors " << w.factors().size() << "\n";
    for (const auto& f : w.factors()) {
        os << "factor " << f.target() << " " << f.source() << "\n";
        write_entries(os, f.coeff());
    }
}

ElemWord read_word(std::istream& is) {
    expect_header(is, "word");
    Ring ring = ring_parse(expect_key(is, "ring"));
    size_t dim = to_count(expect_key(is, "dim"));
    std::istringstream bs(expect_key(is, "blocks"));
    std::vector<size_t> sizes;
    size_t s;
    while (bs >> s) sizes.push_back(s);

    std::string line;
    std::streampos before = is.tellg();
    std::optional<size_t> idem_index;
    Matrix idem(ring, 0, 0);
    if (std::getline(is, line) && line.rfind("idem ", 0) == 0) {
        idem_index = to_count(line.substr(5));
        size_t bsize = sizes.at(*idem_index);
        idem = read_entries(is, ring, bsize, bsize);
    } else {
        is.clear();
        is.seekg(before);
    }

    BlockDecomposition blocks =
        idem_index ? BlockDecomposition(ring, sizes, *idem_index, idem)
                   : BlockDecomposition(ring, sizes);
    if (blocks.dim() != dim) throw domain_error("word dim does not match its blocks");

    size_t nf = to_count(expect_key(is, "factors"));
    ElemWord w(blocks);
    for (size_t k = 0; k < nf; ++k) {
        std::istringstream fs(expect_key(is, "factor"));
        size_t target, source;
        if (!(fs >> target >> source)) throw domain_error("bad factor line");
        w.push(target, source, read_entries(is, ring, dim, dim));
    }
    return w;
}

void write_cert(std::ostream& os, const EquivCert& c) {
    os << "# vsym cert v1\n";
    os << "stab " << c.stab << "\n";
    write_word(os, c.word);
}

EquivCert read_cert(std::istream& is) {
    expect_header(is, "cert");
    size_t stab = to_count(expect_key(is, "stab"));
    return EquivCert{stab, read_word(is)};
}

void write_problem(std::ostream& os, const Problem& p) {
    os << "# vsym problem v1\n";
    os << "ring " << p.p0.ring()->text() << "\n";
    os << "ambient " << p.p0.ambient() << "\n";
    os << "idem\n";
    write_entries(os, p.p0.idem());
    os << "w\n";
    write_entries(os, p.triv.w().transpose());
    os << "lambda\n";
    write_entries(os, p.triv.lambda());
    os << "a\n";
    write_entries(os, p.epi.a());
    os << "s\n";
    write_entries(os, p.epi.s().transpose());
}

Problem read_problem(std::istream& is) {
    expect_header(is, "problem");
    Ring ring = ring_parse(expect_key(is, "ring"));
    size_t m = to_count(expect_key(is, "ambient"));
    expect_key(is, "idem");
    Matrix idem = read_entries(is, ring, m, m);
    ProjModule p0(idem, 2);
    expect_key(is, "w");
    Matrix w = read_entries(is, ring, 1, wedge2_dim(m)).transpose();
    expect_key(is, "lambda");
    Matrix lambda = read_entries(is, ring, 1, wedge2_dim(m));
    Trivialization triv(p0, w, lambda);
    expect_key(is, "a");
    Matrix a = read_entries(is, ring, 1, m + 1);
    expect_key(is, "s");
    Matrix s = read_entries(is, ring, 1, m + 1).transpose();
    return Problem{p0, triv, UmEpi(p0, a, s)};
}

void write_symbol_result(std::ostream& os, const SymbolResult& r) {
    os << "# vsym symbol v1\n";
    os << "ring " << r.base.module().ring()->text() << "\n";
    os << "pfaffian " << r.pf.text() << "\n";
    os << "base-ambient " << r.base.module().ambient() << "\n";
    os << "base-idem\n";
    write_entries(os, r.base.module().idem());
    os << "base-g\n";
    write_entries(os, r.base.g());
    os << "base-f\n";
    write_entries(os, r.base.f());
    os << "embedded-rank " << r.embedded.module().rank() << "\n";
    os << "embedded-g\n";
    write_entries(os, r.embedded.g());
    os << "embedded-f\n";
    write_entries(os, r.embedded.f());
    os << "witt-size " << r.witt.size() << "\n";
    os << "witt\n";
    write_entries(os, r.witt.matrix());
}

void write_completion(std::ostream& os, const Completion& c) {
    os << "# vsym completion v1\n";
    os << "ring " << c.phi.ring()->text() << "\n";
    os << "size " << c.phi.rows() << "\n";
    os << "phi\n";
    write_entries(os, c.phi);
    os << "target\n";
    write_entries(os, c.target);
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write file '" + path + "'");
    out << contents;
}

}  // namespace vsym
