#pragma once

#include <iosfwd>
#include <string>

#include "vsym/complete.hpp"
#include "vsym/symbol.hpp"
#include "vsym/witt.hpp"

namespace vsym {

// Versioned, human-auditable text formats. Emission is deterministic:
// identical values serialize to identical bytes.

void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);

void write_word(std::ostream& os, const ElemWord& w);
ElemWord read_word(std::istream& is);

void write_cert(std::ostream& os, const EquivCert& c);
EquivCert read_cert(std::istream& is);

// A symbol/completion problem: ring, idempotent presentation of P0, the
// trivialization pair (w, lambda), the epimorphism a and its section s.
struct Problem {
    ProjModule p0;
    Trivialization triv;
    UmEpi epi;
};

void write_problem(std::ostream& os, const Problem& p);
Problem read_problem(std::istream& is);

void write_symbol_result(std::ostream& os, const SymbolResult& r);

void write_completion(std::ostream& os, const Completion& c);

// File helpers; read failures raise domain_error.
std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& contents);

}  // namespace vsym
