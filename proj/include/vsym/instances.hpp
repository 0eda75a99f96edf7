#pragma once

#include <random>
#include <utility>

#include "vsym/elem.hpp"
#include "vsym/projmod.hpp"

namespace vsym {

// Deterministic generator of the random instances used by the identity
// suites: unimodular rows, presented modules with trivializations,
// epimorphisms with sections, elementary words on P0 + R.
class InstanceGen {
  public:
    explicit InstanceGen(uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    long pick(long lo, long hi);
    RingElement element(const Ring& ring, long span = 9);
    RingElement unit(const Ring& ring);

    // Unimodular row of length 3 (retry sampling; always succeeds on the
    // supported families).
    Matrix unimodular_row3(const Ring& ring);
    Matrix witness_for(const Matrix& row);  // Bezout witness as a column

    // Free P0 = R^2 with the trivialization w = u(e1 ^ e2).
    std::pair<ProjModule, Trivialization> free_p0(const Ring& ring, const RingElement& u);
    // P0 presented as the kernel of a random unimodular row of length 3.
    std::pair<ProjModule, Trivialization> kernel_p0(const Ring& ring);

    // Random epimorphism P0 + R -> R with section.
    UmEpi random_epi(const ProjModule& p0);
    UmEpi basepoint_epi(const ProjModule& p0);
    // A second section of the same epimorphism (differs from e.s() whenever
    // the kernel has a nonzero element to offer).
    Matrix second_section(const UmEpi& e);

    // Random word on the blocks [P0, R] with the given number of factors.
    ElemWord random_word_p0r(const ProjModule& p0, size_t factors);

    // Random skew invertible n x n matrix (unit Pfaffian).
    Matrix skew_invertible(const Ring& ring, size_t n);

  private:
    std::mt19937_64 rng_;
};

}  // namespace vsym
