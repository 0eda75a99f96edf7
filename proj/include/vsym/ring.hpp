#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vsym {

// Domain errors abort the requested operation; the CLI maps them to exit 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certificate or mandatory internal verification failed; CLI exit 2.
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_unimodular : domain_error {
    not_unimodular() : domain_error("row is not unimodular: no Bezout witness exists") {}
};

struct unsupported_ring : domain_error {
    explicit unsupported_ring(const std::string& what) : domain_error(what) {}
};

enum class ring_family { integers, rationals, mod_n, prime_field, polynomial };

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

class RingElement;

// Immutable description of a supported coefficient ring. Always held through
// a shared_ptr (the `Ring` alias); elements keep their ring alive.
class RingSpec : public std::enable_shared_from_this<RingSpec> {
  public:
    ring_family family;
    mpz_class modulus;              // mod_n / prime_field
    Ring base;                      // polynomial
    std::vector<std::string> vars;  // polynomial

    static Ring integers();
    static Ring rationals();
    static Ring mod_n(const mpz_class& n);        // n >= 2
    static Ring prime_field(const mpz_class& p);  // p prime
    static Ring polynomial(Ring base, std::vector<std::string> vars);

    std::string text() const;
    bool finite() const { return family == ring_family::mod_n || family == ring_family::prime_field; }
    mpz_class size() const;  // finite rings only
    bool two_is_unit() const;
    bool equals(const RingSpec& other) const;

    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(long v) const;
    RingElement from_mpz(const mpz_class& v) const;
    // Enumeration of a finite ring: elements are indexed 0 .. size()-1.
    RingElement element_at(const mpz_class& index) const;

  private:
    RingSpec() = default;
};

bool same_ring(const Ring& a, const Ring& b);

// Grammar: Z | Q | Z/<n> | F_<p> | <base>[x1,...,xk]
Ring ring_parse(std::string_view text);

using Monomial = std::vector<unsigned>;  // exponent per variable

struct PolyData;

// Exact element of a RingSpec ring in canonical form: residues in [0, n),
// fractions normalized with positive denominator, polynomials as sorted
// monomial maps with nonzero coefficients. Equality is representation
// equality. Values are immutable after construction.
class RingElement {
  public:
    RingElement(Ring ring, mpz_class v);
    RingElement(Ring ring, mpq_class v);
    RingElement(Ring ring, std::shared_ptr<const PolyData> p);

    const Ring& ring() const { return ring_; }

    bool is_zero() const;
    bool is_one() const;

    RingElement operator-() const;
    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement& operator+=(const RingElement& b) { return *this = *this + b; }
    RingElement& operator-=(const RingElement& b) { return *this = *this - b; }
    RingElement& operator*=(const RingElement& b) { return *this = *this * b; }

    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    RingElement pow(unsigned long e) const;

    // Total order on elements of one ring (canonical-representation order);
    // used for deterministic keys, not for algebra.
    static int cmp(const RingElement& a, const RingElement& b);

    std::string text() const;  // compact form, no interior spaces
    static RingElement parse(const Ring& ring, std::string_view text);

    // Integer-like access for residues / integers.
    const mpz_class& as_mpz() const;
    const mpq_class& as_mpq() const;
    const PolyData& as_poly() const;

  private:
    Ring ring_;
    std::variant<mpz_class, mpq_class, std::shared_ptr<const PolyData>> v_;
};

struct MonomialCmp {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct PolyData {
    std::map<Monomial, RingElement, MonomialCmp> terms;  // nonzero coefficients only
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

// Returns the inverse iff x is a unit; the inverse is verified by
// multiplication before it is returned.
std::optional<RingElement> is_unit(const RingElement& x);

// Solves sum a_i b_i = 1 exactly. Throws not_unimodular when no witness
// exists and unsupported_ring for ring families without a solver
// (multivariate polynomials, polynomials over non-fields).
std::vector<RingElement> bezout_witness(const std::vector<RingElement>& row);

}  // namespace vsym
