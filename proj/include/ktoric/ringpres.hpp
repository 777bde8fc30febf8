#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktoric/exactlinalg.hpp"
#include "ktoric/simplicial.hpp"

namespace ktoric {

/// Polynomial ring Z[x_1..x_n, y_1..y_n, u_1..u_s] where y_i is the inverse
/// partner of x_i (relation x_i y_i - 1) and u_j is a unit of finite order
/// (relation u_j^order_j - 1). Variable indices: x-block 0..n-1, y-block
/// n..2n-1, u-block 2n..2n+s-1.
struct RingSignature {
    int laurent_vars = 0;
    std::vector<Int> unit_orders;

    int unit_count() const { return static_cast<int>(unit_orders.size()); }
    int var_count() const { return 2 * laurent_vars + unit_count(); }
    std::string var_name(int v) const;
};

/// Monomial as a sparse exponent map (only positive exponents stored).
struct Monomial {
    std::map<int, long long> exponents;

    static Monomial one() { return {}; }
    static Monomial var(int v, long long e = 1);
    long long degree() const;
    long long exponent(int v) const;
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial quotient_by(const Monomial& m) const;  // requires m.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial&) const = default;
};

/// Degree reverse lexicographic over the full alphabet (x-block before
/// y-block before u-block, by variable index). Returns <0, 0, >0.
int compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialDesc {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return compare_monomials(a, b) > 0;
    }
};

/// Integer-coefficient polynomial in canonical form (no zero coefficients);
/// terms ordered leading-first.
class IntPolynomial {
public:
    using TermMap = std::map<Monomial, Int, MonomialDesc>;

    IntPolynomial() = default;
    static IntPolynomial constant(Int c);
    static IntPolynomial term(Monomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    const Monomial& leading_monomial() const;  // throws on zero
    const Int& leading_coefficient() const;

    void add_term(const Monomial& m, const Int& c);
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial times(const Int& c) const;
    IntPolynomial times(const Monomial& m) const;
    bool operator==(const IntPolynomial&) const = default;

    std::string to_string(const RingSignature& sig) const;

private:
    TermMap terms_;
};

struct GroebnerBasis {
    RingSignature sig;
    /// Sign-normalized (positive leading coefficient), auto-reduced, sorted
    /// by leading monomial. Always contains the Laurent and unit relations.
    std::vector<IntPolynomial> generators;
};

/// Strong Groebner basis over Z: every leading term of the ideal is
/// divisible, monomial and coefficient, by some basis leading term.
/// Buchberger completion with S-polynomials (lcm of monomials and of leading
/// coefficients) and G-polynomials (Bezout combinations). Throws
/// std::runtime_error when the step budget is exhausted.
GroebnerBasis strong_groebner(const RingSignature& sig, std::vector<IntPolynomial> gens,
                              long long step_budget = 5000000);

/// Canonical remainder: every term has a monomial divisible by no unit-lc
/// leading monomial, and a coefficient in [0, lc) for every applicable basis
/// element. normal_form(f) == 0 iff f lies in the ideal.
IntPolynomial normal_form(const GroebnerBasis& gb, IntPolynomial f);

struct GeneratorMonomials {
    bool finite = false;
    std::vector<Monomial> monomials;  // ascending in the term order
    int witness_variable = -1;        // an unbounded direction when infinite
};

/// Monomials outside the staircase of unit-coefficient leading terms; these
/// generate the quotient as an abelian group when finite.
GeneratorMonomials finite_generator_monomials(const GroebnerBasis& gb);

/// The quotient ring's structure as a finitely generated abelian group on
/// the staircase generators.
struct QuotientStructure {
    FgAbelianGroup group;
    std::vector<Monomial> generator_monomials;
    IntMatrix relations{0, 0};  // columns = relation vectors on the generators

    /// Canonical group coordinates of the class of f.
    std::vector<Int> coordinates(const GroebnerBasis& gb, const IntPolynomial& f) const;
    /// Order of the class of f in the group; nullopt means infinite.
    std::optional<Int> class_order(const GroebnerBasis& gb, const IntPolynomial& f) const;
};

/// Throws std::runtime_error when the generator set is infinite.
QuotientStructure abelian_structure(const GroebnerBasis& gb);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t offset_)
        : std::runtime_error(what), offset(offset_)
    {
    }
    size_t offset;
};

/// Expression grammar: integers, variables x1..xn, operators + - * ^
/// (integer exponents; negative exponents rewrite to inverse partners),
/// parentheses; ^ binds tighter than *, which binds tighter than + and -.
IntPolynomial parse_element(const std::string& src, const RingSignature& sig);

/// Inverse of a monomial in the unit group: swaps x/y exponents and negates
/// u exponents modulo their orders.
Monomial inverse_monomial(const Monomial& m, const RingSignature& sig);
/// Reduce u-exponents into [0, order).
Monomial reduce_units(Monomial m, const RingSignature& sig);

/// Image of f under x_i -> images[i] (and y_i -> the inverse monomial);
/// images are monomials of the target signature.
IntPolynomial substitute_monomials(const IntPolynomial& f, const RingSignature& from,
                                   const RingSignature& to,
                                   const std::vector<Monomial>& images);

/// Dimension over the field of the quotient by the same ideal with field
/// coefficients (independent Buchberger computation); -1 when infinite.
long long field_quotient_dimension(const RingSignature& sig,
                                   const std::vector<IntPolynomial>& gens,
                                   const CoeffField& field);

}  // namespace ktoric
