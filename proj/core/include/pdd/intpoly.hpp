#ifndef PDD_INTPOLY_HPP
#define PDD_INTPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdd {

/// Sign inventory of a polynomial's coefficients.
struct SignCensus {
    std::size_t n_positive = 0;
    std::size_t n_negative = 0;
    bool zero_poly = false;

    bool single_signed() const {
        return !zero_poly && (n_positive == 0 || n_negative == 0);
    }
};

/// Exact multivariate polynomial with arbitrary-precision integer
/// coefficients over a fixed, ordered variable set (names from {X,Y,Z,T,D}).
///
/// Canonical form: no stored coefficient is zero, every exponent vector has
/// one entry per variable, and terms are kept in graded-lex order (total
/// degree first, then exponents compared in variable order). Two polynomials
/// over the same variable set are equal iff their term maps are equal.
class IntPoly {
public:
    using Exponents = std::vector<unsigned>;

    struct GrlexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, mpz_class, GrlexLess>;

    IntPoly() = default;  // zero polynomial over the empty variable set
    explicit IntPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static IntPoly zero(std::vector<std::string> vars);
    static IntPoly constant(std::vector<std::string> vars, const mpz_class& c);
    static IntPoly variable(const std::vector<std::string>& vars, const std::string& name);
    /// Linear combination c0 + sum_i coeffs[i] * vars[i].
    static IntPoly linear(const std::vector<std::string>& vars,
                          const std::vector<mpz_class>& coeffs,
                          const mpz_class& c0 = 0);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const;  // -1 for the zero polynomial

    /// Adds c * X^e into the term map, keeping canonical form.
    void add_term(const Exponents& e, const mpz_class& c);

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& q);
    IntPoly& operator-=(const IntPoly& q);
    friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
    friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
    IntPoly& operator*=(const IntPoly& q) { return *this = *this * q; }
    friend IntPoly operator*(const IntPoly& p, const mpz_class& k);
    IntPoly pow(unsigned n) const;

    bool operator==(const IntPoly& q) const {
        return vars_ == q.vars_ && terms_ == q.terms_;
    }
    bool operator!=(const IntPoly& q) const { return !(*this == q); }

    /// gcd of |coefficients|; 0 for the zero polynomial.
    mpz_class content() const;
    IntPoly primitive_part() const;

    SignCensus sign_census() const;
    bool single_signed() const { return sign_census().single_signed(); }

    /// Exact rational evaluation; every variable must be assigned.
    mpq_class eval(const std::map<std::string, mpq_class>& point) const;

    /// Composition: every variable of *this gets an image over a common
    /// variable set. Throws std::invalid_argument on a missing image or
    /// mismatched image variable sets.
    IntPoly substitute(const std::map<std::string, IntPoly>& images) const;

    /// Exact division test: returns q with p = d * q over Z, or nullopt.
    /// Greedy leading-term elimination in grlex order; on multiples each
    /// step's term quotient is forced, so failure at any step is a proof of
    /// non-divisibility. The result is multiplied back as a final check.
    static std::optional<IntPoly> divide_exact(const IntPoly& d, const IntPoly& p);

    /// Canonical text, terms in descending grlex order: "2*X^2 + 1*X*Z - 1*Y*Z".
    std::string str() const;

private:
    void require_same_vars(const IntPoly& q) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// poly_divides: true iff p = d*q exactly for some integer-coefficient q.
inline bool poly_divides(const IntPoly& d, const IntPoly& p) {
    return IntPoly::divide_exact(d, p).has_value();
}

} // namespace pdd

#endif
