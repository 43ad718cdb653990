#pragma once

// Generalized Laurent polynomials in two variables with rational exponents and
// rational coefficients, i.e. the subring Q[X^Q, Y^Q] of the group ring of
// R x R.  A translation of a tile acts as multiplication by a monomial and a
// rescaling acts by scaling exponents, so all tile algebra happens here.

#include "shapetile/rational.hpp"

#include <map>
#include <string>

namespace shapetile {

struct ExponentPair {
    Rational u;  // exponent of X
    Rational v;  // exponent of Y

    friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const ExponentPair& a, const ExponentPair& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    }
};

class LaurentPoly {
  public:
    using TermMap = std::map<ExponentPair, Rational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& constant);

    static LaurentPoly monomial(const Rational& coeff, const Rational& u, const Rational& v);
    static LaurentPoly x() { return monomial(1, 1, 0); }
    static LaurentPoly y() { return monomial(1, 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of X^u Y^v (zero when absent).
    Rational coeff(const Rational& u, const Rational& v) const;

    /// Adds c * X^u Y^v, pruning the term if it cancels.
    void add_term(const ExponentPair& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    LaurentPoly& operator*=(const Rational& a);

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(LaurentPoly f, const Rational& a) { return f *= a; }
    friend LaurentPoly operator*(const Rational& a, LaurentPoly f) { return f *= a; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Value at X = Y = 1, i.e. the sum of all coefficients.
    Rational sum_of_coefficients() const;

    /// Evaluates at integer points for polynomials whose exponents are all
    /// integers.  Throws std::domain_error otherwise.
    Rational evaluate(const Rational& x, const Rational& y) const;

  private:
    TermMap terms_;
};

/// Sparse univariate Laurent polynomial in Z with rational exponents; the
/// image ring of the line substitution.
class UniLaurentPoly {
  public:
    using TermMap = std::map<Rational, Rational>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Rational& e, const Rational& c);
    Rational coeff(const Rational& e) const;

    friend UniLaurentPoly operator+(const UniLaurentPoly& f, const UniLaurentPoly& g);
    friend UniLaurentPoly operator*(const UniLaurentPoly& f, const UniLaurentPoly& g);
    friend bool operator==(const UniLaurentPoly& a, const UniLaurentPoly& b) { return a.terms_ == b.terms_; }

  private:
    TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g);

/// X^sigma Y^tau * f.
LaurentPoly poly_monomial_mul(const LaurentPoly& f, const Rational& sigma, const Rational& tau);

/// f(X^rho, Y^rho). Requires rho > 0 (std::invalid_argument otherwise).
LaurentPoly poly_substitute_powers(const LaurentPoly& f, const Rational& rho);

/// The line substitution f(Z^c, Z^d): X^u Y^v -> Z^{cu + dv}.  Ring
/// homomorphism; (c, d) must be nonzero and coprime.
UniLaurentPoly substitute_line(const LaurentPoly& f, const Integer& c, const Integer& d);

/// (X^l - 1)(Y^l - 1), the polynomial of an l x l square at the origin.
LaurentPoly square_poly(const Integer& l);

/// Canonical rendering, terms in ascending exponent order, e.g.
/// "1 X^{0} Y^{0} - 1 X^{1} Y^{0} - 1 X^{0} Y^{1} + 1 X^{1} Y^{1}".
/// The zero polynomial renders as "0".
std::string to_string(const LaurentPoly& f);
std::string to_string(const UniLaurentPoly& f);

}  // namespace shapetile
