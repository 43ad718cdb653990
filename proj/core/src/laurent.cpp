#include "shapetile/laurent.hpp"

#include <stdexcept>

namespace shapetile {

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) terms_.emplace(ExponentPair{0, 0}, constant);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, const Rational& u, const Rational& v) {
    LaurentPoly f;
    f.add_term(ExponentPair{u, v}, coeff);
    return f;
}

Rational LaurentPoly::coeff(const Rational& u, const Rational& v) const {
    auto it = terms_.find(ExponentPair{u, v});
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentPair& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& a) {
    if (a == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= a;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    LaurentPoly h;
    for (const auto& [ef, cf] : f.terms_)
        for (const auto& [eg, cg] : g.terms_)
            h.add_term(ExponentPair{ef.u + eg.u, ef.v + eg.v}, cf * cg);
    return h;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly h = *this;
    for (auto& [e, c] : h.terms_) c = -c;
    return h;
}

Rational LaurentPoly::sum_of_coefficients() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

namespace {

Rational int_power(const Rational& base, const Rational& exponent) {
    if (!is_integer(exponent)) throw std::domain_error("evaluate: non-integer exponent");
    if (!exponent.get_num().fits_slong_p()) throw std::domain_error("evaluate: exponent too large");
    long n = exponent.get_num().get_si();
    if (n < 0 && base == 0) throw std::domain_error("evaluate: negative power of zero");
    Rational b = n < 0 ? Rational(1 / base) : base;
    unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    Rational out = 1;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), m);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), m);
    out.canonicalize();
    return out;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c * int_power(x, e.u) * int_power(y, e.v);
    return s;
}

void UniLaurentPoly::add_term(const Rational& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational UniLaurentPoly::coeff(const Rational& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

UniLaurentPoly operator+(const UniLaurentPoly& f, const UniLaurentPoly& g) {
    UniLaurentPoly h = f;
    for (const auto& [e, c] : g.terms_) h.add_term(e, c);
    return h;
}

UniLaurentPoly operator*(const UniLaurentPoly& f, const UniLaurentPoly& g) {
    UniLaurentPoly h;
    for (const auto& [ef, cf] : f.terms_)
        for (const auto& [eg, cg] : g.terms_) h.add_term(ef + eg, cf * cg);
    return h;
}

LaurentPoly poly_add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly poly_mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly poly_monomial_mul(const LaurentPoly& f, const Rational& sigma, const Rational& tau) {
    LaurentPoly h;
    for (const auto& [e, c] : f.terms()) h.add_term(ExponentPair{e.u + sigma, e.v + tau}, c);
    return h;
}

LaurentPoly poly_substitute_powers(const LaurentPoly& f, const Rational& rho) {
    if (rho <= 0) throw std::invalid_argument("poly_substitute_powers: scale must be positive");
    LaurentPoly h;
    for (const auto& [e, c] : f.terms()) h.add_term(ExponentPair{rho * e.u, rho * e.v}, c);
    return h;
}

UniLaurentPoly substitute_line(const LaurentPoly& f, const Integer& c, const Integer& d) {
    if (c == 0 && d == 0) throw std::invalid_argument("substitute_line: (c, d) = (0, 0)");
    if (gcd(c, d) != 1) throw std::invalid_argument("substitute_line: c and d must be coprime");
    const Rational rc(c), rd(d);
    UniLaurentPoly h;
    for (const auto& [e, coeff] : f.terms()) h.add_term(rc * e.u + rd * e.v, coeff);
    return h;
}

LaurentPoly square_poly(const Integer& l) {
    if (l < 1) throw std::invalid_argument("square_poly: side must be >= 1");
    const Rational rl(l);
    LaurentPoly g;
    g.add_term({rl, rl}, 1);
    g.add_term({rl, 0}, -1);
    g.add_term({0, rl}, -1);
    g.add_term({0, 0}, 1);
    return g;
}

namespace {

template <class Map, class Body>
std::string render_terms(const Map& terms, Body&& body) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += to_string(Rational(abs(c)));
        out += " ";
        out += body(e);
        first = false;
    }
    return out;
}

}  // namespace

std::string to_string(const LaurentPoly& f) {
    return render_terms(f.terms(), [](const ExponentPair& e) {
        return "X^{" + to_string(e.u) + "} Y^{" + to_string(e.v) + "}";
    });
}

std::string to_string(const UniLaurentPoly& f) {
    return render_terms(f.terms(), [](const Rational& e) { return "Z^{" + to_string(e) + "}"; });
}

}  // namespace shapetile
