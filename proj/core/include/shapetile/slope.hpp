#pragma once

// Slope classes of lattice tiles and the divisibility tests behind the
// integer-weight shapetiling criterion.
//
// Two cells S_ij, S_i'j' lie in the same mu-slope class when the line through
// their centers has slope mu.  Writing mu = -c/d with gcd(c, d) = 1 and d >= 1,
// that happens iff (i' - i, j' - j) is an integer multiple of (d, -c), i.e.
// iff c*i + d*j == c*i' + d*j'.  The line substitution X -> Z^c, Y -> Z^d
// therefore collapses each class of f*_T onto a single power of Z whose
// coefficient is the class area.

#include "shapetile/laurent.hpp"
#include "shapetile/tile.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shapetile {

/// Nonzero rational slope mu = -c/d, kept canonical: gcd(|c|, d) = 1, d >= 1, c != 0.
class Slope {
  public:
    /// Throws std::invalid_argument for c == 0 or d == 0; normalizes sign and gcd.
    Slope(Integer c, Integer d);

    /// The slope mu = p/q as a fraction (mu must be nonzero).
    static Slope from_mu(const Rational& mu);

    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }
    Rational mu() const { return make_rational(-c_, d_); }

    /// Direction of a class: (d, -c).
    std::pair<Integer, Integer> direction() const { return {d_, -c_}; }

    /// Canonical order: (|c| + d, c) lexicographic.
    friend bool operator<(const Slope& a, const Slope& b);
    friend bool operator==(const Slope& a, const Slope& b) { return a.c_ == b.c_ && a.d_ == b.d_; }

  private:
    Integer c_;
    Integer d_;
};

std::string to_string(const Slope& s);

/// Smallest slope in the canonical order, mu = 1 (c = -1, d = 1).
Slope first_canonical_slope();

struct SlopeClass {
    Slope slope;
    std::vector<Cell> members;  // ascending cell order
    Rational area;
};

/// Maximal mu-slope classes of the tile's weighted cells, ordered by the
/// class key c*i + d*j.
std::vector<SlopeClass> slope_decompose(const LatticeTile& t, const Slope& s);

/// The slopes along which some class holds at least two cells, in canonical
/// order.  For every other slope all classes are singletons.
std::vector<Slope> relevant_slopes(const LatticeTile& t);

struct SlopeEntry {
    std::vector<SlopeClass> classes;
    Integer gcd;  // gcd of |class areas|
};

struct SlopeWitness {
    Slope slope;
    Integer prime;
};

struct SlopeReport {
    Integer generic_gcd;  // gcd of |cell weights|: the class-area gcd at any non-relevant slope
    std::map<Slope, SlopeEntry> per_slope;
    std::optional<SlopeWitness> failing_witness;

    bool passes() const { return !failing_witness.has_value(); }
};

/// Condition 2 of the integer criterion on the finite set of slopes that
/// matter.  Requires a nonempty tile with integer weights
/// (std::invalid_argument otherwise).
SlopeReport condition2_check(const LatticeTile& t);

/// True iff every coefficient of the line substitution of f*_T at (c, d) is
/// divisible by n.  Requires integer weights and n >= 1.
bool divisibility_membership(const LatticeTile& t, const Slope& s, const Integer& n);

/// The combinatorial side: n divides the area of every mu-slope class.
bool class_areas_divisible(const LatticeTile& t, const Slope& s, const Integer& n);

}  // namespace shapetile
