#pragma once

// Weighted tiles: finite weighted sums of half-open axis-parallel rectangles
// with rational corners, identified with their weight functions on the plane.

#include "shapetile/laurent.hpp"
#include "shapetile/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace shapetile {

/// Half-open rectangle [x0, x1) x [y0, y1).
struct Rect {
    Rational x0, x1, y0, y1;

    /// Throws std::invalid_argument unless x0 < x1 and y0 < y1.
    static Rect make(Rational x0, Rational x1, Rational y0, Rational y1);
    static Rect unit_square(std::int64_t i, std::int64_t j);
};

struct WeightedRect {
    Rational weight;
    Rect rect;
};

/// Key of an anchored rectangle R_{alpha beta}: the oriented rectangle with
/// corners (0,0) and (alpha, beta).  Both coordinates are nonzero.
struct CornerKey {
    Rational alpha;
    Rational beta;

    friend bool operator==(const CornerKey& a, const CornerKey& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    friend bool operator<(const CornerKey& a, const CornerKey& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.beta < b.beta;
    }
};

/// Unique expansion of a tile over the anchored rectangles R_{alpha beta}.
struct CornerForm {
    std::map<CornerKey, Rational> terms;

    friend bool operator==(const CornerForm&, const CornerForm&) = default;
};

/// Lattice cell S_ij = [i, i+1) x [j, j+1).
struct Cell {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A tile made of weighted unit lattice squares.
struct LatticeTile {
    std::map<Cell, Rational> weights;  // no zero entries

    bool empty() const { return weights.empty(); }
    bool has_integer_weights() const;
    void add(const Cell& c, const Rational& w);

    friend bool operator==(const LatticeTile&, const LatticeTile&) = default;
};

using GridIndex = std::pair<std::size_t, std::size_t>;

/// Canonical weighted tile: a minimal cut grid plus the nonzero cell weights.
/// Cell (i, j) is [xcuts[i], xcuts[i+1]) x [ycuts[j], ycuts[j+1]).
class WeightedTile {
  public:
    WeightedTile() = default;

    /// Builds the canonical tile for an arbitrary weight grid; cuts need not
    /// be minimal but must be strictly increasing.
    static WeightedTile from_grid(std::vector<Rational> xcuts, std::vector<Rational> ycuts,
                                  const std::map<GridIndex, Rational>& weights);

    const std::vector<Rational>& xcuts() const { return xcuts_; }
    const std::vector<Rational>& ycuts() const { return ycuts_; }
    const std::map<GridIndex, Rational>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

    Rect cell_rect(const GridIndex& idx) const;

    /// The minimal grid cells as weighted rectangles, in (i, j) order.
    std::vector<WeightedRect> to_rects() const;

    /// Value of the weight function at a point.
    Rational weight_at(const Rational& x, const Rational& y) const;

    WeightedTile& operator+=(const WeightedTile& other);
    friend WeightedTile operator+(WeightedTile a, const WeightedTile& b) { return a += b; }
    friend WeightedTile operator*(const Rational& a, const WeightedTile& t);

    /// Same weight function (compared through the unique corner form).
    friend bool operator==(const WeightedTile& a, const WeightedTile& b);

  private:
    std::vector<Rational> xcuts_;
    std::vector<Rational> ycuts_;
    std::map<GridIndex, Rational> cells_;
};

/// Pointwise sum of the weighted rectangles.  Degenerate rectangles are
/// rejected with std::invalid_argument.
WeightedTile tile_from_rects(const std::vector<WeightedRect>& entries);

WeightedTile tile_from_lattice(const LatticeTile& t);

WeightedTile tile_translate(const WeightedTile& t, const Rational& sigma, const Rational& tau);

/// Image under (x, y) -> (rho x, rho y). Requires rho > 0.
WeightedTile tile_rescale(const WeightedTile& t, const Rational& rho);

CornerForm to_corner_form(const WeightedTile& t);

/// f_T = sum of coeff * (X^alpha - 1)(Y^beta - 1) over the corner form.
LaurentPoly encode(const WeightedTile& t);
LaurentPoly encode(const CornerForm& cf);

/// Inverse of encode.  The weight at (x, y) is the sum of the coefficients
/// of the terms X^u Y^v with u <= x and v <= y.  Throws std::invalid_argument
/// when that function does not vanish outside a bounded region.
WeightedTile decode(const LaurentPoly& f);

Rational weighted_area(const WeightedTile& t);
Rational weighted_area(const LatticeTile& t);

struct LatticeForm {
    LatticeTile tile;
    Rational scale;                       // rho: lattice tile = T(rho) + shift
    std::pair<Integer, Integer> shift;   // integer translation applied after rescaling
};

/// Rescales by the lcm of all coordinate denominators, translates by the
/// smallest nonnegative integer vector that puts the tile in the closed first
/// quadrant, and splits every grid cell into unit cells.
LatticeForm to_lattice(const WeightedTile& t);

/// f*_T = sum w_ij X^i Y^j, so that (X-1)(Y-1) f*_T = f_T.
LaurentPoly star_factor(const LatticeTile& t);

}  // namespace shapetile
