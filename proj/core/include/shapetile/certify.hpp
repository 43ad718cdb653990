#pragma once

// Tiling certificates: explicit lists of weighted, scaled, translated copies
// of a prototile that are claimed to sum to a weighted square.
//
// A certificate is valid iff
//
//   sum_i a_i X^{sigma_i} Y^{tau_i} f_T(X^{rho_i}, Y^{rho_i})
//       = w X^{ax} Y^{ay} (X^l - 1)(Y^l - 1)
//
// which, through the tile/polynomial isomorphism, is the same statement as
// the weighted placements summing to w times the square [ax, ax+l) x [ay, ay+l).

#include "shapetile/laurent.hpp"
#include "shapetile/tile.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace shapetile {

struct Placement {
    Rational weight;  // nonzero
    Rational scale;   // > 0
    Rational sigma;
    Rational tau;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct Certificate {
    WeightedTile prototile;
    std::vector<Placement> placements;
    Rational target_side = 1;
    Rational anchor_x = 0;
    Rational anchor_y = 0;
    Integer target_weight = 1;
};

/// sum_i a_i X^sigma_i Y^tau_i f_T(X^rho_i, Y^rho_i)
LaurentPoly certificate_sum(const Certificate& c);

/// w X^ax Y^ay (X^l - 1)(Y^l - 1)
LaurentPoly certificate_target(const Certificate& c);

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;  // empty when ok; otherwise the first differing monomial
};

VerifyResult verify_certificate(const Certificate& c);

/// Independent check through the weight function: sums the placements on a
/// sample grid of step 1/(resolution * D), D the lcm of every coordinate
/// denominator, covering the target square, every placement, and a one-cell
/// margin.  Samples sit at cell centres, never on a cut line.  Passes iff
/// every sample inside the target equals w and every other sample is 0.
bool raster_check(const Certificate& c, int resolution);

struct SearchBounds {
    int max_scale = 1;  // K: scales 1..K
    int window = 1;     // L: target sides 1..L, integer shifts (i, j) in [0, L]^2
};

struct SearchOptions {
    long anchor = 0;                  // target square at (anchor, anchor)
    std::size_t max_unknowns = 20000;
    unsigned workers = 1;             // candidate sides searched concurrently
};

enum class SearchStatus { Found, Inconclusive };

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<Certificate> certificate;
    std::string message;

    bool found() const { return status == SearchStatus::Found; }
};

/// Number of unknowns a_{k,i,j} the search system has for this tile.
std::size_t search_unknown_count(const LatticeTile& t, const SearchBounds& b);

/// Smallest l whose square is a rational combination of the windowed
/// copies.  Zero-area tiles and oversized systems are rejected with
/// std::invalid_argument / std::length_error.  "Not found" is inconclusive.
SearchResult search_q(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt = {});

/// As search_q with integer weights (conclusive per side and window).
/// Requires integer tile weights.
SearchResult search_z(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt = {});

/// Rational search that clears denominators: the certificate tiles w times
/// the square, w the least common denominator of the weights.  Each side
/// tries an integer solution first, so w = 1 whenever search_z would succeed
/// at the same side.
SearchResult search_weight_w(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt = {});

}  // namespace shapetile
