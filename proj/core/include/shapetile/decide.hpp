#pragma once

// Decision procedures: does a rational-cornered tile shapetile a square with
// rational weights, and with integer weights?

#include "shapetile/slope.hpp"
#include "shapetile/tile.hpp"

#include <optional>
#include <string>
#include <variant>

namespace shapetile {

enum class Question { QShapetile, ZShapetile };
enum class Answer { Yes, No };

struct ZeroAreaWitness {
    friend bool operator==(const ZeroAreaWitness&, const ZeroAreaWitness&) = default;
};

using Witness = std::variant<ZeroAreaWitness, SlopeWitness>;

struct Verdict {
    Question question;
    Answer answer;
    std::optional<Witness> witness;  // present iff answer == No
    Rational lattice_scale;          // rho used to reduce to a lattice tile
    Rational area;                   // weighted area of the input tile

    bool yes() const { return answer == Answer::Yes; }
};

/// Yes iff the weighted area is nonzero.
Verdict decide_q(const WeightedTile& t);

/// Yes iff the area is nonzero and, for every nonzero rational slope, the
/// class areas of the lattice form have gcd 1.  Non-integer weights are
/// rejected with std::invalid_argument.
Verdict decide_z(const WeightedTile& t);

std::string to_string(Question q);
std::string describe(const Verdict& v);

}  // namespace shapetile
