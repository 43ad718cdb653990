#include "shapetile/decide.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapetile {

Verdict decide_q(const WeightedTile& t) {
    const LatticeForm lattice = to_lattice(t);
    Verdict v{Question::QShapetile, Answer::Yes, std::nullopt, lattice.scale, weighted_area(t)};
    if (v.area == 0) {
        v.answer = Answer::No;
        v.witness = ZeroAreaWitness{};
    }
    return v;
}

Verdict decide_z(const WeightedTile& t) {
    const bool integral = std::all_of(t.cells().begin(), t.cells().end(),
                                      [](const auto& kv) { return is_integer(kv.second); });
    if (!integral) throw std::invalid_argument("decide_z: the integer question needs integer weights");

    const LatticeForm lattice = to_lattice(t);
    Verdict v{Question::ZShapetile, Answer::Yes, std::nullopt, lattice.scale, weighted_area(t)};
    if (v.area == 0) {
        v.answer = Answer::No;
        v.witness = ZeroAreaWitness{};
        return v;
    }
    SlopeReport report = condition2_check(lattice.tile);
    if (!report.passes()) {
        v.answer = Answer::No;
        v.witness = *report.failing_witness;
    }
    return v;
}

std::string to_string(Question q) { return q == Question::QShapetile ? "Q-shapetile" : "Z-shapetile"; }

std::string describe(const Verdict& v) {
    std::string s = to_string(v.question) + ": " + (v.yes() ? "yes" : "no");
    if (v.witness) {
        if (std::holds_alternative<ZeroAreaWitness>(*v.witness)) {
            s += " (zero area)";
        } else {
            const auto& w = std::get<SlopeWitness>(*v.witness);
            s += " (witness mu=" + to_string(w.slope) + " p=" + to_string(w.prime) + ")";
        }
    }
    return s;
}

}  // namespace shapetile
