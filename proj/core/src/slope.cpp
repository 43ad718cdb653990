#include "shapetile/slope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace shapetile {

Slope::Slope(Integer c, Integer d) : c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0 || d_ == 0) throw std::invalid_argument("slope must be a nonzero finite rational");
    if (d_ < 0) {
        c_ = -c_;
        d_ = -d_;
    }
    Integer g = gcd(c_, d_);
    c_ /= g;
    d_ /= g;
}

Slope Slope::from_mu(const Rational& mu) { return Slope(-mu.get_num(), mu.get_den()); }

bool operator<(const Slope& a, const Slope& b) {
    Integer ka = abs(a.c_) + a.d_, kb = abs(b.c_) + b.d_;
    if (ka != kb) return ka < kb;
    return a.c_ < b.c_;
}

std::string to_string(const Slope& s) { return to_string(s.mu()); }

Slope first_canonical_slope() { return Slope(-1, 1); }

namespace {

Integer class_key(const Cell& cell, const Slope& s) {
    return s.c() * Integer(static_cast<long>(cell.i)) + s.d() * Integer(static_cast<long>(cell.j));
}

void require_integer_weights(const LatticeTile& t, const char* who) {
    if (!t.has_integer_weights()) throw std::invalid_argument(std::string(who) + ": tile weights must be integers");
}

}  // namespace

std::vector<SlopeClass> slope_decompose(const LatticeTile& t, const Slope& s) {
    std::map<Integer, SlopeClass> by_key;
    for (const auto& [cell, w] : t.weights) {
        auto [it, inserted] = by_key.try_emplace(class_key(cell, s), SlopeClass{s, {}, Rational(0)});
        it->second.members.push_back(cell);
        it->second.area += w;
    }
    std::vector<SlopeClass> out;
    out.reserve(by_key.size());
    for (auto& [k, cls] : by_key) out.push_back(std::move(cls));
    return out;
}

std::vector<Slope> relevant_slopes(const LatticeTile& t) {
    std::vector<Cell> cells;
    for (const auto& [cell, w] : t.weights) cells.push_back(cell);
    std::set<Slope> found;
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = a + 1; b < cells.size(); ++b) {
            const std::int64_t di = cells[b].i - cells[a].i, dj = cells[b].j - cells[a].j;
            if (di == 0 || dj == 0) continue;
            // mu = dj/di = -c/d  ->  c = -dj, d = di (Slope normalizes)
            found.insert(Slope(Integer(static_cast<long>(-dj)), Integer(static_cast<long>(di))));
        }
    return {found.begin(), found.end()};
}

SlopeReport condition2_check(const LatticeTile& t) {
    if (t.empty()) throw std::invalid_argument("condition2_check: empty tile");
    require_integer_weights(t, "condition2_check");

    SlopeReport report;
    report.generic_gcd = 0;
    for (const auto& [cell, w] : t.weights) report.generic_gcd = gcd(report.generic_gcd, w.get_num());

    std::optional<SlopeWitness> best;
    auto consider = [&best](const Slope& s, const Integer& g) {
        if (g == 1) return;
        Integer p = smallest_prime_factor(g);
        if (!best || p < best->prime || (p == best->prime && s < best->slope)) best = SlopeWitness{s, p};
    };

    if (report.generic_gcd != 1) consider(first_canonical_slope(), report.generic_gcd);
    for (const Slope& s : relevant_slopes(t)) {
        SlopeEntry entry;
        entry.classes = slope_decompose(t, s);
        entry.gcd = 0;
        for (const auto& cls : entry.classes) entry.gcd = gcd(entry.gcd, cls.area.get_num());
        consider(s, entry.gcd);
        report.per_slope.emplace(s, std::move(entry));
    }
    report.failing_witness = best;
    return report;
}

bool divisibility_membership(const LatticeTile& t, const Slope& s, const Integer& n) {
    if (n < 1) throw std::invalid_argument("divisibility_membership: n must be >= 1");
    require_integer_weights(t, "divisibility_membership");
    const UniLaurentPoly image = substitute_line(star_factor(t), s.c(), s.d());
    return std::all_of(image.terms().begin(), image.terms().end(), [&n](const auto& kv) {
        return mpz_divisible_p(kv.second.get_num_mpz_t(), n.get_mpz_t()) != 0;
    });
}

bool class_areas_divisible(const LatticeTile& t, const Slope& s, const Integer& n) {
    if (n < 1) throw std::invalid_argument("class_areas_divisible: n must be >= 1");
    require_integer_weights(t, "class_areas_divisible");
    for (const auto& cls : slope_decompose(t, s))
        if (!mpz_divisible_p(cls.area.get_num_mpz_t(), n.get_mpz_t())) return false;
    return true;
}

}  // namespace shapetile
