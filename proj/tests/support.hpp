#pragma once

// Test fixtures, seeded generators and brute-force oracles.  The oracles
// work directly from rectangle lists and cell maps and share no code with
// the library beyond the scalar types.

#include "shapetile/shapetile.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace testsupport {

using namespace shapetile;

inline Rational q(const char* s) { return parse_rational(s); }

struct R {
    Rational x0, x1, y0, y1, w;
};

inline std::vector<WeightedRect> to_weighted(const std::vector<R>& rs) {
    std::vector<WeightedRect> out;
    for (const auto& r : rs) out.push_back({r.w, Rect::make(r.x0, r.x1, r.y0, r.y1)});
    return out;
}

inline WeightedTile tile_of(const std::vector<R>& rs) { return tile_from_rects(to_weighted(rs)); }

inline LatticeTile cells_of(const std::vector<std::tuple<long, long, long>>& cs) {
    LatticeTile t;
    for (const auto& [i, j, w] : cs) t.add(Cell{i, j}, Rational(w));
    return t;
}

// Named tiles.
inline LatticeTile s_tetromino() { return cells_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {2, 1, 1}}); }
inline LatticeTile corner_tromino() { return cells_of({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}); }
inline LatticeTile vertical_domino() { return cells_of({{0, 0, 1}, {0, 1, 1}}); }

// [0,a) x [0,b) minus [a-c,a) x [b-d,b).
inline WeightedTile notched_rectangle(long a, long b, long c, long d) {
    return tile_of({{0, a, 0, b, 1}, {a - c, a, b - d, b, -1}});
}

// The first rationalized decomposition of the three-weight tile.
inline WeightedTile three_weight_tile() {
    return tile_of({{0, q("3/5"), 0, q("21/10"), 3},
                    {q("3/5"), q("9/5"), q("7/5"), q("21/10"), 3},
                    {q("11/10"), q("5/2"), q("3/5"), q("7/5"), -2}});
}

// Eight-term coefficient polynomial on f_T in the displayed identity.
inline LaurentPoly tromino_h1() {
    LaurentPoly h;
    h.add_term({3, 3}, 1);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{2, 2}, {4, 0}, {4, 1}, {4, 2}, {0, 4}, {1, 4}, {2, 4}})
        h.add_term({u, v}, -1);
    return h;
}

// The certificate read off that identity: target XY g_3.
inline Certificate tromino_certificate() {
    Certificate c;
    c.prototile = tile_from_lattice(corner_tromino());
    c.target_side = 3;
    c.anchor_x = 1;
    c.anchor_y = 1;
    const LaurentPoly h1 = tromino_h1();
    for (const auto& [e, a] : h1.terms()) c.placements.push_back({a, 1, e.u, e.v});
    c.placements.push_back({1, 2, 1, 1});
    c.placements.push_back({-1, 2, 0, 0});
    c.placements.push_back({1, 3, 0, 0});
    return c;
}

// ---- generators ----

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_coordinate(Rng& rng, long max_den = 6, long range = 3) {
    const long den = uniform(rng, 1, max_den);
    return make_rational(uniform(rng, -range * den, range * den), den);
}

inline long nonzero_weight(Rng& rng, long bound = 5) {
    long w = 0;
    while (w == 0) w = uniform(rng, -bound, bound);
    return w;
}

// Up to eight rectangles, denominators up to 6, weights in [-5, 5] \ {0}.
inline std::vector<R> random_rects(Rng& rng, std::size_t max_rects = 8) {
    std::vector<R> rs;
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_rects)));
    while (rs.size() < n) {
        Rational a = random_coordinate(rng), b = random_coordinate(rng);
        Rational c = random_coordinate(rng), d = random_coordinate(rng);
        if (a == b || c == d) continue;
        if (b < a) std::swap(a, b);
        if (d < c) std::swap(c, d);
        rs.push_back({a, b, c, d, nonzero_weight(rng)});
    }
    return rs;
}

// Up to `max_cells` cells in [0, extent)^2 with integer weights.
inline LatticeTile random_lattice(Rng& rng, long extent = 5, std::size_t max_cells = 8, long bound = 5) {
    LatticeTile t;
    const long n = uniform(rng, 1, static_cast<long>(max_cells));
    for (long k = 0; k < n; ++k) t.add(Cell{uniform(rng, 0, extent - 1), uniform(rng, 0, extent - 1)}, nonzero_weight(rng, bound));
    return t;
}

// ---- oracles ----

// Weight function straight from the rectangle list.
inline Rational oracle_weight_at(const std::vector<R>& rs, const Rational& x, const Rational& y) {
    Rational s = 0;
    for (const auto& r : rs)
        if (r.x0 <= x && x < r.x1 && r.y0 <= y && y < r.y1) s += r.w;
    return s;
}

// Each rectangle [x0,x1)x[y0,y1) maps to (X^x1 - X^x0)(Y^y1 - Y^y0).
inline LaurentPoly oracle_encode(const std::vector<R>& rs) {
    LaurentPoly f;
    for (const auto& r : rs) {
        f.add_term({r.x1, r.y1}, r.w);
        f.add_term({r.x1, r.y0}, -r.w);
        f.add_term({r.x0, r.y1}, -r.w);
        f.add_term({r.x0, r.y0}, r.w);
    }
    return f;
}

inline Rational oracle_area(const std::vector<R>& rs) {
    Rational a = 0;
    for (const auto& r : rs) a += r.w * (r.x1 - r.x0) * (r.y1 - r.y0);
    return a;
}

// Classes of cells whose centers are pairwise collinear with slope mu, by
// union-find over all pairs.  Returns the sorted list of class areas.
inline std::vector<Rational> oracle_class_areas(const LatticeTile& t, const Rational& mu) {
    std::vector<Cell> cs;
    std::vector<Rational> ws;
    for (const auto& [c, w] : t.weights) {
        cs.push_back(c);
        ws.push_back(w);
    }
    std::vector<std::size_t> parent(cs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            const long di = cs[b].i - cs[a].i, dj = cs[b].j - cs[a].j;
            if (di != 0 && Rational(dj) == mu * di) parent[find(a)] = find(b);
        }
    std::map<std::size_t, Rational> areas;
    for (std::size_t a = 0; a < cs.size(); ++a) areas[find(a)] += ws[a];
    std::vector<Rational> out;
    for (const auto& [k, v] : areas) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

// Every slope dj/di realized by a pair of cells with di, dj nonzero.
inline std::set<Rational> oracle_relevant_mus(const LatticeTile& t) {
    std::set<Rational> out;
    for (const auto& [a, wa] : t.weights)
        for (const auto& [b, wb] : t.weights) {
            const long di = b.i - a.i, dj = b.j - a.j;
            if (di != 0 && dj != 0) out.insert(make_rational(dj, di));
        }
    return out;
}

inline bool oracle_areas_divisible(const LatticeTile& t, const Rational& mu, long n) {
    for (const auto& a : oracle_class_areas(t, mu))
        if (a.get_num() % n != 0) return false;
    return true;
}

// ---- certificate families ----

// Same identity after the affine map x -> rho x + (dx, dy).
inline Certificate transform_certificate(Certificate c, const Rational& rho, const Rational& dx, const Rational& dy) {
    for (auto& p : c.placements) {
        p.scale *= rho;
        p.sigma = rho * p.sigma + dx;
        p.tau = rho * p.tau + dy;
    }
    c.target_side *= rho;
    c.anchor_x = rho * c.anchor_x + dx;
    c.anchor_y = rho * c.anchor_y + dy;
    return c;
}

inline Rational small_rational(Rng& rng, long max_den, long lo, long hi) {
    const long den = uniform(rng, 1, max_den);
    return make_rational(uniform(rng, lo * den, hi * den), den);
}

// A rectangle prototile tiling a square on an nx x ny grid, with some 2x2
// blocks merged into one copy at scale 2, a cancelling scale-2 pair, and
// every weight multiplied by the target weight.
inline Certificate rectangle_certificate(Rng& rng) {
    const long nx = uniform(rng, 1, 4), ny = uniform(rng, 1, 4);
    const Rational side = make_rational(uniform(rng, 1, 6), uniform(rng, 1, 3));
    const Rational w = side / nx, h = side / ny;
    const Rational ox = small_rational(rng, 3, -2, 2), oy = small_rational(rng, 3, -2, 2);
    const long weight = uniform(rng, 1, 3);

    Certificate c;
    c.prototile = tile_from_rects({{1, Rect::make(ox, ox + w, oy, oy + h)}});
    c.target_side = side;
    c.anchor_x = small_rational(rng, 3, -2, 2);
    c.anchor_y = small_rational(rng, 3, -2, 2);
    c.target_weight = weight;
    auto place = [&](const Rational& a, const Rational& k, const Rational& x, const Rational& y) {
        c.placements.push_back({a, k, x - k * ox, y - k * oy});
    };
    std::vector<std::vector<bool>> used(nx, std::vector<bool>(ny, false));
    for (long i = 0; i + 1 < nx; i += 2)
        for (long j = 0; j + 1 < ny; j += 2)
            if (uniform(rng, 0, 1) == 1) {
                place(weight, 2, c.anchor_x + i * w, c.anchor_y + j * h);
                used[i][j] = used[i + 1][j] = used[i][j + 1] = used[i + 1][j + 1] = true;
            }
    for (long i = 0; i < nx; ++i)
        for (long j = 0; j < ny; ++j)
            if (!used[i][j]) place(weight, 1, c.anchor_x + i * w, c.anchor_y + j * h);
    if (uniform(rng, 0, 1) == 1) {
        const Rational a = nonzero_weight(rng, 3);
        const Rational x = small_rational(rng, 3, -3, 3), y = small_rational(rng, 3, -3, 3);
        place(a, 2, x, y);
        for (long di = 0; di < 2; ++di)
            for (long dj = 0; dj < 2; ++dj) place(-a, 1, x + di * w, y + dj * h);
    }
    return c;
}

// A valid certificate drawn from the rectangle family or from a rescaled,
// translated copy of the tromino identity.
inline Certificate random_valid_certificate(Rng& rng) {
    if (uniform(rng, 0, 2) == 0) {
        Certificate c = transform_certificate(tromino_certificate(), make_rational(uniform(rng, 1, 3), uniform(rng, 1, 3)),
                                              small_rational(rng, 3, -2, 2), small_rational(rng, 3, -2, 2));
        const long w = uniform(rng, 1, 3);
        for (auto& p : c.placements) p.weight *= w;
        c.target_weight = w;
        return c;
    }
    return rectangle_certificate(rng);
}

// One random corruption of a certificate.
inline Certificate mutate(Certificate c, Rng& rng) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(c.placements.size()) - 1));
    switch (uniform(rng, 0, 6)) {
        case 0: {
            Rational& a = c.placements[k].weight;
            a += uniform(rng, 0, 1) == 0 ? -1 : 1;
            if (a == 0) a = 2;
            break;
        }
        case 1: c.placements[k].sigma += make_rational(nonzero_weight(rng, 2), uniform(rng, 1, 3)); break;
        case 2: c.placements[k].scale *= 2; break;
        case 3: c.placements.erase(c.placements.begin() + static_cast<long>(k)); break;
        case 4: c.target_side += make_rational(1, uniform(rng, 1, 3)); break;
        case 5: c.anchor_y -= make_rational(1, 2); break;
        default: c.target_weight += 1; break;
    }
    return c;
}

}  // namespace testsupport
