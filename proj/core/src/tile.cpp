#include "shapetile/tile.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapetile {

Rect Rect::make(Rational x0, Rational x1, Rational y0, Rational y1) {
    if (!(x0 < x1) || !(y0 < y1))
        throw std::invalid_argument("degenerate rectangle [" + to_string(x0) + ", " + to_string(x1) +
                                    ") x [" + to_string(y0) + ", " + to_string(y1) + ")");
    return Rect{std::move(x0), std::move(x1), std::move(y0), std::move(y1)};
}

Rect Rect::unit_square(std::int64_t i, std::int64_t j) {
    Rational x(static_cast<long>(i)), y(static_cast<long>(j));
    return Rect{x, x + 1, y, y + 1};
}

bool LatticeTile::has_integer_weights() const {
    return std::all_of(weights.begin(), weights.end(), [](const auto& kv) { return is_integer(kv.second); });
}

void LatticeTile::add(const Cell& c, const Rational& w) {
    if (w == 0) return;
    auto [it, inserted] = weights.try_emplace(c, w);
    if (inserted) return;
    it->second += w;
    if (it->second == 0) weights.erase(it);
}

namespace {

using Dense = std::vector<std::vector<Rational>>;  // [i][j]

// Keeps only the cuts where the weight function actually changes.  `lines`
// gives, for each position between cuts, the vector of weights along the
// other axis; a cut is needed iff the lines on either side of it differ.
std::vector<std::size_t> needed_cuts(const std::vector<std::vector<Rational>>& lines, std::size_t ncuts,
                                     std::size_t other) {
    const std::vector<Rational> zero(other, Rational(0));
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < ncuts; ++k) {
        const auto& left = k == 0 ? zero : lines[k - 1];
        const auto& right = k + 1 == ncuts ? zero : lines[k];
        if (left != right) keep.push_back(k);
    }
    return keep;
}

}  // namespace

WeightedTile WeightedTile::from_grid(std::vector<Rational> xcuts, std::vector<Rational> ycuts,
                                     const std::map<GridIndex, Rational>& weights) {
    WeightedTile t;
    if (xcuts.size() < 2 || ycuts.size() < 2) return t;
    const std::size_t nx = xcuts.size() - 1, ny = ycuts.size() - 1;
    Dense w(nx, std::vector<Rational>(ny, Rational(0)));
    for (const auto& [idx, val] : weights) {
        if (idx.first >= nx || idx.second >= ny) throw std::out_of_range("grid cell outside cuts");
        w[idx.first][idx.second] += val;
    }

    auto keep_x = needed_cuts(w, xcuts.size(), ny);
    if (keep_x.size() < 2) return t;
    Dense wx;
    for (std::size_t a = 0; a + 1 < keep_x.size(); ++a) wx.push_back(w[keep_x[a]]);

    Dense rows(ny, std::vector<Rational>(wx.size()));
    for (std::size_t i = 0; i < wx.size(); ++i)
        for (std::size_t j = 0; j < ny; ++j) rows[j][i] = wx[i][j];
    auto keep_y = needed_cuts(rows, ycuts.size(), wx.size());

    for (auto k : keep_x) t.xcuts_.push_back(xcuts[k]);
    for (auto k : keep_y) t.ycuts_.push_back(ycuts[k]);
    for (std::size_t i = 0; i < wx.size(); ++i)
        for (std::size_t b = 0; b + 1 < keep_y.size(); ++b) {
            const Rational& val = wx[i][keep_y[b]];
            if (val != 0) t.cells_.emplace(GridIndex{i, b}, val);
        }
    return t;
}

Rect WeightedTile::cell_rect(const GridIndex& idx) const {
    return Rect{xcuts_.at(idx.first), xcuts_.at(idx.first + 1), ycuts_.at(idx.second), ycuts_.at(idx.second + 1)};
}

std::vector<WeightedRect> WeightedTile::to_rects() const {
    std::vector<WeightedRect> out;
    out.reserve(cells_.size());
    for (const auto& [idx, w] : cells_) out.push_back({w, cell_rect(idx)});
    return out;
}

Rational WeightedTile::weight_at(const Rational& x, const Rational& y) const {
    if (cells_.empty()) return 0;
    auto ix = std::upper_bound(xcuts_.begin(), xcuts_.end(), x);
    auto iy = std::upper_bound(ycuts_.begin(), ycuts_.end(), y);
    if (ix == xcuts_.begin() || ix == xcuts_.end() || iy == ycuts_.begin() || iy == ycuts_.end()) return 0;
    GridIndex idx{static_cast<std::size_t>(ix - xcuts_.begin()) - 1, static_cast<std::size_t>(iy - ycuts_.begin()) - 1};
    auto it = cells_.find(idx);
    return it == cells_.end() ? Rational(0) : it->second;
}

WeightedTile& WeightedTile::operator+=(const WeightedTile& other) {
    auto rects = to_rects();
    auto more = other.to_rects();
    rects.insert(rects.end(), more.begin(), more.end());
    *this = tile_from_rects(rects);
    return *this;
}

WeightedTile operator*(const Rational& a, const WeightedTile& t) {
    if (a == 0) return {};
    WeightedTile out = t;
    for (auto& [idx, w] : out.cells_) w *= a;
    return out;
}

bool operator==(const WeightedTile& a, const WeightedTile& b) { return to_corner_form(a) == to_corner_form(b); }

WeightedTile tile_from_rects(const std::vector<WeightedRect>& entries) {
    std::vector<Rational> xs, ys;
    for (const auto& e : entries) {
        const Rect& r = e.rect;
        if (!(r.x0 < r.x1) || !(r.y0 < r.y1)) Rect::make(r.x0, r.x1, r.y0, r.y1);  // throws
        xs.push_back(r.x0);
        xs.push_back(r.x1);
        ys.push_back(r.y0);
        ys.push_back(r.y1);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    auto index_of = [](const std::vector<Rational>& v, const Rational& x) {
        return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    std::map<GridIndex, Rational> grid;
    for (const auto& e : entries) {
        if (e.weight == 0) continue;
        const std::size_t i0 = index_of(xs, e.rect.x0), i1 = index_of(xs, e.rect.x1);
        const std::size_t j0 = index_of(ys, e.rect.y0), j1 = index_of(ys, e.rect.y1);
        for (std::size_t i = i0; i < i1; ++i)
            for (std::size_t j = j0; j < j1; ++j) grid[{i, j}] += e.weight;
    }
    return WeightedTile::from_grid(std::move(xs), std::move(ys), grid);
}

WeightedTile tile_from_lattice(const LatticeTile& t) {
    std::vector<WeightedRect> rects;
    rects.reserve(t.weights.size());
    for (const auto& [c, w] : t.weights) rects.push_back({w, Rect::unit_square(c.i, c.j)});
    return tile_from_rects(rects);
}

WeightedTile tile_translate(const WeightedTile& t, const Rational& sigma, const Rational& tau) {
    auto xs = t.xcuts();
    auto ys = t.ycuts();
    for (auto& x : xs) x += sigma;
    for (auto& y : ys) y += tau;
    return WeightedTile::from_grid(std::move(xs), std::move(ys), t.cells());
}

WeightedTile tile_rescale(const WeightedTile& t, const Rational& rho) {
    if (rho <= 0) throw std::invalid_argument("tile_rescale: scale must be positive");
    auto xs = t.xcuts();
    auto ys = t.ycuts();
    for (auto& x : xs) x *= rho;
    for (auto& y : ys) y *= rho;
    return WeightedTile::from_grid(std::move(xs), std::move(ys), t.cells());
}

CornerForm to_corner_form(const WeightedTile& t) {
    CornerForm cf;
    auto add = [&cf](const Rational& a, const Rational& b, const Rational& c) {
        if (a == 0 || b == 0) return;  // (X^0 - 1) = 0: degenerate anchored rectangle
        auto [it, inserted] = cf.terms.try_emplace(CornerKey{a, b}, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) cf.terms.erase(it);
    };
    for (const auto& [idx, w] : t.cells()) {
        const Rect r = t.cell_rect(idx);
        add(r.x1, r.y1, w);
        add(r.x1, r.y0, -w);
        add(r.x0, r.y1, -w);
        add(r.x0, r.y0, w);
    }
    return cf;
}

LaurentPoly encode(const CornerForm& cf) {
    LaurentPoly f;
    for (const auto& [k, c] : cf.terms) {
        f.add_term({k.alpha, k.beta}, c);
        f.add_term({k.alpha, 0}, -c);
        f.add_term({0, k.beta}, -c);
        f.add_term({0, 0}, c);
    }
    return f;
}

LaurentPoly encode(const WeightedTile& t) { return encode(to_corner_form(t)); }

WeightedTile decode(const LaurentPoly& f) {
    if (f.is_zero()) return {};
    std::vector<Rational> us, vs;
    for (const auto& [e, c] : f.terms()) {
        us.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(us.begin(), us.end());
    us.erase(std::unique(us.begin(), us.end()), us.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    const std::size_t nu = us.size(), nv = vs.size();
    Dense prefix(nu, std::vector<Rational>(nv, Rational(0)));
    for (const auto& [e, c] : f.terms()) {
        auto i = static_cast<std::size_t>(std::lower_bound(us.begin(), us.end(), e.u) - us.begin());
        auto j = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin());
        prefix[i][j] += c;
    }
    for (std::size_t i = 0; i < nu; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            if (i > 0) prefix[i][j] += prefix[i - 1][j];
            if (j > 0) prefix[i][j] += prefix[i][j - 1];
            if (i > 0 && j > 0) prefix[i][j] -= prefix[i - 1][j - 1];
        }
    for (std::size_t i = 0; i < nu; ++i)
        if (prefix[i][nv - 1] != 0)
            throw std::invalid_argument("decode: weight " + to_string(prefix[i][nv - 1]) + " persists for y >= " +
                                        to_string(vs[nv - 1]) + " at x = " + to_string(us[i]) +
                                        "; not a tile polynomial");
    for (std::size_t j = 0; j < nv; ++j)
        if (prefix[nu - 1][j] != 0)
            throw std::invalid_argument("decode: weight " + to_string(prefix[nu - 1][j]) + " persists for x >= " +
                                        to_string(us[nu - 1]) + " at y = " + to_string(vs[j]) +
                                        "; not a tile polynomial");
    std::map<GridIndex, Rational> grid;
    for (std::size_t i = 0; i + 1 < nu; ++i)
        for (std::size_t j = 0; j + 1 < nv; ++j)
            if (prefix[i][j] != 0) grid.emplace(GridIndex{i, j}, prefix[i][j]);
    return WeightedTile::from_grid(std::move(us), std::move(vs), grid);
}

Rational weighted_area(const WeightedTile& t) {
    Rational area = 0;
    for (const auto& [idx, w] : t.cells()) {
        const Rect r = t.cell_rect(idx);
        area += w * (r.x1 - r.x0) * (r.y1 - r.y0);
    }
    return area;
}

Rational weighted_area(const LatticeTile& t) {
    Rational area = 0;
    for (const auto& [c, w] : t.weights) area += w;
    return area;
}

LatticeForm to_lattice(const WeightedTile& t) {
    LatticeForm out{LatticeTile{}, Rational(1), {Integer(0), Integer(0)}};
    if (t.empty()) return out;
    Integer den = 1;
    for (const auto& x : t.xcuts()) den = lcm(den, x.get_den());
    for (const auto& y : t.ycuts()) den = lcm(den, y.get_den());
    out.scale = Rational(den);

    auto scaled = [&den](const Rational& v) {
        Rational s = v * Rational(den);
        return s.get_num();  // integral by construction
    };
    const Integer minx = scaled(t.xcuts().front()), miny = scaled(t.ycuts().front());
    out.shift = {minx < 0 ? Integer(-minx) : Integer(0), miny < 0 ? Integer(-miny) : Integer(0)};

    for (const auto& [idx, w] : t.cells()) {
        const Rect r = t.cell_rect(idx);
        const Integer x0 = scaled(r.x0) + out.shift.first, x1 = scaled(r.x1) + out.shift.first;
        const Integer y0 = scaled(r.y0) + out.shift.second, y1 = scaled(r.y1) + out.shift.second;
        if (!x0.fits_slong_p() || !x1.fits_slong_p() || !y0.fits_slong_p() || !y1.fits_slong_p())
            throw std::overflow_error("to_lattice: coordinates exceed 64-bit cell indices");
        for (long i = x0.get_si(); i < x1.get_si(); ++i)
            for (long j = y0.get_si(); j < y1.get_si(); ++j) out.tile.add(Cell{i, j}, w);
    }
    return out;
}

LaurentPoly star_factor(const LatticeTile& t) {
    LaurentPoly f;
    for (const auto& [c, w] : t.weights)
        f.add_term({Rational(static_cast<long>(c.i)), Rational(static_cast<long>(c.j))}, w);
    return f;
}

}  // namespace shapetile
