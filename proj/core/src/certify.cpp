#include "shapetile/certify.hpp"

#include "shapetile/exact_solve.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace shapetile {

LaurentPoly certificate_sum(const Certificate& c) {
    const LaurentPoly f = encode(c.prototile);
    LaurentPoly sum;
    for (const Placement& p : c.placements)
        sum += p.weight * poly_monomial_mul(poly_substitute_powers(f, p.scale), p.sigma, p.tau);
    return sum;
}

LaurentPoly certificate_target(const Certificate& c) {
    const Rational& l = c.target_side;
    LaurentPoly g;
    g.add_term({l, l}, 1);
    g.add_term({l, 0}, -1);
    g.add_term({0, l}, -1);
    g.add_term({0, 0}, 1);
    return Rational(c.target_weight) * poly_monomial_mul(g, c.anchor_x, c.anchor_y);
}

VerifyResult verify_certificate(const Certificate& c) {
    if (c.target_side <= 0) return {false, "target side must be positive"};
    if (c.target_weight < 1) return {false, "target weight must be a positive integer"};
    for (std::size_t i = 0; i < c.placements.size(); ++i)
        if (c.placements[i].scale <= 0)
            return {false, "placement " + std::to_string(i + 1) + " has nonpositive scale"};

    const LaurentPoly lhs = certificate_sum(c);
    const LaurentPoly rhs = certificate_target(c);
    if (lhs == rhs) return {true, {}};

    const LaurentPoly diff = lhs - rhs;
    const auto& [e, d] = *diff.terms().begin();
    return {false, "first difference at X^{" + to_string(e.u) + "} Y^{" + to_string(e.v) + "}: placements give " +
                       to_string(lhs.coeff(e.u, e.v)) + ", target needs " + to_string(rhs.coeff(e.u, e.v))};
}

bool raster_check(const Certificate& c, int resolution) {
    if (resolution < 1) throw std::invalid_argument("raster_check: resolution must be >= 1");
    if (c.target_side <= 0 || c.target_weight < 1) return false;

    struct Piece {
        Rect r;
        Rational w;
    };
    std::vector<Piece> pieces;
    const auto proto = c.prototile.to_rects();
    for (const Placement& p : c.placements) {
        if (p.scale <= 0) return false;
        for (const auto& [w, r] : proto)
            pieces.push_back({Rect{p.sigma + p.scale * r.x0, p.sigma + p.scale * r.x1, p.tau + p.scale * r.y0,
                                   p.tau + p.scale * r.y1},
                              p.weight * w});
    }
    const Rect target{c.anchor_x, c.anchor_x + c.target_side, c.anchor_y, c.anchor_y + c.target_side};

    Integer den = 1;
    Rational xmin = target.x0, xmax = target.x1, ymin = target.y0, ymax = target.y1;
    auto absorb = [&](const Rect& r) {
        for (const Rational* v : {&r.x0, &r.x1, &r.y0, &r.y1}) den = lcm(den, v->get_den());
        xmin = std::min(xmin, r.x0);
        xmax = std::max(xmax, r.x1);
        ymin = std::min(ymin, r.y0);
        ymax = std::max(ymax, r.y1);
    };
    absorb(target);
    for (const auto& pc : pieces) absorb(pc.r);

    const Rational step = make_rational(1, Integer(resolution) * den);
    xmin -= step;
    ymin -= step;
    xmax += step;
    ymax += step;
    const Integer nxz = Rational((xmax - xmin) / step).get_num();
    const Integer nyz = Rational((ymax - ymin) / step).get_num();
    if (nxz * nyz > Integer(64) * 1000 * 1000) throw std::length_error("raster_check: sample grid too large");
    const std::size_t nx = nxz.get_ui(), ny = nyz.get_ui();

    auto index = [&step](const Rational& v, const Rational& lo) {
        return static_cast<std::size_t>(Rational((v - lo) / step).get_num().get_ui());
    };
    // 2D difference array; samples t have centres lo + (t + 1/2) step.
    std::vector<Rational> acc((nx + 1) * (ny + 1), Rational(0));
    auto at = [&acc, ny](std::size_t i, std::size_t j) -> Rational& { return acc[i * (ny + 1) + j]; };
    for (const auto& pc : pieces) {
        if (pc.w == 0) continue;
        const std::size_t i0 = index(pc.r.x0, xmin), i1 = index(pc.r.x1, xmin);
        const std::size_t j0 = index(pc.r.y0, ymin), j1 = index(pc.r.y1, ymin);
        at(i0, j0) += pc.w;
        at(i1, j0) -= pc.w;
        at(i0, j1) -= pc.w;
        at(i1, j1) += pc.w;
    }
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            if (i > 0) at(i, j) += at(i - 1, j);
            if (j > 0) at(i, j) += at(i, j - 1);
            if (i > 0 && j > 0) at(i, j) -= at(i - 1, j - 1);
        }

    const std::size_t ti0 = index(target.x0, xmin), ti1 = index(target.x1, xmin);
    const std::size_t tj0 = index(target.y0, ymin), tj1 = index(target.y1, ymin);
    const Rational w(c.target_weight);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            const bool inside = i >= ti0 && i < ti1 && j >= tj0 && j < tj1;
            if (at(i, j) != (inside ? w : Rational(0))) return false;
        }
    return true;
}

namespace {

struct Column {
    long k, i, j;
};

struct SearchSystem {
    IntMatrix a;
    std::vector<Column> columns;
    Integer denominator;  // A = denominator * (true coefficients)
    long u0, v0;          // exponent of row 0
    long width, height;   // rows cover [u0, u0 + width) x [v0, v0 + height)

    std::size_t row(long u, long v) const { return static_cast<std::size_t>((u - u0) * height + (v - v0)); }
};

struct Box {
    long x0, x1, y0, y1;  // cells occupy [x0, x1) x [y0, y1)
};

Box bounding_box(const LatticeTile& t) {
    Box b{std::numeric_limits<long>::max(), std::numeric_limits<long>::min(), std::numeric_limits<long>::max(),
          std::numeric_limits<long>::min()};
    for (const auto& [c, w] : t.weights) {
        b.x0 = std::min<long>(b.x0, c.i);
        b.x1 = std::max<long>(b.x1, c.i + 1);
        b.y0 = std::min<long>(b.y0, c.j);
        b.y1 = std::max<long>(b.y1, c.j + 1);
    }
    return b;
}

std::vector<Column> enumerate_columns(const LatticeTile& t, const SearchBounds& b) {
    std::vector<Column> cols;
    if (t.empty()) return cols;
    const long L = b.window;
    for (long k = 1; k <= b.max_scale; ++k)
        for (long i = 0; i <= L; ++i)
            for (long j = 0; j <= L; ++j) cols.push_back({k, i, j});
    return cols;
}

void check_preconditions(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt) {
    if (b.max_scale < 1 || b.window < 1) throw std::invalid_argument("search bounds must be positive");
    if (opt.anchor < 0) throw std::invalid_argument("search anchor must be nonnegative");
    if (weighted_area(t) == 0) throw std::invalid_argument("search: prototile has zero weighted area");
    const std::size_t n = search_unknown_count(t, b);
    if (n > opt.max_unknowns)
        throw std::length_error("search: " + std::to_string(n) + " unknowns exceed the ceiling of " +
                                std::to_string(opt.max_unknowns) + "; lower --max-scale or --window");
}

SearchSystem build_system(const LatticeTile& t, const SearchBounds& b, long anchor) {
    const Box box = bounding_box(t);
    const long K = b.max_scale, L = b.window;
    SearchSystem sys{{}, enumerate_columns(t, b), 1, 0, 0, 0, 0};
    sys.u0 = std::min({0L, K * box.x0, box.x0});
    sys.v0 = std::min({0L, K * box.y0, box.y0});
    const long u1 = std::max({anchor + L, L + K * box.x1, L + box.x1});
    const long v1 = std::max({anchor + L, L + K * box.y1, L + box.y1});
    sys.width = u1 - sys.u0 + 1;
    sys.height = v1 - sys.v0 + 1;

    const LaurentPoly f = LaurentPoly::monomial(1, 1, 1) - LaurentPoly::monomial(1, 1, 0) -
                          LaurentPoly::monomial(1, 0, 1) + LaurentPoly(1);
    const LaurentPoly ft = f * star_factor(t);
    for (const auto& [e, c] : ft.terms()) sys.denominator = lcm(sys.denominator, c.get_den());

    sys.a = IntMatrix(static_cast<std::size_t>(sys.width * sys.height), sys.columns.size());
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
        const Column& cl = sys.columns[col];
        for (const auto& [e, c] : ft.terms()) {
            const long u = cl.i + cl.k * e.u.get_num().get_si();
            const long v = cl.j + cl.k * e.v.get_num().get_si();
            sys.a(sys.row(u, v), col) = Rational(c * Rational(sys.denominator)).get_num();
        }
    }
    return sys;
}

std::vector<Integer> target_rhs(const SearchSystem& sys, long l, long anchor) {
    std::vector<Integer> rhs(static_cast<std::size_t>(sys.width * sys.height), Integer(0));
    rhs[sys.row(anchor + l, anchor + l)] = 1;
    rhs[sys.row(anchor + l, anchor)] = -1;
    rhs[sys.row(anchor, anchor + l)] = -1;
    rhs[sys.row(anchor, anchor)] = 1;
    return rhs;
}

Certificate make_certificate(const LatticeTile& t, const SearchSystem& sys, const std::vector<Rational>& x, long l,
                             long anchor) {
    Certificate c;
    c.prototile = tile_from_lattice(t);
    c.target_side = l;
    c.anchor_x = anchor;
    c.anchor_y = anchor;
    c.target_weight = 1;
    for (std::size_t col = 0; col < x.size(); ++col) {
        if (x[col] == 0) continue;
        const Column& cl = sys.columns[col];
        c.placements.push_back({x[col], Rational(cl.k), Rational(cl.i), Rational(cl.j)});
    }
    return c;
}

// Tries every side l = 1..L and keeps
// the smallest that solves.  Sides are handed out in ascending order; a
// worker stops once a smaller side has already succeeded.
template <class Solve>
SearchResult run_sides(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt, const char* field,
                       Solve&& solve) {
    const SearchSystem sys = build_system(t, b, opt.anchor);
    const long max_side = b.window;
    std::atomic<long> next{1};
    std::atomic<long> best{std::numeric_limits<long>::max()};
    std::mutex mu;
    std::optional<std::vector<Rational>> best_solution;

    auto worker = [&] {
        for (;;) {
            const long l = next.fetch_add(1);
            if (l > max_side || l >= best.load()) return;
            auto sol = solve(sys.a, target_rhs(sys, l, opt.anchor));
            if (!sol) continue;
            std::lock_guard<std::mutex> lock(mu);
            if (l < best.load()) {
                best.store(l);
                best_solution = std::move(sol);
            }
        }
    };
    const unsigned n = std::max(1u, opt.workers);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    }

    SearchResult out;
    if (!best_solution) {
        out.message = std::string("inconclusive within bounds: no ") + field + " certificate with K=" +
                      std::to_string(b.max_scale) + ", L=" + std::to_string(b.window);
        return out;
    }
    std::vector<Rational> x = std::move(*best_solution);
    for (auto& v : x) v *= Rational(sys.denominator);
    out.status = SearchStatus::Found;
    out.certificate = make_certificate(t, sys, x, best.load(), opt.anchor);
    out.message = std::string(field) + " certificate for a " + std::to_string(best.load()) + "x" +
                  std::to_string(best.load()) + " square with " + std::to_string(out.certificate->placements.size()) +
                  " placements";
    return out;
}

}  // namespace

std::size_t search_unknown_count(const LatticeTile& t, const SearchBounds& b) {
    if (t.empty()) return 0;
    return enumerate_columns(t, b).size();
}

SearchResult search_q(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt) {
    check_preconditions(t, b, opt);
    return run_sides(t, b, opt, "rational", [](const IntMatrix& a, const std::vector<Integer>& rhs) {
        return solve_rational(a, rhs);
    });
}

SearchResult search_z(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt) {
    if (!t.has_integer_weights()) throw std::invalid_argument("search_z: tile weights must be integers");
    check_preconditions(t, b, opt);
    return run_sides(t, b, opt, "integer",
                     [](const IntMatrix& a, const std::vector<Integer>& rhs) -> std::optional<std::vector<Rational>> {
                         auto x = solve_integer(a, rhs);
                         if (!x) return std::nullopt;
                         return std::vector<Rational>(x->begin(), x->end());
                     });
}

SearchResult search_weight_w(const LatticeTile& t, const SearchBounds& b, const SearchOptions& opt) {
    if (!t.has_integer_weights()) throw std::invalid_argument("search_weight_w: tile weights must be integers");
    check_preconditions(t, b, opt);
    SearchResult r = run_sides(t, b, opt, "rational",
                               [](const IntMatrix& a, const std::vector<Integer>& rhs) -> std::optional<std::vector<Rational>> {
                                   if (auto z = solve_integer(a, rhs)) return std::vector<Rational>(z->begin(), z->end());
                                   return solve_rational(a, rhs);
                               });
    if (!r.found()) return r;
    Integer w = 1;
    for (const auto& p : r.certificate->placements) w = lcm(w, p.weight.get_den());
    for (auto& p : r.certificate->placements) p.weight *= Rational(w);
    r.certificate->target_weight = w;
    r.message = "weight-" + w.get_str() + " integer certificate for a " + to_string(r.certificate->target_side) + "x" +
                to_string(r.certificate->target_side) + " square";
    return r;
}

}  // namespace shapetile
