#include "shapetile/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace shapetile {

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    Rational xmin, xmax, ymin, ymax;
    double unit;
    double margin = 30.0;
    double offset_x = 0.0;

    double sx(const Rational& x) const { return offset_x + margin + Rational(x - xmin).get_d() * unit; }
    double sy(const Rational& y) const { return margin + Rational(ymax - y).get_d() * unit; }
    double width() const { return 2 * margin + Rational(xmax - xmin).get_d() * unit; }
    double height() const { return 2 * margin + Rational(ymax - ymin).get_d() * unit + 20.0; }
};

struct Segment {
    Rational x0, y0, x1, y1;
};

// Edges between prototile cells of different weight, including the outline.
std::vector<Segment> outline(const WeightedTile& t) {
    std::vector<Segment> segs;
    const auto& xs = t.xcuts();
    const auto& ys = t.ycuts();
    auto weight = [&t](long i, long j) -> Rational {
        if (i < 0 || j < 0) return 0;
        auto it = t.cells().find(GridIndex{static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
        return it == t.cells().end() ? Rational(0) : it->second;
    };
    const long nx = static_cast<long>(xs.size()) - 1, ny = static_cast<long>(ys.size()) - 1;
    for (long i = 0; i <= nx; ++i)
        for (long j = 0; j < ny; ++j)
            if (weight(i - 1, j) != weight(i, j)) segs.push_back({xs[i], ys[j], xs[i], ys[j + 1]});
    for (long j = 0; j <= ny; ++j)
        for (long i = 0; i < nx; ++i)
            if (weight(i, j - 1) != weight(i, j)) segs.push_back({xs[i], ys[j], xs[i + 1], ys[j]});
    return segs;
}

void panel(std::ostringstream& out, const Frame& f, const Certificate& c, const std::vector<Segment>& proto,
           bool positive, const char* title) {
    const std::string stroke = positive ? "#1f5fa8" : "#a8321f";
    out << "  <g class=\"" << (positive ? "positive" : "negative") << "\">\n";
    // axes
    out << "    <line x1=\"" << px(f.sx(f.xmin)) << "\" y1=\"" << px(f.sy(0)) << "\" x2=\"" << px(f.sx(f.xmax))
        << "\" y2=\"" << px(f.sy(0)) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out << "    <line x1=\"" << px(f.sx(0)) << "\" y1=\"" << px(f.sy(f.ymin)) << "\" x2=\"" << px(f.sx(0))
        << "\" y2=\"" << px(f.sy(f.ymax)) << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    // target square
    const Rational tx1 = c.anchor_x + c.target_side, ty1 = c.anchor_y + c.target_side;
    out << "    <rect x=\"" << px(f.sx(c.anchor_x)) << "\" y=\"" << px(f.sy(ty1)) << "\" width=\""
        << px(f.sx(tx1) - f.sx(c.anchor_x)) << "\" height=\"" << px(f.sy(c.anchor_y) - f.sy(ty1))
        << "\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"4 3\"/>\n";

    std::vector<WeightedRect> layer;
    const auto proto_rects = c.prototile.to_rects();
    for (const Placement& p : c.placements) {
        if ((p.weight > 0) != positive) continue;
        out << "    <path d=\"";
        for (const Segment& s : proto) {
            out << "M" << px(f.sx(p.sigma + p.scale * s.x0)) << " " << px(f.sy(p.tau + p.scale * s.y0)) << "L"
                << px(f.sx(p.sigma + p.scale * s.x1)) << " " << px(f.sy(p.tau + p.scale * s.y1));
        }
        out << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n";
        for (const auto& [w, r] : proto_rects)
            layer.push_back({p.weight * w, Rect{p.sigma + p.scale * r.x0, p.sigma + p.scale * r.x1,
                                                p.tau + p.scale * r.y0, p.tau + p.scale * r.y1}});
    }
    // region sums
    const WeightedTile sum = tile_from_rects(layer);
    for (const auto& [w, r] : sum.to_rects()) {
        const Rational cx = (r.x0 + r.x1) / 2, cy = (r.y0 + r.y1) / 2;
        out << "    <text x=\"" << px(f.sx(cx)) << "\" y=\"" << px(f.sy(cy) + 4.0)
            << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"" << stroke << "\">" << to_string(w)
            << "</text>\n";
    }
    out << "    <text x=\"" << px(f.offset_x + f.width() / 2) << "\" y=\"" << px(f.height() - 8.0)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << title << "</text>\n";
    out << "  </g>\n";
}

}  // namespace

std::string render_certificate_svg(const Certificate& c, const RenderOptions& opt) {
    if (!(opt.unit_px > 0)) throw std::invalid_argument("render: unit scale must be positive");

    Frame f{0, c.anchor_x + c.target_side, 0, c.anchor_y + c.target_side, opt.unit_px};
    f.xmin = std::min(f.xmin, c.anchor_x);
    f.ymin = std::min(f.ymin, c.anchor_y);
    const auto proto_rects = c.prototile.to_rects();
    for (const Placement& p : c.placements)
        for (const auto& [w, r] : proto_rects) {
            f.xmin = std::min<Rational>(f.xmin, p.sigma + p.scale * r.x0);
            f.xmax = std::max<Rational>(f.xmax, p.sigma + p.scale * r.x1);
            f.ymin = std::min<Rational>(f.ymin, p.tau + p.scale * r.y0);
            f.ymax = std::max<Rational>(f.ymax, p.tau + p.scale * r.y1);
        }

    const std::vector<Segment> proto = outline(c.prototile);
    Frame right = f;
    right.offset_x = f.width();

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(2 * f.width()) << "\" height=\""
        << px(f.height()) << "\" viewBox=\"0 0 " << px(2 * f.width()) << " " << px(f.height()) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    panel(out, f, c, proto, true, "Positive-weight placements");
    panel(out, right, c, proto, false, "Negative-weight placements");
    out << "</svg>\n";
    return out.str();
}

}  // namespace shapetile
