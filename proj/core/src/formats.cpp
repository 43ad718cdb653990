#include "shapetile/formats.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace shapetile {

using nlohmann::json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

// Splits one line on blanks, dropping a trailing '#' comment.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

Rational number_at(const Token& tok, std::size_t line) {
    try {
        return parse_rational(tok.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, tok.column, e.what());
    }
}

void expect_arity(const std::vector<Token>& toks, std::size_t n, std::size_t line, const char* usage) {
    if (toks.size() == n) return;
    const std::size_t col = toks.size() > n ? toks[n].column : toks.back().column + toks.back().text.size();
    throw ParseError(line, col, std::string("expected '") + usage + "'");
}

WeightedRect rect_record(const std::vector<Token>& toks, std::size_t line) {
    expect_arity(toks, 6, line, "rect x0 x1 y0 y1 weight");
    Rational x0 = number_at(toks[1], line), x1 = number_at(toks[2], line);
    Rational y0 = number_at(toks[3], line), y1 = number_at(toks[4], line);
    Rational w = number_at(toks[5], line);
    if (!(x0 < x1)) throw ParseError(line, toks[1].column, "rectangle needs x0 < x1");
    if (!(y0 < y1)) throw ParseError(line, toks[3].column, "rectangle needs y0 < y1");
    return {w, Rect{x0, x1, y0, y1}};
}

bool looks_like_json(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '{';
    }
    return false;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, "malformed JSON document");
    }
}

Rational json_number(const json& j, const std::string& what) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, 0, what + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    if (j.is_number_float()) {
        // Shortest round-trip decimal of the double, read back exactly.
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
        std::string s(buf, res.ptr);
        if (s.find_first_of("eE") != std::string::npos || s.find("inf") != std::string::npos ||
            s.find("nan") != std::string::npos)
            throw ParseError(0, 0, what + ": use a \"p/q\" string for " + s);
        return parse_rational(s);
    }
    throw ParseError(0, 0, what + ": expected a number");
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(0, 0, where + ": missing \"" + key + "\"");
    return obj.at(key);
}

WeightedTile tile_from_json(const json& doc) {
    const json& rects = member(doc, "rects", "tile");
    if (!rects.is_array()) throw ParseError(0, 0, "tile: \"rects\" must be an array");
    std::vector<WeightedRect> entries;
    for (std::size_t k = 0; k < rects.size(); ++k) {
        const std::string where = "rects[" + std::to_string(k) + "]";
        const json& r = rects[k];
        Rational x0 = json_number(member(r, "x0", where), where + ".x0");
        Rational x1 = json_number(member(r, "x1", where), where + ".x1");
        Rational y0 = json_number(member(r, "y0", where), where + ".y0");
        Rational y1 = json_number(member(r, "y1", where), where + ".y1");
        Rational w = json_number(member(r, "weight", where), where + ".weight");
        if (!(x0 < x1) || !(y0 < y1)) throw ParseError(0, 0, where + ": degenerate rectangle");
        entries.push_back({w, Rect{x0, x1, y0, y1}});
    }
    return tile_from_rects(entries);
}

json tile_to_json(const WeightedTile& t) {
    json rects = json::array();
    for (const auto& [w, r] : t.to_rects())
        rects.push_back({{"x0", to_string(r.x0)},
                         {"x1", to_string(r.x1)},
                         {"y0", to_string(r.y0)},
                         {"y1", to_string(r.y1)},
                         {"weight", to_string(w)}});
    return json{{"rects", rects}};
}

Certificate certificate_from_json(const json& doc) {
    Certificate c;
    c.prototile = tile_from_json(member(doc, "tile", "certificate"));
    c.target_side = json_number(member(doc, "side", "certificate"), "side");
    const json& anchor = member(doc, "anchor", "certificate");
    if (!anchor.is_array() || anchor.size() != 2) throw ParseError(0, 0, "anchor: expected [ax, ay]");
    c.anchor_x = json_number(anchor[0], "anchor[0]");
    c.anchor_y = json_number(anchor[1], "anchor[1]");
    Rational w = json_number(member(doc, "weight", "certificate"), "weight");
    if (!is_integer(w) || w < 1) throw ParseError(0, 0, "weight: expected a positive integer");
    c.target_weight = w.get_num();
    if (c.target_side <= 0) throw ParseError(0, 0, "side: must be positive");
    const json& ps = member(doc, "placements", "certificate");
    if (!ps.is_array()) throw ParseError(0, 0, "placements: expected an array");
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const std::string where = "placements[" + std::to_string(k) + "]";
        Placement p;
        p.weight = json_number(member(ps[k], "weight", where), where + ".weight");
        p.scale = json_number(member(ps[k], "scale", where), where + ".scale");
        const json& sh = member(ps[k], "shift", where);
        if (!sh.is_array() || sh.size() != 2) throw ParseError(0, 0, where + ".shift: expected [sigma, tau]");
        p.sigma = json_number(sh[0], where + ".shift[0]");
        p.tau = json_number(sh[1], where + ".shift[1]");
        if (p.weight == 0) throw ParseError(0, 0, where + ": zero weight");
        if (p.scale <= 0) throw ParseError(0, 0, where + ": scale must be positive");
        c.placements.push_back(std::move(p));
    }
    return c;
}

}  // namespace

WeightedTile parse_tile(std::string_view text) {
    if (looks_like_json(text)) return tile_from_json(parse_json(text));
    std::vector<WeightedRect> entries;
    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto toks = tokenize(lines[n]);
        if (toks.empty()) continue;
        if (toks[0].text != "rect")
            throw ParseError(n + 1, toks[0].column, "unknown record '" + std::string(toks[0].text) + "'");
        entries.push_back(rect_record(toks, n + 1));
    }
    return tile_from_rects(entries);
}

std::string write_tile_text(const WeightedTile& t) {
    std::ostringstream out;
    out << "# " << t.cells().size() << " cells\n";
    for (const auto& [w, r] : t.to_rects())
        out << "rect " << to_string(r.x0) << ' ' << to_string(r.x1) << ' ' << to_string(r.y0) << ' '
            << to_string(r.y1) << ' ' << to_string(w) << '\n';
    return out.str();
}

std::string write_tile_json(const WeightedTile& t) { return tile_to_json(t).dump(2) + "\n"; }

Certificate parse_certificate(std::string_view text, const std::filesystem::path& base_dir) {
    if (looks_like_json(text)) return certificate_from_json(parse_json(text));

    Certificate c;
    bool have_tile = false, have_side = false, have_anchor = false, have_weight = false;
    const auto lines = split_lines(text);
    std::size_t n = 0;
    for (; n < lines.size(); ++n) {
        const std::size_t line = n + 1;
        const auto toks = tokenize(lines[n]);
        if (toks.empty()) continue;
        const std::string_view kw = toks[0].text;
        if (kw == "tile") {
            expect_arity(toks, 1, line, "tile");
            if (have_tile) throw ParseError(line, 1, "duplicate prototile");
            std::vector<WeightedRect> rects;
            bool closed = false;
            for (++n; n < lines.size(); ++n) {
                const auto inner = tokenize(lines[n]);
                if (inner.empty()) continue;
                if (inner[0].text == "end") {
                    expect_arity(inner, 1, n + 1, "end");
                    closed = true;
                    break;
                }
                if (inner[0].text != "rect")
                    throw ParseError(n + 1, inner[0].column, "expected 'rect' or 'end' inside tile block");
                rects.push_back(rect_record(inner, n + 1));
            }
            if (!closed) throw ParseError(line, 1, "tile block is missing 'end'");
            c.prototile = tile_from_rects(rects);
            have_tile = true;
        } else if (kw == "tile-file") {
            expect_arity(toks, 2, line, "tile-file <path>");
            if (have_tile) throw ParseError(line, 1, "duplicate prototile");
            const std::filesystem::path p = base_dir / std::string(toks[1].text);
            std::string body;
            try {
                body = read_file(p);
            } catch (const std::exception& e) {
                throw ParseError(line, toks[1].column, e.what());
            }
            try {
                c.prototile = parse_tile(body);
            } catch (const ParseError& e) {
                throw ParseError(line, toks[1].column, p.string() + ": " + e.what());
            }
            have_tile = true;
        } else if (kw == "side") {
            expect_arity(toks, 2, line, "side l");
            c.target_side = number_at(toks[1], line);
            if (c.target_side <= 0) throw ParseError(line, toks[1].column, "side must be positive");
            have_side = true;
        } else if (kw == "anchor") {
            expect_arity(toks, 3, line, "anchor ax ay");
            c.anchor_x = number_at(toks[1], line);
            c.anchor_y = number_at(toks[2], line);
            have_anchor = true;
        } else if (kw == "weight") {
            expect_arity(toks, 2, line, "weight w");
            Rational w = number_at(toks[1], line);
            if (!is_integer(w) || w < 1) throw ParseError(line, toks[1].column, "weight must be a positive integer");
            c.target_weight = w.get_num();
            have_weight = true;
        } else if (kw == "place") {
            expect_arity(toks, 5, line, "place weight scale sigma tau");
            Placement p{number_at(toks[1], line), number_at(toks[2], line), number_at(toks[3], line),
                        number_at(toks[4], line)};
            if (p.weight == 0) throw ParseError(line, toks[1].column, "placement weight must be nonzero");
            if (p.scale <= 0) throw ParseError(line, toks[2].column, "placement scale must be positive");
            c.placements.push_back(std::move(p));
        } else {
            throw ParseError(line, toks[0].column, "unknown record '" + std::string(kw) + "'");
        }
    }
    if (!have_tile) throw ParseError(lines.size() + 1, 1, "certificate has no prototile");
    if (!have_side) throw ParseError(lines.size() + 1, 1, "certificate has no 'side' record");
    if (!have_anchor) c.anchor_x = c.anchor_y = 0;
    if (!have_weight) c.target_weight = 1;
    return c;
}

std::string write_certificate_text(const Certificate& c) {
    std::ostringstream out;
    out << "tile\n";
    for (const auto& [w, r] : c.prototile.to_rects())
        out << "rect " << to_string(r.x0) << ' ' << to_string(r.x1) << ' ' << to_string(r.y0) << ' '
            << to_string(r.y1) << ' ' << to_string(w) << '\n';
    out << "end\n";
    out << "side " << to_string(c.target_side) << '\n';
    out << "anchor " << to_string(c.anchor_x) << ' ' << to_string(c.anchor_y) << '\n';
    out << "weight " << to_string(c.target_weight) << '\n';
    for (const auto& p : c.placements)
        out << "place " << to_string(p.weight) << ' ' << to_string(p.scale) << ' ' << to_string(p.sigma) << ' '
            << to_string(p.tau) << '\n';
    return out.str();
}

std::string write_certificate_json(const Certificate& c) {
    json ps = json::array();
    for (const auto& p : c.placements)
        ps.push_back({{"weight", to_string(p.weight)},
                      {"scale", to_string(p.scale)},
                      {"shift", {to_string(p.sigma), to_string(p.tau)}}});
    json doc{{"tile", tile_to_json(c.prototile)},
             {"side", to_string(c.target_side)},
             {"anchor", {to_string(c.anchor_x), to_string(c.anchor_y)}},
             {"weight", to_string(c.target_weight)},
             {"placements", ps}};
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace shapetile
