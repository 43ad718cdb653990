#include "cli.hpp"

#include "shapetile/shapetile.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

namespace shapetile::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Structured };

struct Options {
    std::string input;
    std::string format = "text";
    std::string output;
    int max_scale = 3;
    int window = 5;
    bool integer = false;
    bool rational = false;
    bool weight_w = false;
    long anchor = 0;
    std::size_t max_unknowns = 20000;
    int raster = 0;
    double unit_px = 40.0;
};

// Thrown for problems that map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format format_of(const Options& o) { return o.format == "structured" ? Format::Structured : Format::Text; }

unsigned worker_count() {
    if (const char* env = std::getenv("SHAPETILE_WORKERS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::string load(const std::string& path) {
    try {
        return read_file(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

WeightedTile load_tile(const std::string& path) {
    const std::string text = load(path);
    try {
        return parse_tile(text);
    } catch (const ParseError& e) {
        throw UsageError(path + (e.line() == 0 ? ": " : ":") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Certificate load_certificate(const std::string& path) {
    const std::string text = load(path);
    try {
        return parse_certificate(text, std::filesystem::path(path).parent_path());
    } catch (const ParseError& e) {
        throw UsageError(path + (e.line() == 0 ? ": " : ":") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void emit(const Options& o, std::ostream& out, const std::string& body) {
    if (o.output.empty()) {
        out << body;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.output);
    f << body;
}

json witness_json(const Verdict& v) {
    if (!v.witness) return nullptr;
    if (std::holds_alternative<ZeroAreaWitness>(*v.witness)) return json{{"kind", "zero-area"}};
    const auto& w = std::get<SlopeWitness>(*v.witness);
    return json{{"kind", "slope"}, {"mu", to_string(w.slope)}, {"c", to_string(w.slope.c())},
                {"d", to_string(w.slope.d())}, {"prime", to_string(w.prime)}};
}

json verdict_json(const Verdict& v) {
    return json{{"question", to_string(v.question)},
                {"answer", v.yes() ? "yes" : "no"},
                {"witness", witness_json(v)},
                {"latticeScale", to_string(v.lattice_scale)},
                {"area", to_string(v.area)}};
}

int cmd_check(const Options& o, std::ostream& out) {
    const WeightedTile t = load_tile(o.input);
    emit(o, out, format_of(o) == Format::Text ? write_tile_text(t) : write_tile_json(t));
    return kOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
    const WeightedTile t = load_tile(o.input);
    const Verdict q = decide_q(t);
    std::optional<Verdict> z;
    std::string z_error;
    try {
        z = decide_z(t);
    } catch (const std::invalid_argument& e) {
        z_error = e.what();
    }

    std::ostringstream s;
    if (format_of(o) == Format::Text) {
        s << "weighted area: " << to_string(q.area) << "\n";
        s << "lattice scale: " << to_string(q.lattice_scale) << "\n";
        s << describe(q) << "\n";
        if (z)
            s << describe(*z) << "\n";
        else
            s << "Z-shapetile: rejected (" << z_error << ")\n";
    } else {
        json doc{{"q", verdict_json(q)}};
        doc["z"] = z ? verdict_json(*z) : json{{"question", "Z-shapetile"}, {"error", z_error}};
        s << doc.dump(2) << "\n";
    }
    emit(o, out, s.str());
    return kOk;
}

std::string areas_list(const std::vector<SlopeClass>& classes) {
    std::string a;
    for (const auto& c : classes) {
        if (!a.empty()) a += ' ';
        a += to_string(c.area);
    }
    return a;
}

int cmd_slopes(const Options& o, std::ostream& out) {
    const WeightedTile t = load_tile(o.input);
    const LatticeForm lf = to_lattice(t);
    if (lf.tile.empty()) {
        emit(o, out, format_of(o) == Format::Text ? "empty tile: no slope classes\n"
                                                  : json{{"empty", true}}.dump(2) + "\n");
        return kOk;
    }
    if (!lf.tile.has_integer_weights()) throw UsageError(o.input + ": slope report needs integer weights");
    const SlopeReport r = condition2_check(lf.tile);

    std::ostringstream s;
    if (format_of(o) == Format::Text) {
        s << "lattice scale: " << to_string(lf.scale) << "\n";
        s << "generic gcd (cell weights): " << to_string(r.generic_gcd) << "\n";
        s << std::left << std::setw(10) << "slope" << std::setw(9) << "classes" << std::setw(6) << "gcd"
          << "areas\n";
        for (const auto& [slope, entry] : r.per_slope)
            s << std::left << std::setw(10) << to_string(slope) << std::setw(9) << entry.classes.size()
              << std::setw(6) << to_string(entry.gcd) << areas_list(entry.classes) << "\n";
        if (r.passes())
            s << "condition 2: holds\n";
        else
            s << "condition 2: fails (witness mu=" << to_string(r.failing_witness->slope)
              << " p=" << to_string(r.failing_witness->prime) << ")\n";
    } else {
        json slopes = json::array();
        for (const auto& [slope, entry] : r.per_slope) {
            json classes = json::array();
            for (const auto& c : entry.classes) {
                json members = json::array();
                for (const auto& m : c.members) members.push_back({m.i, m.j});
                classes.push_back({{"members", members}, {"area", to_string(c.area)}});
            }
            slopes.push_back({{"mu", to_string(slope)},
                              {"c", to_string(slope.c())},
                              {"d", to_string(slope.d())},
                              {"gcd", to_string(entry.gcd)},
                              {"classes", classes}});
        }
        json doc{{"latticeScale", to_string(lf.scale)},
                 {"genericGcd", to_string(r.generic_gcd)},
                 {"perSlope", slopes},
                 {"condition2", r.passes()}};
        doc["failingWitness"] = r.failing_witness
                                    ? json{{"mu", to_string(r.failing_witness->slope)},
                                           {"prime", to_string(r.failing_witness->prime)}}
                                    : json(nullptr);
        s << doc.dump(2) << "\n";
    }
    emit(o, out, s.str());
    return kOk;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.integer && o.rational) throw UsageError("--integer and --rational are exclusive");
    const WeightedTile t = load_tile(o.input);
    const LatticeForm lf = to_lattice(t);
    if (weighted_area(lf.tile) == 0) throw UsageError(o.input + ": prototile has zero weighted area");
    const bool needs_integer = o.weight_w || !o.rational;
    if (needs_integer && !lf.tile.has_integer_weights())
        throw UsageError(o.input + ": integer search needs integer weights (use --rational)");

    const SearchBounds bounds{o.max_scale, o.window};
    SearchOptions sopt;
    sopt.anchor = o.anchor;
    sopt.max_unknowns = o.max_unknowns;
    sopt.workers = worker_count();

    SearchResult r;
    try {
        if (o.weight_w)
            r = search_weight_w(lf.tile, bounds, sopt);
        else if (o.rational)
            r = search_q(lf.tile, bounds, sopt);
        else
            r = search_z(lf.tile, bounds, sopt);
    } catch (const std::length_error& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (!r.found()) {
        if (format_of(o) == Format::Text)
            out << r.message << "\n";
        else
            out << json{{"status", "inconclusive"}, {"message", r.message}}.dump(2) << "\n";
        return kInconclusive;
    }
    err << r.message;
    if (lf.scale != 1) err << " (prototile in lattice form, scale " << to_string(lf.scale) << ")";
    err << "\n";
    emit(o, out, format_of(o) == Format::Text ? write_certificate_text(*r.certificate)
                                              : write_certificate_json(*r.certificate));
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Certificate c = load_certificate(o.input);
    const VerifyResult v = verify_certificate(c);
    std::optional<bool> raster;
    if (o.raster > 0) raster = raster_check(c, o.raster);
    const bool ok = v.ok && raster.value_or(true);

    if (format_of(o) == Format::Text) {
        out << (ok ? "pass" : "fail") << "\n";
        if (!v.ok) out << v.diagnostic << "\n";
        if (raster) out << "raster check (resolution " << o.raster << "): " << (*raster ? "pass" : "fail") << "\n";
    } else {
        json doc{{"pass", ok}, {"identity", v.ok}, {"diagnostic", v.diagnostic}};
        doc["raster"] = raster ? json(*raster) : json(nullptr);
        out << doc.dump(2) << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_render(const Options& o, std::ostream& out) {
    const Certificate c = load_certificate(o.input);
    RenderOptions ropt;
    ropt.unit_px = o.unit_px;
    emit(o, out, render_certificate_svg(c, ropt));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shapetile: weighted shapetiling of squares by rectangle tiles", "shapetile"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    };

    auto* check = app.add_subcommand("check", "Parse a tile file and echo its canonical form");
    check->add_option("tile", o.input, "Tile file")->required();
    check->add_option("-o,--output", o.output, "Write to a file instead of stdout");
    add_format(check);

    auto* decide = app.add_subcommand("decide", "Decide Q- and Z-shapetiling of a square");
    decide->add_option("tile", o.input, "Tile file")->required();
    add_format(decide);

    auto* slopes = app.add_subcommand("slopes", "Report slope classes and their area gcds");
    slopes->add_option("tile", o.input, "Tile file")->required();
    add_format(slopes);

    auto* search = app.add_subcommand("search", "Search for an explicit certificate within bounds");
    search->add_option("tile", o.input, "Tile file")->required();
    search->add_option("--max-scale", o.max_scale, "Largest integer scale K")->check(CLI::PositiveNumber);
    search->add_option("--window", o.window, "Window side L")->check(CLI::PositiveNumber);
    search->add_flag("--integer", o.integer, "Integer weights (default)");
    search->add_flag("--rational", o.rational, "Rational weights");
    search->add_flag("--weight-w", o.weight_w, "Rational search, then clear denominators into a weight-w square");
    search->add_option("--anchor", o.anchor, "Target square lower-left corner (a, a)")->check(CLI::NonNegativeNumber);
    search->add_option("--max-unknowns", o.max_unknowns, "Refuse systems with more unknowns")
        ->check(CLI::PositiveNumber);
    search->add_option("-o,--output", o.output, "Write the certificate to a file");
    add_format(search);

    auto* verify = app.add_subcommand("verify", "Verify a certificate file (exit 0 pass, 1 fail)");
    verify->add_option("certificate", o.input, "Certificate file")->required();
    verify->add_option("--raster", o.raster, "Also run the raster oracle at this resolution")
        ->check(CLI::PositiveNumber);
    add_format(verify);

    auto* render = app.add_subcommand("render", "Render a certificate as SVG");
    render->add_option("certificate", o.input, "Certificate file")->required();
    render->add_option("--scale", o.unit_px, "Pixels per unit length")->check(CLI::PositiveNumber);
    render->add_option("-o,--output", o.output, "Write the SVG to a file");

    std::vector<const char*> argv{"shapetile"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "shapetile: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*decide) return cmd_decide(o, out);
        if (*slopes) return cmd_slopes(o, out);
        if (*search) return cmd_search(o, out, err);
        if (*verify) return cmd_verify(o, out);
        if (*render) return cmd_render(o, out);
    } catch (const UsageError& e) {
        err << "shapetile: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace shapetile::cli
