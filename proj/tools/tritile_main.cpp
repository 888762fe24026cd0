#include "tritile/analysis.hpp"
#include "tritile/generators.hpp"
#include "tritile/invariant.hpp"
#include "tritile/json_io.hpp"
#include "tritile/search.hpp"
#include "tritile/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tritile;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// "a,b,c" with rational or decimal entries. Exact when the triple satisfies
// c^2 = a^2 + ab + b^2 as rationals; numeric otherwise, with the entries
// checked against the law to 1e-9 relative.
TileSpec parse_tile(const std::string& text, std::optional<double> alpha, AngleMode am, SideMode sm) {
    auto parts = split_commas(text);
    if (parts.size() != 3) throw UsageError("--tile wants three comma-separated sides, got '" + text + "'");
    Rat ra, rb, rc;
    bool exact = true;
    try {
        ra = parse_rat(parts[0]);
        rb = parse_rat(parts[1]);
        rc = parse_rat(parts[2]);
    } catch (const std::exception&) {
        exact = false;
    }
    TileSpec spec;
    if (exact && rc * rc == ra * ra + ra * rb + rb * rb) {
        spec = make_spec_exact(ra, rb, am, sm);
        if (alpha && std::abs(*alpha - spec.alpha) > 1e-9)
            throw UsageError("--alpha contradicts the sides (law of cosines gives " + std::to_string(spec.alpha) + ")");
    } else {
        double a = exact ? rat_to_double(ra) : std::strtod(parts[0].c_str(), nullptr);
        double b = exact ? rat_to_double(rb) : std::strtod(parts[1].c_str(), nullptr);
        double c = exact ? rat_to_double(rc) : std::strtod(parts[2].c_str(), nullptr);
        if (!(a > 0) || !(b > 0) || !(c > 0)) throw UsageError("--tile sides must be positive numbers");
        spec = make_spec(a, b, alpha, am, sm);
        if (std::abs(c - spec.c) > 1e-9 * spec.c)
            throw UsageError("--tile: c=" + parts[2] + " does not satisfy c^2 = a^2 + ab + b^2 (expected " +
                             std::to_string(spec.c) + ")");
    }
    SpecReport rep = check_tile_spec(spec, 1e-9);
    if (!rep.ok) {
        std::string msg = "--tile:";
        for (const auto& e : rep.errors) msg += " " + e;
        throw UsageError(msg);
    }
    return spec;
}

AngleClass parse_class(const std::string& text, const char* flag) {
    auto parts = split_commas(text);
    try {
        if (parts.size() == 2) return angle_class(std::stoi(parts[0]), std::stoi(parts[1]));
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(flag) + " wants 'j,k' integers, got '" + text + "'");
}

int write_out(const std::string& out, const std::string& body) {
    if (out.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot open '" << out << "' for writing\n";
        return 1;
    }
    f << body;
    return 0;
}

std::vector<Vec2> region_from_arg(const std::string& arg, const TileSpec& spec) {
    auto tail_int = [&](size_t colon) {
        int n = 0;
        try {
            n = std::stoi(arg.substr(colon + 1));
        } catch (const std::exception&) {
        }
        if (n < 1) throw UsageError("--region '" + arg + "' wants a positive count after ':'");
        return n;
    };
    if (arg == "kite") return *gen_kite(spec).region;
    if (arg == "parallelogram") return *gen_parallelogram(spec).region;
    if (arg.rfind("triangle:", 0) == 0) return *gen_quadratic(tail_int(8), spec).region;
    if (arg.rfind("equilateral:", 0) == 0) {
        double s = tail_int(11) * spec.c;
        return {Vec2{0, 0}, Vec2{s, 0}, Vec2{s / 2, s * std::sqrt(3.0) / 2}};
    }
    std::ifstream in(arg);
    if (!in)
        throw UsageError("--region '" + arg +
                         "' is neither a readable file nor one of kite, parallelogram, triangle:N, equilateral:X");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw TilingError(ErrKind::ParseError, "'" + arg + "': " + e.what());
    }
    const nlohmann::json& pts = j.is_object() && j.contains("region") ? j.at("region") : j;
    if (!pts.is_array() || pts.size() < 3)
        throw TilingError(ErrKind::ParseError, "'" + arg + "': region wants an array of at least 3 [x,y] points");
    std::vector<Vec2> region;
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw TilingError(ErrKind::ParseError, "'" + arg + "': region points must be [x,y] numbers");
        region.push_back(Vec2{p[0].get<double>(), p[1].get<double>()});
    }
    return region;
}

std::string analysis_text(const Tiling& t) {
    std::ostringstream os;
    os << "tiles: " << t.tiles.size() << (t.fragment_mode ? " (fragment)" : "") << "\n";
    VertexCensus cen = classify_vertices(t);
    long corner = corner_contribution(t);
    os << "census: simple=" << cen.simple << " star=" << cen.star << " center=" << cen.center
       << " double_star=" << cen.double_star << " gamma_star=" << cen.gamma_star
       << " double_simple=" << cen.double_simple << " other=" << cen.other << "\n";
    os << "wedges: alpha=" << cen.n_alpha << " beta=" << cen.n_beta << " gamma=" << cen.n_gamma << "\n";
    os << "corner contribution: " << corner << ", census identity: " << census_identity_check(cen, corner)
       << "\n";
    for (SideLabel s : {SideLabel::A, SideLabel::B, SideLabel::C}) {
        GammaGraph g = build_gamma_graph(t, s);
        os << "graph " << side_char(s) << ": " << g.links.size() << " link(s)\n";
        for (const auto& l : g.links)
            os << "  v" << l.tail << " -> v" << l.head << " on segment " << l.segment << "\n";
    }
    auto rels = extract_relations(t);
    os << "relations: " << rels.size() << "\n";
    for (const auto& r : rels) os << "  " << to_string(r) << " (segment " << r.witness << ")\n";
    Verdict v = commensurability_verdict(t);
    if (!v.applicable) {
        os << "verdict: not applicable (" << v.gate_reason << ")\n";
    } else {
        os << "verdict: " << to_string(v.conclusion);
        if (v.ratios.a_over_b) os << ", a/b = " << rat_to_string(*v.ratios.a_over_b);
        if (v.ratios.c_over_b) os << ", c/b = " << rat_to_string(*v.ratios.c_over_b);
        os << "\n";
    }
    return os.str();
}

int run_validate(const std::string& file, double eps) {
    Tiling t = load_tiling(file, eps);
    std::cout << (t.fragment_mode ? "valid fragment, " : "valid, ") << t.tiles.size() << " tiles\n";
    return 0;
}

int run_analyze(const std::string& file, double eps, const std::string& format, const std::string& out) {
    Tiling t = load_tiling(file, eps);
    if (format == "json") return write_out(out, analysis_report_json(t).dump(2) + "\n");
    return write_out(out, analysis_text(t));
}

int run_zh(const std::string& file, double eps, const std::string& frame, const std::string& out) {
    Tiling t = load_tiling(file, eps);
    std::optional<AngleClass> fr;
    if (!frame.empty()) fr = parse_class(frame, "--frame");
    ZhReport r = zh_report(t, fr);
    return write_out(out, zh_report_to_json(r, t.spec).dump(2) + "\n");
}

int run_generate(const std::string& kind, int n, const TileSpec& spec, AngleClass frame,
                 SideLabel shared, const std::string& out) {
    Tiling t;
    if (kind == "quadratic") {
        if (n < 1) throw UsageError("--kind quadratic wants --n >= 1");
        t = gen_quadratic(n, spec, frame);
    } else if (kind == "kite") {
        t = gen_kite(spec, frame);
    } else if (kind == "parallelogram") {
        t = gen_parallelogram(spec, frame, shared);
    } else if (kind == "appendix") {
        t = gen_appendix_fixture(spec);
    } else if (kind == "ring") {
        if (n < 1) throw UsageError("--kind ring wants --n >= 1");
        t = gen_ring(n, spec, frame);
    } else {
        throw UsageError("--kind wants quadratic|kite|parallelogram|appendix|ring, got '" + kind + "'");
    }
    if (out.empty()) return write_out("", tiling_to_json(t).dump(2) + "\n");
    save_tiling(t, out);
    std::cout << "wrote " << out << " (" << t.tiles.size() << " tiles)\n";
    return 0;
}

int run_sawtooth(const std::string& file, double eps, const std::string& out) {
    Tiling t = load_tiling(file, eps);
    Tiling aug = sawtooth_augment(t);
    if (out.empty()) return write_out("", tiling_to_json(aug).dump(2) + "\n");
    save_tiling(aug, out);
    std::cout << "wrote " << out << " (" << t.tiles.size() << " -> " << aug.tiles.size() << " tiles)\n";
    return 0;
}

std::set<PruneRule> parse_prunes(const std::string& text) {
    std::set<PruneRule> rules;
    if (text == "none") return rules;
    for (const auto& name : split_commas(text)) {
        bool known = false;
        for (PruneRule r : {PruneRule::AngleCensus, PruneRule::SegmentRelation, PruneRule::ZhFeasibility})
            if (name == to_string(r)) {
                rules.insert(r);
                known = true;
            }
        if (!known)
            throw UsageError("--prune: unknown rule '" + name +
                             "' (angle-census, segment-relation, zh-feasibility, none)");
    }
    return rules;
}

int run_search(const SearchConfig& cfg, bool naive, const std::string& emit_dir, const std::string& format,
               const std::string& out) {
    SearchResult r = naive ? enumerate_naive(cfg) : enumerate(cfg);
    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (size_t i = 0; i < r.tilings.size(); i++) {
            char name[32];
            std::snprintf(name, sizeof name, "tiling_%03zu.json", i);
            save_tiling(r.tilings[i], (std::filesystem::path(emit_dir) / name).string());
        }
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["nodes"] = r.stats.nodes;
        nlohmann::ordered_json pr = nlohmann::ordered_json::object();
        for (const auto& [rule, count] : r.stats.pruned) pr[to_string(rule)] = count;
        j["pruned"] = pr;
        j["wall_seconds"] = r.stats.wall_seconds;
        j["complete"] = r.stats.complete;
        j["tilings"] = nlohmann::ordered_json::array();
        for (const auto& t : r.tilings) j["tilings"].push_back(tiling_to_json(t));
        return write_out(out, j.dump(2) + "\n");
    }
    std::ostringstream os;
    os << "nodes: " << r.stats.nodes;
    for (const auto& [rule, count] : r.stats.pruned) os << ", pruned[" << to_string(rule) << "]: " << count;
    os << ", elapsed: " << r.stats.wall_seconds << "s, complete: " << (r.stats.complete ? "yes" : "no") << "\n";
    os << "tilings found: " << r.tilings.size() << "\n";
    if (!emit_dir.empty()) os << "emitted " << r.tilings.size() << " file(s) to " << emit_dir << "\n";
    return write_out(out, os.str());
}

int run_render(const std::string& file, double eps, const RenderStyle& style, const std::string& gamma,
               bool matching, const std::string& out) {
    Tiling t = load_tiling(file, eps);
    std::vector<std::pair<Vec2, Vec2>> arrows, marks;
    if (!gamma.empty()) {
        if (gamma.size() != 1 || (gamma != "a" && gamma != "b" && gamma != "c"))
            throw UsageError("--gamma wants a, b, or c");
        GammaGraph g = build_gamma_graph(t, side_from_char(gamma[0]));
        for (const auto& l : g.links) arrows.push_back({t.vertices[l.tail].pos, t.vertices[l.head].pos});
    }
    if (matching) {
        auto centroid = [&](int id) {
            const auto& v = t.tiles[id].verts;
            return (v[0] + v[1] + v[2]) * (1.0 / 3);
        };
        for (auto [l, r] : match_c_internal(t).pairs) marks.push_back({centroid(l), centroid(r)});
    }
    return write_out(out, render_svg(t, style, arrows, marks));
}

int run_example(const std::string& id) {
    if (id != "herdt-arithmetic") {
        std::cerr << "unknown example '" << id << "'; known: herdt-arithmetic\n";
        return 2;
    }
    WorkedExampleReport w = worked_example_arithmetic();
    std::cout << "L = " << rat_to_string(w.L) << "\n";
    std::cout << "N = " << w.N << "\n";
    std::cout << "2*area: " << rat_to_string(w.area_lhs) << " = " << rat_to_string(w.area_rhs) << "\n";
    std::cout << "zh(boundary) = " << rat_to_string(w.zh_boundary_big) << "\n";
    std::cout << "zh(trapezoid) = " << rat_to_string(w.zh_trapezoid) << "\n";
    return w.consistent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tilings of polygons by congruent copies of a triangle with a 2pi/3 angle"};
    app.require_subcommand(1);

    std::string file, out, format = "text", frame_s, tile_s = "3,5,7", kind, region_s, gamma_s, emit_dir;
    std::string shared_s = "c", prune_s = "angle-census,segment-relation";
    std::string angle_mode_s = "unknown", side_mode_s = "unknown";
    double eps = -1;
    std::optional<double> alpha;
    int n = 1, max_tiles = 0, workers = 1;
    long max_nodes = 0;
    bool mirrored = true, naive = false, matching = false;
    RenderStyle style;

    auto add_eps = [&](CLI::App* sc) { sc->add_option("--eps", eps, "snap tolerance (default: TRITILE_EPS or 1e-9)"); };

    CLI::App* validate = app.add_subcommand("validate", "check a tiling file, report size");
    validate->add_option("file", file, "tiling JSON")->required();
    add_eps(validate);

    CLI::App* analyze = app.add_subcommand("analyze", "census, graphs, relations, verdict");
    analyze->add_option("file", file, "tiling JSON")->required();
    analyze->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--out", out, "write the report here instead of stdout");
    add_eps(analyze);

    CLI::App* zh = app.add_subcommand("zh", "signed-length invariant report as JSON");
    zh->add_option("file", file, "tiling JSON")->required();
    zh->add_option("--frame", frame_s, "reference direction class 'j,k'");
    zh->add_option("--out", out, "write the report here instead of stdout");
    add_eps(zh);

    CLI::App* generate = app.add_subcommand("generate", "construct a canonical tiling");
    generate->add_option("--kind", kind, "quadratic|kite|parallelogram|appendix|ring")->required();
    generate->add_option("--n", n, "size for quadratic (n^2 tiles) and ring");
    generate->add_option("--tile", tile_s, "sides 'a,b,c' (default 3,5,7)");
    generate->add_option("--frame", frame_s, "orientation class 'j,k'");
    generate->add_option("--shared", shared_s, "shared side for parallelogram: a|b|c")
        ->check(CLI::IsMember({"a", "b", "c"}));
    generate->add_option("--angle-mode", angle_mode_s, "incommensurable|commensurable|unknown")
        ->check(CLI::IsMember({"incommensurable", "commensurable", "unknown"}));
    generate->add_option("--side-mode", side_mode_s, "commensurable|incommensurable|unknown")
        ->check(CLI::IsMember({"incommensurable", "commensurable", "unknown"}));
    generate->add_option("--out", out, "write the tiling here instead of stdout");

    CLI::App* sawtooth = app.add_subcommand("sawtooth", "append one tooth per boundary c edge");
    sawtooth->add_option("file", file, "tiling JSON with an all-c boundary")->required();
    sawtooth->add_option("--out", out, "write the augmented tiling here instead of stdout");
    add_eps(sawtooth);

    CLI::App* search = app.add_subcommand("search", "enumerate tilings of a region");
    search->add_option("--tile", tile_s, "sides 'a,b,c' (default 3,5,7)");
    search->add_option("--alpha", alpha, "alpha in radians (checked against the sides)");
    search->add_option("--region", region_s, "polygon file or kite|parallelogram|triangle:N|equilateral:X")
        ->required();
    search->add_option("--max-tiles", max_tiles, "depth cap, 0 = none");
    search->add_flag("--mirrored,!--no-mirrored", mirrored, "allow reflected copies (default on)");
    search->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    search->add_option("--max-nodes", max_nodes, "node budget, 0 = none");
    search->add_option("--prune", prune_s, "comma list of rules, or 'none'");
    search->add_flag("--naive", naive, "reference enumeration: no pruning, every gap slot");
    search->add_option("--angle-mode", angle_mode_s, "incommensurable|commensurable|unknown")
        ->check(CLI::IsMember({"incommensurable", "commensurable", "unknown"}));
    search->add_option("--side-mode", side_mode_s, "commensurable|incommensurable|unknown")
        ->check(CLI::IsMember({"incommensurable", "commensurable", "unknown"}));
    search->add_option("--emit", emit_dir, "write each tiling into this directory");
    search->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    search->add_option("--out", out, "write the report here instead of stdout");
    add_eps(search);

    CLI::App* render = app.add_subcommand("render", "draw a tiling as SVG");
    render->add_option("file", file, "tiling JSON")->required();
    render->add_option("--out", out, "write the SVG here instead of stdout");
    render->add_option("--scale", style.scale, "pixels per length unit");
    render->add_flag("--segments", style.segment_overlay, "overlay maximal-segment carriers");
    render->add_option("--gamma", gamma_s, "overlay graph links for label a|b|c as arrows");
    render->add_flag("--matching", matching, "overlay c-edge matching pairs");
    add_eps(render);

    CLI::App* example = app.add_subcommand("example", "built-in worked computations");
    example->add_option("id", file, "example id (herdt-arithmetic)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) return run_validate(file, eps);
        if (*analyze) return run_analyze(file, eps, format, out);
        if (*zh) return run_zh(file, eps, frame_s, out);
        if (*generate) {
            TileSpec spec = parse_tile(tile_s, std::nullopt, angle_mode_from_string(angle_mode_s),
                                       side_mode_from_string(side_mode_s));
            AngleClass frame = frame_s.empty() ? angle_class(0, 0) : parse_class(frame_s, "--frame");
            return run_generate(kind, n, spec, frame, side_from_char(shared_s[0]), out);
        }
        if (*sawtooth) return run_sawtooth(file, eps, out);
        if (*search) {
            SearchConfig cfg;
            cfg.spec = parse_tile(tile_s, alpha, angle_mode_from_string(angle_mode_s),
                                  side_mode_from_string(side_mode_s));
            cfg.region = region_from_arg(region_s, cfg.spec);
            cfg.max_tiles = max_tiles;
            cfg.allow_mirrored = mirrored;
            cfg.pruning = parse_prunes(prune_s);
            cfg.worker_count = workers;
            cfg.max_nodes = max_nodes;
            cfg.eps = eps;
            return run_search(cfg, naive, emit_dir, format, out);
        }
        if (*render) return run_render(file, eps, style, gamma_s, matching, out);
        if (*example) return run_example(file);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const TilingError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
