#include "tritile/json_io.hpp"

#include <cmath>
#include <fstream>

namespace tritile {

using nlohmann::json;
using nlohmann::ordered_json;

static ordered_json side_json(double v, const std::optional<Rat>& exact) {
    if (exact) return rat_to_string(*exact);
    return v;
}

nlohmann::ordered_json spec_to_json(const TileSpec& spec) {
    ordered_json j;
    j["alpha"] = spec.alpha;
    j["a"] = side_json(spec.a, spec.a_exact);
    j["b"] = side_json(spec.b, spec.b_exact);
    j["c"] = side_json(spec.c, spec.c_exact);
    j["angle_mode"] = to_string(spec.angle_mode);
    j["side_mode"] = to_string(spec.side_mode);
    return j;
}

static void read_side(const json& j, const char* key, double& v, std::optional<Rat>& exact) {
    if (!j.contains(key)) throw TilingError(ErrKind::ParseError, std::string("spec missing field '") + key + "'");
    const json& f = j.at(key);
    if (f.is_string()) {
        try {
            exact = parse_rat(f.get<std::string>());
        } catch (const std::exception& e) {
            throw TilingError(ErrKind::ParseError, std::string("spec field '") + key + "': " + e.what());
        }
        v = rat_to_double(*exact);
    } else if (f.is_number()) {
        v = f.get<double>();
        exact.reset();
    } else {
        throw TilingError(ErrKind::ParseError, std::string("spec field '") + key + "' must be number or string");
    }
}

TileSpec spec_from_json(const json& j) {
    TileSpec spec;
    read_side(j, "a", spec.a, spec.a_exact);
    read_side(j, "b", spec.b, spec.b_exact);
    read_side(j, "c", spec.c, spec.c_exact);
    if (j.contains("alpha")) {
        if (!j.at("alpha").is_number()) throw TilingError(ErrKind::ParseError, "spec field 'alpha' must be a number");
        spec.alpha = j.at("alpha").get<double>();
    } else {
        double cosa = (spec.b * spec.b + spec.c * spec.c - spec.a * spec.a) / (2 * spec.b * spec.c);
        spec.alpha = std::acos(cosa);
    }
    try {
        if (j.contains("angle_mode")) spec.angle_mode = angle_mode_from_string(j.at("angle_mode").get<std::string>());
        if (j.contains("side_mode")) spec.side_mode = side_mode_from_string(j.at("side_mode").get<std::string>());
    } catch (const std::exception& e) {
        throw TilingError(ErrKind::ParseError, e.what());
    }
    return spec;
}

nlohmann::ordered_json tiling_to_json(const Tiling& t) {
    ordered_json j;
    j["spec"] = spec_to_json(t.spec);
    if (t.region) {
        ordered_json reg = ordered_json::array();
        for (auto v : *t.region) reg.push_back({v.x, v.y});
        j["region"] = reg;
    }
    if (t.fragment_mode) j["fragment"] = true;
    ordered_json tiles = ordered_json::array();
    for (const auto& tile : t.tiles) {
        ordered_json tj;
        tj["anchor"] = {tile.p.anchor.x, tile.p.anchor.y};
        tj["dir"] = {{"j", tile.p.dir.j}, {"k", tile.p.dir.k}};
        tj["chirality"] = tile.mirrored ? "mirrored" : "direct";
        tj["labels_order"] = labels_to_string(tile.p.labels);
        tiles.push_back(tj);
    }
    j["tiles"] = tiles;
    return j;
}

static Vec2 point_from_json(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw TilingError(ErrKind::ParseError, what + " must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Tiling tiling_from_json(const json& j, double eps) {
    if (!j.contains("spec")) throw TilingError(ErrKind::ParseError, "document missing 'spec'");
    TileSpec spec = spec_from_json(j.at("spec"));

    std::optional<std::vector<Vec2>> region;
    if (j.contains("region")) {
        region.emplace();
        for (const auto& p : j.at("region")) region->push_back(point_from_json(p, "region point"));
    }

    BuildOptions opt;
    opt.eps = eps;
    if (j.contains("fragment")) opt.fragment_mode = j.at("fragment").get<bool>();

    if (!j.contains("tiles") || !j.at("tiles").is_array())
        throw TilingError(ErrKind::ParseError, "document missing 'tiles' array");
    std::vector<Placement> placements;
    int id = 0;
    for (const auto& tj : j.at("tiles")) {
        Placement p;
        if (!tj.contains("anchor") || !tj.contains("dir") || !tj.contains("labels_order"))
            throw TilingError(ErrKind::ParseError,
                              "tile " + std::to_string(id) + " needs anchor, dir, labels_order");
        p.anchor = point_from_json(tj.at("anchor"), "tile " + std::to_string(id) + " anchor");
        const json& dj = tj.at("dir");
        if (!dj.contains("j") || !dj.contains("k"))
            throw TilingError(ErrKind::ParseError, "tile " + std::to_string(id) + " dir needs j and k");
        p.dir = angle_class(dj.at("j").get<int>(), dj.at("k").get<int>());
        p.labels = labels_from_string(tj.at("labels_order").get<std::string>());
        if (tj.contains("chirality")) {
            std::string ch = tj.at("chirality").get<std::string>();
            if (ch != "direct" && ch != "mirrored")
                throw TilingError(ErrKind::ParseError,
                                  "tile " + std::to_string(id) + ": chirality must be direct or mirrored");
            if ((ch == "mirrored") != placement_mirrored(p.labels))
                throw TilingError(ErrKind::ParseError, "tile " + std::to_string(id) + ": chirality '" + ch +
                                                           "' contradicts labels_order '" +
                                                           labels_to_string(p.labels) + "'");
        }
        placements.push_back(p);
        id++;
    }
    return build_tiling(spec, placements, region, opt);
}

void save_tiling(const Tiling& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw TilingError(ErrKind::ParseError, "cannot open '" + path + "' for writing");
    out << tiling_to_json(t).dump(2) << "\n";
}

Tiling load_tiling(const std::string& path, double eps) {
    std::ifstream in(path);
    if (!in) throw TilingError(ErrKind::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw TilingError(ErrKind::ParseError, std::string("'") + path + "': " + e.what());
    }
    return tiling_from_json(j, eps);
}

nlohmann::ordered_json symlen_to_json(const SymLen& v) {
    ordered_json j;
    j["a"] = rat_to_string(v.q[0]);
    j["b"] = rat_to_string(v.q[1]);
    j["c"] = rat_to_string(v.q[2]);
    j["text"] = v.to_string();
    return j;
}

static ordered_json angle_class_json(AngleClass x) {
    ordered_json j;
    j["j"] = x.j;
    j["k"] = x.k;
    return j;
}

nlohmann::ordered_json zh_report_to_json(const ZhReport& r, const TileSpec& spec) {
    ordered_json j;
    j["frame"] = angle_class_json(r.frame);
    j["zh_tiling"] = symlen_to_json(r.zh_tiling);
    j["zh_tiling"]["value"] = r.zh_tiling.eval(spec);
    j["zh_boundary"] = symlen_to_json(r.zh_boundary);
    j["zh_boundary"]["value"] = r.zh_boundary.eval(spec);
    j["equal"] = r.zh_tiling == r.zh_boundary;
    ordered_json per = ordered_json::array();
    for (const auto& tz : r.per_tile) {
        ordered_json tj;
        tj["tile"] = tz.tile;
        tj["c_dir"] = angle_class_json(tz.c_dir);
        tj["value"] = symlen_to_json(tz.value);
        per.push_back(tj);
    }
    j["per_tile"] = per;
    return j;
}

nlohmann::ordered_json census_to_json(const VertexCensus& c) {
    ordered_json j;
    j["simple"] = c.simple;
    j["star"] = c.star;
    j["center"] = c.center;
    j["double_star"] = c.double_star;
    j["gamma_star"] = c.gamma_star;
    j["double_simple"] = c.double_simple;
    j["other"] = c.other;
    j["n_alpha"] = c.n_alpha;
    j["n_beta"] = c.n_beta;
    j["n_gamma"] = c.n_gamma;
    return j;
}

static ordered_json degree_map_json(const std::map<int, int>& m) {
    ordered_json j = ordered_json::object();
    for (const auto& [v, d] : m) j[std::to_string(v)] = d;
    return j;
}

nlohmann::ordered_json gamma_graph_to_json(const GammaGraph& g) {
    ordered_json j;
    j["label"] = std::string(1, side_char(g.label));
    ordered_json links = ordered_json::array();
    for (const auto& l : g.links) {
        ordered_json lj;
        lj["tail"] = l.tail;
        lj["head"] = l.head;
        lj["segment"] = l.segment;
        lj["run_on_left"] = l.run_on_left;
        links.push_back(lj);
    }
    j["links"] = links;
    j["in_degree"] = degree_map_json(g.in_degree);
    j["out_degree"] = degree_map_json(g.out_degree);
    return j;
}

nlohmann::ordered_json relation_to_json(const Relation& r) {
    static const char* names[3] = {"a", "b", "c"};
    ordered_json j;
    j["kind"] = names[static_cast<int>(r.kind)];
    j["j"] = r.j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["witness"] = r.witness;
    j["text"] = to_string(r);
    return j;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["applicable"] = v.applicable;
    j["gate_reason"] = v.gate_reason;
    j["ratios"]["a_over_b"] = v.ratios.a_over_b ? ordered_json(rat_to_string(*v.ratios.a_over_b)) : ordered_json(nullptr);
    j["ratios"]["c_over_b"] = v.ratios.c_over_b ? ordered_json(rat_to_string(*v.ratios.c_over_b)) : ordered_json(nullptr);
    j["all_c_boundary"] = v.all_c_boundary;
    j["side_c_counts"] = v.side_c_counts;
    j["corners_equilateral"] = v.corners_equilateral;
    j["corners_2a_2b_pi3"] = v.corners_2a_2b_pi3;
    ordered_json audits = ordered_json::array();
    for (const auto& a : v.audits) {
        ordered_json aj;
        aj["rule"] = a.rule == AuditRule::CAfterPiVertex ? "c-after-pi-vertex" : "a-after-simple-vertex";
        aj["vertex"] = a.vertex;
        aj["carrier"] = a.carrier;
        aj["pass"] = a.pass;
        aj["found_carrier"] = a.found_carrier;
        audits.push_back(aj);
    }
    j["audits"] = audits;
    j["conclusion"] = to_string(v.conclusion);
    return j;
}

nlohmann::ordered_json analysis_report_json(const Tiling& t) {
    ordered_json j;
    j["spec"] = spec_to_json(t.spec);
    j["tiles"] = t.tiles.size();
    j["fragment"] = t.fragment_mode;
    VertexCensus cen = classify_vertices(t);
    long corner = corner_contribution(t);
    j["census"] = census_to_json(cen);
    j["corner_contribution"] = corner;
    j["census_identity"] = census_identity_check(cen, corner);
    ordered_json graphs;
    for (SideLabel s : {SideLabel::A, SideLabel::B, SideLabel::C})
        graphs[std::string(1, side_char(s))] = gamma_graph_to_json(build_gamma_graph(t, s));
    j["graphs"] = graphs;
    ordered_json rels = ordered_json::array();
    for (const auto& r : extract_relations(t)) rels.push_back(relation_to_json(r));
    j["relations"] = rels;
    j["verdict"] = verdict_to_json(commensurability_verdict(t));
    return j;
}

}  // namespace tritile
