// barbilian: command-line front end over the C API.
//
// Every subcommand writes its whole result to stdout in one go: JSON for everything
// except `field`, which writes CSV. Exit codes: 0 ok, 1 usage, 2 precondition,
// 3 convergence, 4 internal.

#include "barbilian/barbilian.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError {
    bb_status status;
    std::string message;
};

void check(bb_status s) {
    if (s != BB_OK) throw ApiError{s, bb_last_error()};
}

// ---- output ----

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    if (std::isnan(v)) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// CSV flavour: bare inf, no quotes.
std::string csv_num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string boolean(bool b) { return b ? "true" : "false"; }

std::string point(bb_point p, bool planar) {
    return planar ? "[" + num(p.x) + ", " + num(p.y) + "]" : "[" + num(p.x) + ", " + num(p.y) + ", " + num(p.z) + "]";
}

std::string point(bb_point2 p) { return "[" + num(p.x) + ", " + num(p.y) + "]"; }

// Ordered JSON object writer; keys appear in insertion order.
class Object {
public:
    Object& add(const std::string& key, const std::string& raw) {
        fields_.emplace_back(key, raw);
        return *this;
    }
    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
            out += (i ? ", \"" : "\"") + fields_[i].first + "\": " + fields_[i].second;
        }
        return out + "}";
    }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

std::string extremum_location(const bb_extremum& e, bool planar) {
    if (e.chart_index < 0) return "null";
    return Object{}
        .add("chart", std::to_string(e.chart_index))
        .add("t", num(e.arg_t))
        .add("point", e.has_point ? point(e.point, planar) : "null")
        .str();
}

// ---- input ----

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
        }
    }
    return out;
}

bb_point2 parse_point2(const std::string& text, const char* what) {
    const auto v = parse_list(text, what);
    if (v.size() != 2) throw UsageError(std::string(what) + " needs two comma-separated numbers");
    return {v[0], v[1]};
}

bb_point parse_point(const std::string& text, const char* what) {
    const auto v = parse_list(text, what);
    if (v.size() != 2 && v.size() != 3) throw UsageError(std::string(what) + " needs x,y or x,y,z");
    return {v[0], v[1], v.size() == 3 ? v[2] : 0.0};
}

bb_metric_mode parse_mode(const std::string& mode) {
    if (mode == "auto") return BB_METRIC_AUTO;
    if (mode == "closed") return BB_METRIC_CLOSED_FORM;
    if (mode == "numeric") return BB_METRIC_NUMERIC;
    throw UsageError("unknown mode '" + mode + "'");
}

struct Common {
    std::string domain;
    double rho = 1.0;
    double l_angle = 0.0;
    double h = 1.0;
    double r_k = 1.0;
    double r_j = 2.0;
    std::string influence = "auto";
    int search_grid = 4096;
    double tol = 1e-12;
    int max_iters = 200;
    std::uint64_t seed = 0;
    bool allow_near_boundary = false;
    std::string config;

    CLI::Option* o_domain = nullptr;
    CLI::Option* o_rho = nullptr;
    CLI::Option* o_l_angle = nullptr;
    CLI::Option* o_h = nullptr;
    CLI::Option* o_r_k = nullptr;
    CLI::Option* o_r_j = nullptr;
    CLI::Option* o_influence = nullptr;
    CLI::Option* o_search_grid = nullptr;
    CLI::Option* o_tol = nullptr;
    CLI::Option* o_max_iters = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_allow = nullptr;

    // Parameter flags that were set explicitly (on the command line or in the config).
    bool set_rho = false, set_l_angle = false, set_h = false, set_r_k = false, set_r_j = false;
};

void register_common(CLI::App& app, Common& c) {
    c.o_domain = app.add_option("--domain", c.domain,
                                "Domain kind (halfplane, quadrant, disk, circle_minus_point, parallel_planes, "
                                "concentric_spheres) or a JSON object such as {\"kind\":\"polyline\",...}");
    c.o_rho = app.add_option("--rho", c.rho, "Disk radius")->capture_default_str();
    c.o_l_angle = app.add_option("--l-angle", c.l_angle, "Angle of the removed point (circle_minus_point)")
                      ->capture_default_str();
    c.o_h = app.add_option("--h", c.h, "Plane gap (parallel_planes)")->capture_default_str();
    c.o_r_k = app.add_option("--r-k", c.r_k, "Boundary sphere radius (concentric_spheres)")->capture_default_str();
    c.o_r_j = app.add_option("--r-j", c.r_j, "Interior sphere radius (concentric_spheres)")->capture_default_str();
    c.o_influence = app.add_option("--influence", c.influence,
                                   "auto (the domain's own), euclidean, exp_projected or exp_spherical")
                        ->capture_default_str();
    c.o_search_grid = app.add_option("--search-grid", c.search_grid, "Grid points per boundary chart in the "
                                                                     "extremum search")
                          ->capture_default_str();
    c.o_tol = app.add_option("--tol", c.tol, "Golden-section refinement tolerance")->capture_default_str();
    c.o_max_iters = app.add_option("--max-iters", c.max_iters, "Refinement iteration cap")->capture_default_str();
    c.o_seed = app.add_option("--seed", c.seed, "Random seed (falls back to $BARBILIAN_SEED, then 0)")
                   ->capture_default_str();
    c.o_allow = app.add_flag("--allow-near-boundary", c.allow_near_boundary,
                             "Let the sampler return points within 1e-3 of the boundary");
    app.add_option("--config", c.config, "JSON file with defaults for the options above; flags win")
        ->check(CLI::ExistingFile);
}

template <class T>
void from_config(const json& cfg, const char* key, CLI::Option* opt, T& value, bool* set = nullptr) {
    if (!cfg.contains(key)) return;
    if (opt->count() > 0) return;
    try {
        value = cfg.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError(std::string("config key '") + key + "' has the wrong type");
    }
    if (set) *set = true;
}

void apply_config(Common& c) {
    c.set_rho = c.o_rho->count() > 0;
    c.set_l_angle = c.o_l_angle->count() > 0;
    c.set_h = c.o_h->count() > 0;
    c.set_r_k = c.o_r_k->count() > 0;
    c.set_r_j = c.o_r_j->count() > 0;
    bool seed_from_config = false;
    if (!c.config.empty()) {
        std::ifstream in(c.config);
        json cfg;
        try {
            cfg = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("cannot parse config: ") + e.what());
        }
        if (!cfg.is_object()) throw UsageError("config must be a JSON object");
        static const char* known[] = {"domain", "rho",         "l_angle", "h",         "r_k",  "r_j",
                                      "influence", "search_grid", "tol",  "max_iters", "seed", "allow_near_boundary"};
        for (const auto& item : cfg.items()) {
            bool ok = false;
            for (const char* k : known) ok = ok || item.key() == k;
            if (!ok) throw UsageError("unknown config key '" + item.key() + "'");
        }
        if (cfg.contains("domain") && c.o_domain->count() == 0) {
            const json& d = cfg["domain"];
            if (d.is_string()) c.domain = d.get<std::string>();
            else if (d.is_object()) c.domain = d.dump();
            else throw UsageError("config key 'domain' must be a string or an object");
        }
        from_config(cfg, "rho", c.o_rho, c.rho, &c.set_rho);
        from_config(cfg, "l_angle", c.o_l_angle, c.l_angle, &c.set_l_angle);
        from_config(cfg, "h", c.o_h, c.h, &c.set_h);
        from_config(cfg, "r_k", c.o_r_k, c.r_k, &c.set_r_k);
        from_config(cfg, "r_j", c.o_r_j, c.r_j, &c.set_r_j);
        from_config(cfg, "influence", c.o_influence, c.influence);
        from_config(cfg, "search_grid", c.o_search_grid, c.search_grid);
        from_config(cfg, "tol", c.o_tol, c.tol);
        from_config(cfg, "max_iters", c.o_max_iters, c.max_iters);
        from_config(cfg, "seed", c.o_seed, c.seed, &seed_from_config);
        from_config(cfg, "allow_near_boundary", c.o_allow, c.allow_near_boundary);
    }
    if (c.o_seed->count() == 0 && !seed_from_config) {
        if (const char* env = std::getenv("BARBILIAN_SEED")) {
            try {
                std::size_t used = 0;
                c.seed = std::stoull(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw UsageError("BARBILIAN_SEED is not an unsigned integer");
            }
        }
    }
}

std::string domain_json(const Common& c) {
    if (c.domain.empty()) throw UsageError("--domain is required");
    if (c.domain.front() == '{') return c.domain;
    json obj{{"kind", c.domain}};
    if (c.set_rho) obj["rho"] = c.rho;
    if (c.set_l_angle) obj["l_angle"] = c.l_angle;
    if (c.set_h) obj["h"] = c.h;
    if (c.set_r_k) obj["r_k"] = c.r_k;
    if (c.set_r_j) obj["r_j"] = c.r_j;
    return obj.dump();
}

class DomainHandle {
public:
    explicit DomainHandle(const std::string& text) { check(bb_domain_from_json(text.c_str(), &d_)); }
    ~DomainHandle() { bb_domain_free(d_); }
    DomainHandle(const DomainHandle&) = delete;
    DomainHandle& operator=(const DomainHandle&) = delete;
    const bb_domain* get() const { return d_; }

private:
    bb_domain* d_ = nullptr;
};

bb_influence influence(const Common& c) {
    if (c.influence == "auto") return BB_INFLUENCE_DEFAULT;
    bb_influence out{};
    if (bb_influence_from_name(c.influence.c_str(), &out) != BB_OK) throw UsageError(bb_last_error());
    return out;
}

bb_search_options search(const Common& c) {
    bb_search_options o;
    bb_search_options_default(&o);
    o.grid_points_per_chart = c.search_grid;
    o.refine_tol = c.tol;
    o.max_refine_iters = c.max_iters;
    return o;
}

// ---- subcommands ----

struct DistArgs {
    std::string a, b;
};

std::string run_dist(const Common& c, const DistArgs& args) {
    const DomainHandle d(domain_json(c));
    const bool planar = bb_domain_is_planar(d.get());
    const bb_search_options opts = search(c);
    bb_distance_result r{};
    check(bb_distance(d.get(), influence(c), parse_point(args.a, "--a"), parse_point(args.b, "--b"), &opts, &r));
    return Object{}
               .add("distance", num(r.distance))
               .add("sup", num(r.sup.value))
               .add("inf", num(r.inf.value))
               .add("sup_attained", boolean(r.sup.attained))
               .add("inf_attained", boolean(r.inf.attained))
               .add("argmax", extremum_location(r.sup, planar))
               .add("argmin", extremum_location(r.inf, planar))
               .str() +
           "\n";
}

std::string run_axioms(const Common& c, std::int64_t triples) {
    if (triples < 1) throw UsageError("--triples must be >= 1");
    const DomainHandle d(domain_json(c));
    const bool planar = bb_domain_is_planar(d.get());
    const bb_search_options opts = search(c);
    bb_axiom_report r{};
    check(bb_check_axioms(d.get(), influence(c), triples, c.seed, c.allow_near_boundary, &opts, &r));
    const std::string worst = "[" + point(r.worst_triple[0], planar) + ", " + point(r.worst_triple[1], planar) + ", " +
                              point(r.worst_triple[2], planar) + "]";
    return Object{}
               .add("n_samples", std::to_string(r.n_samples))
               .add("max_symmetry_violation", num(r.max_symmetry_violation))
               .add("max_triangle_violation", num(r.max_triangle_violation))
               .add("max_identity_violation", num(r.max_identity_violation))
               .add("worst_triple", worst)
               .str() +
           "\n";
}

struct FieldArgs {
    int grid = 11;
    std::string bbox;
    std::string direction = "1,0";
    std::string mode = "auto";
};

std::string run_field(const Common& c, const FieldArgs& args) {
    if (args.grid < 2) throw UsageError("--grid must be >= 2");
    const auto box = parse_list(args.bbox, "--bbox");
    if (box.size() != 4) throw UsageError("--bbox needs xmin,xmax,ymin,ymax");
    if (!(box[0] < box[1]) || !(box[2] < box[3])) throw UsageError("--bbox needs xmin < xmax and ymin < ymax");
    const bb_point2 dir = parse_point2(args.direction, "--direction");
    const bb_metric_mode mode = parse_mode(args.mode);
    const DomainHandle d(domain_json(c));

    std::string out = "x,y,m,R_plus,R_minus,lambda,g11,g12,g22\n";
    const int n = args.grid;
    for (int j = 0; j < n; ++j) {
        const double y = box[2] + (box[3] - box[2]) * j / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = box[0] + (box[1] - box[0]) * i / (n - 1);
            int inside = 0;
            check(bb_domain_contains(d.get(), {x, y, 0.0}, &inside));
            if (!inside) {
                out += "# skipped " + csv_num(x) + "," + csv_num(y) + "\n";
                continue;
            }
            bb_metric_sample s{};
            check(bb_metric_at(d.get(), {x, y}, dir, mode, &s));
            const double m = s.dx == 0.0 ? INFINITY : s.dy / s.dx;
            out += csv_num(x) + "," + csv_num(y) + "," + csv_num(m) + "," + csv_num(s.r_plus) + "," +
                   csv_num(s.r_minus) + "," + csv_num(s.lambda) + "," + csv_num(s.g11) + "," + csv_num(s.g12) + "," +
                   csv_num(s.g22) + "\n";
        }
    }
    return out;
}

std::string run_curvature(const Common& c, const std::string& at, double step) {
    if (step < 0.0) throw UsageError("--step must be >= 0");
    const DomainHandle d(domain_json(c));
    bb_curvature_sample s{};
    check(bb_curvature_at(d.get(), parse_point2(at, "--at"), step, &s));
    return Object{}.add("point", point(s.point)).add("step_h", num(s.step_h)).add("kappa", num(s.kappa)).str() + "\n";
}

struct TangentArgs {
    std::string at;
    double slope = 0.0;
    std::string dir;
    std::string mode = "auto";
};

std::string run_tangent(const Common& c, const TangentArgs& args, bool have_slope) {
    bb_point2 dir{1.0, args.slope};
    if (!have_slope) {
        if (args.dir.empty()) throw UsageError("tangent needs --slope or --dir");
        dir = parse_point2(args.dir, "--dir");
    }
    const DomainHandle d(domain_json(c));
    bb_tangent_circles t{};
    check(bb_tangent_circles_at(d.get(), parse_point2(args.at, "--at"), dir, parse_mode(args.mode), &t));
    auto opt = [](int has, bb_point2 p) { return has ? point(p) : std::string("null"); };
    return Object{}
               .add("R_plus", num(t.r_plus))
               .add("R_minus", num(t.r_minus))
               .add("center_plus", opt(t.has_plus, t.center_plus))
               .add("center_minus", opt(t.has_minus, t.center_minus))
               .add("tangency_plus", opt(t.has_plus, t.tangency_plus))
               .add("tangency_minus", opt(t.has_minus, t.tangency_minus))
               .str() +
           "\n";
}

std::string run_lagrange(const std::string& at, const std::string& dir, double step) {
    if (step < 0.0) throw UsageError("--step must be >= 0");
    bb_lagrange_report r{};
    check(bb_lagrange_check(parse_point2(at, "--at"), parse_point2(dir, "--dir"), step, &r));
    return Object{}
               .add("dg11_dydot", num(r.dg11_dydot))
               .add("dg12_dxdot", num(r.dg12_dxdot))
               .add("symmetric", boolean(r.symmetric))
               .add("homogeneity_deviation", num(r.homogeneity_deviation))
               .add("positive_definite", boolean(r.positive_definite))
               .str() +
           "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Barbilian distances, induced metrics and their checks on planar and 3-D domains"};
    app.set_help_flag("--help", "Print this help message and exit"); // -h would clash with --h
    app.set_version_flag("--version", bb_version());
    app.require_subcommand(1, 1);
    app.fallthrough();

    Common common;
    register_common(app, common);

    DistArgs dist;
    auto* dist_cmd = app.add_subcommand("dist", "Distance between two points of J");
    dist_cmd->add_option("--a", dist.a, "First point, x,y (or x,y,z on 3-D domains)")->required();
    dist_cmd->add_option("--b", dist.b, "Second point")->required();

    std::int64_t triples = 500;
    auto* axioms_cmd = app.add_subcommand("axioms", "Sampled symmetry / triangle / identity check");
    axioms_cmd->add_option("--triples", triples, "Number of seeded triples")->capture_default_str();

    FieldArgs field;
    auto* field_cmd = app.add_subcommand("field", "Induced metric on a grid, as CSV");
    field_cmd->add_option("--grid", field.grid, "Points per axis (>= 2)")->capture_default_str();
    field_cmd->add_option("--bbox", field.bbox, "xmin,xmax,ymin,ymax")->required();
    field_cmd->add_option("--direction", field.direction, "Direction dx,dy")->capture_default_str();
    field_cmd->add_option("--mode", field.mode, "auto, closed or numeric tangent circles")->capture_default_str();

    std::string curv_at;
    double curv_step = 0.0;
    auto* curv_cmd = app.add_subcommand("curvature", "Gaussian curvature of the induced metric");
    curv_cmd->add_option("--at", curv_at, "Point x,y")->required();
    curv_cmd->add_option("--step", curv_step, "Stencil step; 0 selects 1e-3 * dist(at, K)")->capture_default_str();

    TangentArgs tangent;
    auto* tangent_cmd = app.add_subcommand("tangent", "The two circles tangent to a line at a point and to K");
    tangent_cmd->add_option("--at", tangent.at, "Point x,y")->required();
    auto* slope_opt = tangent_cmd->add_option("--slope", tangent.slope, "Line slope m");
    auto* dir_opt = tangent_cmd->add_option("--dir", tangent.dir, "Line direction dx,dy (allows vertical lines)");
    slope_opt->excludes(dir_opt);
    tangent_cmd->add_option("--mode", tangent.mode, "auto, closed or numeric")->capture_default_str();

    std::string lag_at, lag_dir;
    double lag_step = 0.0;
    auto* lag_cmd = app.add_subcommand("lagrange-check", "Cartan symmetry, homogeneity and positivity of the "
                                                         "quadrant metric");
    lag_cmd->add_option("--at", lag_at, "Point x,y in the open quadrant")->required();
    lag_cmd->add_option("--dir", lag_dir, "Velocity xdot,ydot with xdot > 0")->required();
    lag_cmd->add_option("--step", lag_step, "Difference step; 0 selects 1e-5 * |v|")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BB_ERR_USAGE;
    }

    try {
        apply_config(common);
        std::string out;
        if (*dist_cmd) out = run_dist(common, dist);
        else if (*axioms_cmd) out = run_axioms(common, triples);
        else if (*field_cmd) out = run_field(common, field);
        else if (*curv_cmd) out = run_curvature(common, curv_at, curv_step);
        else if (*tangent_cmd) out = run_tangent(common, tangent, slope_opt->count() > 0);
        else if (*lag_cmd) out = run_lagrange(lag_at, lag_dir, lag_step);
        std::fwrite(out.data(), 1, out.size(), stdout);
        return 0;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return BB_ERR_USAGE;
    } catch (const ApiError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.status;
    }
}
