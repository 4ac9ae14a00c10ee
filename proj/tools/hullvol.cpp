#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hullvol/bodyspec.hpp"
#include "hullvol/errors.hpp"
#include "hullvol/search2d.hpp"
#include "hullvol/verify.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace hullvol;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HULLVOL_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ParseError("HULLVOL_SEED is not an integer");
        }
    }
    return 1;
}

std::string config_hash(const std::string& canonical) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0')
       << std::hash<std::string>{}(canonical);
    return ss.str();
}

std::string fmt15(double v) {
    std::ostringstream ss;
    ss << std::setprecision(15) << v;
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write: " + path);
    out << text;
}

json maximizer_json(const FunctionalValue& fv) {
    json m;
    if (const auto* d = std::get_if<Direction>(&fv.maximizer)) {
        m["type"] = "direction";
        m["x"] = rational_to_string(d->x());
        m["y"] = rational_to_string(d->y());
    } else if (const auto* idx = std::get_if<std::size_t>(&fv.maximizer)) {
        m["type"] = "vertex";
        m["index"] = *idx;
    } else if (const auto* line = std::get_if<SupportLine>(&fv.maximizer)) {
        m["type"] = "supporting_line";
        m["angle"] = line->angle;
        m["offset"] = line->offset;
    }
    return m;
}

json functional_json(const FunctionalValue& fv) {
    json r;
    r["value"] = fv.value;
    r["exact"] = fv.exact;
    if (fv.exact) r["exact_value"] = rational_to_string(fv.exact_value);
    r["maximizer"] = maximizer_json(fv);
    return r;
}

json dir_opt_json(const nd::DirOptResult& r) {
    json j;
    j["value"] = r.value;
    j["direction"] = r.direction;
    j["samples_used"] = r.samples_used;
    j["refined"] = r.refined;
    return j;
}

void describe(std::ostream& os, const FunctionalValue& fv) {
    os << fv.value;
    if (fv.exact) os << " (exact: " << rational_to_string(fv.exact_value) << ")";
    if (const auto* d = std::get_if<Direction>(&fv.maximizer))
        os << ", maximizer direction (" << rational_to_string(d->x()) << ", "
           << rational_to_string(d->y()) << ")";
    else if (const auto* idx = std::get_if<std::size_t>(&fv.maximizer))
        os << ", maximizer vertex " << *idx;
    else if (const auto* line = std::get_if<SupportLine>(&fv.maximizer))
        os << ", maximizer supporting line at angle " << line->angle;
    os << "\n";
}

std::string render_csv(const std::vector<std::pair<double, double>>& samples) {
    std::ostringstream ss;
    ss << "theta,f\n";
    for (const auto& [t, f] : samples) ss << fmt15(t) << "," << fmt15(f) << "\n";
    return ss.str();
}

std::string render_svg(const std::vector<std::pair<double, double>>& samples) {
    const double w = 800, h = 600, ml = 70, mr = 20, mt = 20, mb = 50;
    double fmin = samples[0].second, fmax = samples[0].second;
    for (const auto& [t, f] : samples) {
        fmin = std::min(fmin, f);
        fmax = std::max(fmax, f);
    }
    double pad = (fmax - fmin) * 0.05 + 1e-12;
    fmin -= pad;
    fmax += pad;
    double tmin = samples.front().first, tmax = samples.back().first;
    auto px = [&](double t) { return ml + (t - tmin) / (tmax - tmin + 1e-300) * (w - ml - mr); };
    auto py = [&](double f) { return h - mb - (f - fmin) / (fmax - fmin) * (h - mt - mb); };
    std::ostringstream ss;
    ss << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" "
          "width=\"800\" height=\"600\">\n"
       << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
       << h - mb << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << (w / 2) << "\" y=\"" << h - 12
       << "\" text-anchor=\"middle\" font-size=\"14\">theta</text>\n"
       << "<text x=\"18\" y=\"" << (h / 2)
       << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
       << (h / 2) << ")\">f(theta)</text>\n"
       << "<text x=\"" << ml - 6 << "\" y=\"" << py(fmin + pad)
       << "\" text-anchor=\"end\" font-size=\"12\">" << fmt15(fmin + pad) << "</text>\n"
       << "<text x=\"" << ml - 6 << "\" y=\"" << py(fmax - pad)
       << "\" text-anchor=\"end\" font-size=\"12\">" << fmt15(fmax - pad) << "</text>\n"
       << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& [t, f] : samples) ss << px(t) << "," << py(f) << " ";
    ss << "\"/>\n</svg>\n";
    return ss.str();
}

struct CommonOpts {
    std::string body_file;
    std::string functional;
    int m = 5;
    int restarts = 20;
    std::uint64_t seed = default_seed();
    double tol = 1e-9;
    int samples = 256;
    std::string out;
    std::string format;
    int jobs = 1;
};

void finish(json& report, const std::string& canonical,
            std::chrono::steady_clock::time_point t0, const CommonOpts& o) {
    report["config_hash"] = config_hash(canonical);
    report["seed"] = o.seed;
    report["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.format == "json") std::cout << report.dump(2) << "\n";
    if (!o.out.empty() && o.format != "csv" && o.format != "svg")
        write_text(o.out, report.dump(2) + "\n");
}

int cmd_compute(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    BodySpec spec = parse_body_file(o.body_file);
    json report;
    report["command"] = "compute";
    report["body"] = spec.kind;
    report["functional"] = o.functional;
    if (spec.approx_error > 0) report["vertex_approx_tol"] = spec.approx_error;

    const bool human = o.format != "json";
    std::string functional = o.functional;
    if (spec.polygon) {
        if (functional == "chyp") {
            if (human) std::cout << "note: chyp on a planar body is c1; computing c1\n";
            functional = "c1";
        }
        if (functional == "ctr" || functional == "c0" || functional == "c1") {
            FunctionalValue fv = functional == "ctr" ? c_tr(*spec.polygon)
                                 : functional == "c0"
                                     ? c_0(*spec.polygon)
                                     : c_1(*spec.polygon, o.tol > 0 ? o.tol : 1e-9);
            if (human) {
                std::cout << functional << " = ";
                describe(std::cout, fv);
            }
            report["result"] = functional_json(fv);
        } else if (functional == "cylinder") {
            std::vector<nd::VecN> pts;
            for (std::size_t i = 0; i < spec.polygon->size(); ++i)
                pts.push_back({to_double((*spec.polygon)[i].x), to_double((*spec.polygon)[i].y)});
            auto cc = nd::cylinder_check(nd::make_polytope(2, std::move(pts)),
                                         {.seed = o.seed});
            if (human)
                std::cout << "cylinder max ratio = " << cc.max_right.value
                          << ", min ratio = " << cc.min_right.value << "\n";
            report["result"] = {{"max_right", dir_opt_json(cc.max_right)},
                                {"min_right", dir_opt_json(cc.min_right)}};
        } else {
            throw CLI::ValidationError("--functional", "unknown functional " + functional);
        }
    } else {
        const nd::BodyN& b = *spec.body;
        nd::DirOptions opts{.tol = o.tol > 0 ? std::min(o.tol, 1e-4) : 1e-7, .seed = o.seed};
        if (functional == "ctr") {
            auto r = nd::c_tr_nd(b, opts);
            if (human) std::cout << "ctr = " << r.value << "\n";
            report["result"] = dir_opt_json(r);
        } else if (functional == "c0") {
            auto r = nd::c_0_nd(b, opts);
            if (human) std::cout << "c0 = " << r.value << "\n";
            report["result"] = dir_opt_json(r);
        } else if (functional == "chyp") {
            auto r = nd::c_hyp_nd(b, opts);
            if (human) std::cout << "chyp = " << r.value << "\n";
            report["result"] = dir_opt_json(r);
        } else if (functional == "cylinder") {
            auto cc = nd::cylinder_check(b, opts);
            if (human)
                std::cout << "cylinder max ratio = " << cc.max_right.value
                          << ", min ratio = " << cc.min_right.value << "\n";
            report["result"] = {{"max_right", dir_opt_json(cc.max_right)},
                                {"min_right", dir_opt_json(cc.min_right)}};
        } else if (functional == "c1") {
            throw CLI::ValidationError("--functional", "c1 is planar; use chyp for solids");
        } else {
            throw CLI::ValidationError("--functional", "unknown functional " + functional);
        }
    }
    finish(report, "compute|" + o.body_file + "|" + o.functional + "|" +
                       std::to_string(o.seed) + "|" + std::to_string(o.tol),
           t0, o);
    return kExitOk;
}

int cmd_search(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    SearchConfig cfg;
    cfg.m = o.m;
    cfg.restarts = o.restarts;
    cfg.seed = o.seed;
    if (o.tol > 0) cfg.tol = o.tol;
    if (o.functional == "tr" || o.functional == "ctr")
        cfg.functional = Functional2D::tr;
    else if (o.functional == "c0")
        cfg.functional = Functional2D::c0;
    else if (o.functional == "c1")
        cfg.functional = Functional2D::c1;
    else
        throw CLI::ValidationError("--functional", "search supports tr, c0, c1");

    if (cfg.m >= 6)
        std::cout << "note: experimental values only, no acceptance claim (open problem)\n";
    SearchResult res = minimize_functional(cfg);
    std::cout << "best " << o.functional << " over " << cfg.m << "-gons: " << res.value
              << " (regularity deviation " << res.regularity << ")\n";
    for (const auto& r : res.per_restart)
        std::cout << "  restart seed " << r.seed << ": " << r.value << "\n";

    json report;
    report["command"] = "search";
    report["m"] = cfg.m;
    report["functional"] = o.functional;
    report["restarts"] = cfg.restarts;
    report["value"] = res.value;
    report["regularity_deviation"] = res.regularity;
    json verts = json::array();
    for (std::size_t i = 0; i < res.best.size(); ++i)
        verts.push_back({rational_to_string(res.best[i].x), rational_to_string(res.best[i].y)});
    report["best_polygon"] = {{"kind", "polygon"}, {"vertices", verts}};
    json per = json::array();
    for (const auto& r : res.per_restart) per.push_back({{"seed", r.seed}, {"value", r.value}});
    report["per_restart"] = per;
    if (!o.out.empty()) write_text(o.out, report["best_polygon"].dump(2) + "\n");
    CommonOpts o2 = o;
    o2.out = "";  // --out already used for the body file
    finish(report, "search|" + std::to_string(cfg.m) + "|" + o.functional + "|" +
                       std::to_string(cfg.restarts) + "|" + std::to_string(cfg.seed),
           t0, o2);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> suites;
    if (suite == "all")
        suites = verify_suite_names();
    else
        suites.push_back(suite);
    json report;
    report["command"] = "verify";
    report["suite"] = suite;
    json checks = json::array();
    bool all_pass = true;
    for (const auto& s : suites) {
        for (const auto& c : verify_suite(s)) {
            all_pass &= c.pass;
            std::cout << (c.pass ? "PASS" : "FAIL") << "  [" << s << "] " << c.name
                      << "  measured=" << fmt15(c.measured) << " expected=" << fmt15(c.expected);
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
            checks.push_back({{"suite", s},
                              {"name", c.name},
                              {"pass", c.pass},
                              {"measured", c.measured},
                              {"expected", c.expected},
                              {"detail", c.detail}});
        }
    }
    report["checks"] = checks;
    report["all_pass"] = all_pass;
    finish(report, "verify|" + suite, t0, o);
    return all_pass ? kExitOk : kExitVerify;
}

int cmd_profile(const CommonOpts& o) {
    auto t0 = std::chrono::steady_clock::now();
    BodySpec spec = parse_body_file(o.body_file);
    if (!spec.polygon) throw ParseError("profile needs a planar body");
    auto samples = profile_tr(*spec.polygon, o.samples);
    std::string fmt = o.format.empty() ? "csv" : o.format;
    std::string artifact = fmt == "svg" ? render_svg(samples) : render_csv(samples);
    if (!o.out.empty() && (fmt == "csv" || fmt == "svg"))
        write_text(o.out, artifact);
    else if (fmt != "json")
        std::cout << artifact;
    json report;
    report["command"] = "profile";
    report["body"] = spec.kind;
    report["samples"] = o.samples;
    report["format"] = fmt;
    if (fmt == "json") {
        json arr = json::array();
        for (const auto& [t, f] : samples) arr.push_back({{"theta", t}, {"f", f}});
        report["profile"] = arr;
    }
    CommonOpts o2 = o;
    o2.format = fmt;
    if (fmt != "json") o2.out = "";  // --out already holds the csv/svg artifact
    finish(report, "profile|" + o.body_file + "|" + std::to_string(o.samples) + "|" + fmt, t0,
           o2);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex hull volume functionals for convex bodies"};
    app.require_subcommand(1);
    CommonOpts o;
    std::string suite = "all";

    auto add_common = [&](CLI::App* sub, bool body, bool search) {
        if (body) sub->add_option("--body", o.body_file, "body JSON file")->required();
        sub->add_option("--seed", o.seed, "random seed (env HULLVOL_SEED sets the default)");
        sub->add_option("--tol", o.tol, "numeric tolerance");
        sub->add_option("--out", o.out, "output file");
        sub->add_option("--format", o.format, "csv|svg|json")
            ->check(CLI::IsMember({"csv", "svg", "json"}));
        sub->add_option("--jobs", o.jobs, "worker cap")->check(CLI::PositiveNumber);
        if (search) {
            sub->add_option("--m", o.m, "gon count")->check(CLI::Range(3, 64));
            sub->add_option("--restarts", o.restarts, "restart count")
                ->check(CLI::PositiveNumber);
        }
    };

    auto* compute = app.add_subcommand("compute", "evaluate a functional on a body");
    compute->add_option("--functional", o.functional, "ctr|c0|c1|chyp|cylinder")->required();
    add_common(compute, true, false);

    auto* search = app.add_subcommand("search", "minimize a functional over convex m-gons");
    search->add_option("--functional", o.functional, "tr|c0|c1")->required();
    add_common(search, false, true);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "thm1..thm5, corollaries, identities, all")
        ->check(CLI::IsMember(
            {"thm1", "thm2", "thm3", "thm4", "thm5", "corollaries", "identities", "all"}));
    add_common(verify, false, false);

    auto* profile = app.add_subcommand("profile", "sample the chord-width profile of a 2D body");
    profile->add_option("--samples", o.samples, "sample count")->check(CLI::Range(8, 1 << 20));
    add_common(profile, true, false);

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return cmd_compute(o);
        if (search->parsed()) return cmd_search(o);
        if (verify->parsed()) return cmd_verify(suite, o);
        if (profile->parsed()) return cmd_profile(o);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
