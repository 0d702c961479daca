#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgr/involution.hpp"
#include "qgr/quantum_ring.hpp"
#include "qgr/ring_checks.hpp"
#include "qgr/spectrum.hpp"

namespace qgr::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
    CliConfig cfg;
    bool json = false;
    bool use_cache = false;
    std::string cache_dir_flag;
    std::string a, b, c, cls;
    long long j = 1;
    std::string suite = "all";
    std::size_t samples = 1000;
    std::size_t random_classes = 100;
    std::string out_path;
};

void add_ctx(CLI::App* sub, Options& o) {
    sub->add_option("--k", o.cfg.k, "Subspace dimension")->required();
    sub->add_option("--n", o.cfg.n, "Ambient dimension")->required();
    sub->add_flag("--json", o.json, "Emit JSON instead of text");
}

void add_cache(CLI::App* sub, Options& o) {
    sub->add_flag("--cache", o.use_cache, "Read/write the structure-constant cache");
    sub->add_option("--cache-dir", o.cache_dir_flag, "Cache directory (default $QGR_CACHE_DIR or ./.qgr-cache)");
}

GrassmannianPtr make_ctx(const CliConfig& cfg) {
    if (cfg.k < 1 || cfg.n <= cfg.k)
        throw std::invalid_argument("need 1 <= k < n, got k=" + std::to_string(cfg.k) + " n=" + std::to_string(cfg.n));
    if (!(cfg.tol > 0)) throw std::invalid_argument("--tol must be positive");
    return Grassmannian::make(cfg.k, cfg.n);
}

ordered_json class_json(const CohomClass& a) {
    ordered_json terms = ordered_json::array();
    for (auto [r, c] : a.terms()) terms.push_back(ordered_json{{"p", a.grassmannian().at(r).trimmed()}, {"c", c}});
    return ordered_json{{"terms", std::move(terms)}};
}

void print_class(std::ostream& out, const Options& o, const CohomClass& a) {
    if (o.json)
        out << class_json(a).dump() << "\n";
    else
        out << format_class(a) << "\n";
}

StructureTable cached_table(const GrassmannianPtr& ctx, const std::filesystem::path& dir) {
    const auto path = cache_file(dir, ctx->k(), ctx->n());
    if (std::filesystem::exists(path)) return load_table(ctx, path);
    StructureTable table = build_table(ctx);
    save_table(table, path);
    return table;
}

ordered_json suite_json(const Report& rep) {
    ordered_json j = ordered_json::parse(report_to_json(rep));
    j["failed"] = rep.failures.size();
    return j;
}

int cmd_verify(const Options& o, const GrassmannianPtr& ctx, std::ostream& out) {
    const std::string& s = o.suite;
    if (s != "all" && s != "ring" && s != "involution" && s != "spectrum")
        throw std::invalid_argument("unknown suite '" + s + "' (expected all|ring|involution|spectrum)");
    const std::uint64_t seed = o.cfg.seed;
    std::vector<Report> reports;
    if (s == "all" || s == "ring") {
        reports.push_back(verify_commutativity(ctx));
        reports.push_back(verify_associativity(ctx, o.samples, seed));
        reports.push_back(verify_top_degree(ctx));
        reports.push_back(verify_pieri_consistency(ctx));
        reports.push_back(verify_giambelli(ctx));
        reports.push_back(verify_gw_symmetry(ctx, o.samples, seed));
        reports.push_back(verify_c_operator(ctx));
    }
    if (s == "all" || s == "involution") {
        reports.push_back(verify_involution_structure(ctx));
        reports.push_back(verify_lemma_bar_eq_hat_ck(ctx));
        reports.push_back(verify_theorem1(ctx, SampleMode::exhaustive, seed));
        reports.push_back(verify_eq1_and_for1(ctx));
        reports.push_back(verify_corollary(ctx, o.samples, seed));
    }
    if (s == "all" || s == "spectrum") {
        const SpectralData spec = joint_eigenbasis(ctx, seed, o.cfg.tol);
        const std::vector<CohomClass> probes = probe_classes(ctx, o.random_classes, seed);
        reports.push_back(verify_characters(spec));
        reports.push_back(verify_conjugation(spec));
        reports.push_back(verify_point_conjugation(spec));
        reports.push_back(verify_sympos(spec, probes, o.cfg.tol));
        reports.push_back(verify_vanishing(spec, probes));
    }
    bool ok = true;
    ordered_json doc;
    doc["ctx"] = {{"k", ctx->k()}, {"n", ctx->n()}};
    doc["seed"] = seed;
    doc["suites"] = ordered_json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        doc["suites"].push_back(suite_json(r));
    }
    doc["ok"] = ok;
    out << doc.dump() << "\n";
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

std::filesystem::path cache_file(const std::filesystem::path& dir, int k, int n) {
    return dir / ("qgr-table-k" + std::to_string(k) + "-n" + std::to_string(n) + "-v" + std::to_string(kTableFormat) +
                  ".json");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum cohomology of Grassmannians at q = 1"};
    app.require_subcommand(1);
    Options o;

    auto* mul = app.add_subcommand("mul", "Quantum product of two classes");
    add_ctx(mul, o);
    add_cache(mul, o);
    mul->add_option("--a", o.a, "First factor")->required();
    mul->add_option("--b", o.b, "Second factor")->required();

    auto* bar_cmd = app.add_subcommand("bar", "Apply the involution");
    auto* dual_cmd = app.add_subcommand("dual", "Apply Poincare duality");
    auto* cshift = app.add_subcommand("cshift", "Apply c^j");
    for (auto* sub : {bar_cmd, dual_cmd, cshift}) {
        add_ctx(sub, o);
        sub->add_option("--class", o.cls, "Class: a partition \"2,1\" or a sum \"2*(1) - (2,1)\"")->required();
    }
    cshift->add_option("--j", o.j, "Power of c (default 1)");

    auto* gw = app.add_subcommand("gw", "Three-point invariant <A,B,C> and its curve degree");
    add_ctx(gw, o);
    gw->add_option("--a", o.a)->required();
    gw->add_option("--b", o.b)->required();
    gw->add_option("--c", o.c)->required();

    auto* verify = app.add_subcommand("verify", "Run verification suites; prints a JSON report");
    add_ctx(verify, o);
    verify->add_option("--suite", o.suite, "all|ring|involution|spectrum");
    verify->add_option("--tol", o.cfg.tol, "Residual and positivity tolerance");
    verify->add_option("--seed", o.cfg.seed, "Seed for sampled checks and the spectrum");
    verify->add_option("--samples", o.samples, "Random triples per sampled suite");
    verify->add_option("--random-classes", o.random_classes, "Random integer classes for positivity checks");

    auto* spectrum = app.add_subcommand("spectrum", "Joint eigenbasis as JSON");
    add_ctx(spectrum, o);
    spectrum->add_option("--tol", o.cfg.tol, "Residual tolerance");
    spectrum->add_option("--seed", o.cfg.seed, "Seed for the generic combination");
    spectrum->add_option("--out", o.out_path, "Write to a file instead of stdout");

    auto* table = app.add_subcommand("table", "Build and save the structure-constant table");
    add_ctx(table, o);
    add_cache(table, o);
    table->add_option("--out", o.out_path, "Output file (default: cache file)");

    std::vector<std::string> argv_store{"qgr"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            const auto subs = app.get_subcommands();
            out << (subs.empty() ? app.help() : subs.front()->help());
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    o.cfg.output = o.json ? Output::json : Output::text;
    if (!o.cache_dir_flag.empty()) {
        o.cfg.cache_dir = o.cache_dir_flag;
    } else if (const char* env = std::getenv("QGR_CACHE_DIR"); env && *env) {
        o.cfg.cache_dir = env;
    }

    try {
        const GrassmannianPtr ctx = make_ctx(o.cfg);
        if (mul->parsed()) {
            const CohomClass a = parse_class(ctx, o.a);
            const CohomClass b = parse_class(ctx, o.b);
            if (o.use_cache) {
                const StructureTable t = cached_table(ctx, o.cfg.cache_dir);
                CohomClass prod(ctx);
                for (auto [ra, ca] : a.terms())
                    for (auto [rb, cb] : b.terms()) prod.add_scaled(t.product(ra, rb), checked_mul(ca, cb));
                print_class(out, o, prod);
            } else {
                print_class(out, o, a * b);
            }
        } else if (bar_cmd->parsed()) {
            print_class(out, o, bar(parse_class(ctx, o.cls)));
        } else if (dual_cmd->parsed()) {
            print_class(out, o, dual(parse_class(ctx, o.cls)));
        } else if (cshift->parsed()) {
            print_class(out, o, c_apply(parse_class(ctx, o.cls), o.j));
        } else if (gw->parsed()) {
            const GWRecord rec =
                gw_record(ctx, parse_partition(*ctx, o.a), parse_partition(*ctx, o.b), parse_partition(*ctx, o.c));
            if (o.json) {
                ordered_json j{{"value", rec.value}, {"d", nullptr}};
                if (rec.degree_d) j["d"] = *rec.degree_d;
                out << j.dump() << "\n";
            } else {
                out << "value " << rec.value << ", d " << (rec.degree_d ? std::to_string(*rec.degree_d) : "none")
                    << "\n";
            }
        } else if (verify->parsed()) {
            return cmd_verify(o, ctx, out);
        } else if (spectrum->parsed()) {
            const std::string text = spectrum_to_json(joint_eigenbasis(ctx, o.cfg.seed, o.cfg.tol));
            if (o.out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(o.out_path, std::ios::binary);
                if (!(f << text)) throw std::runtime_error("cannot write " + o.out_path);
            }
        } else if (table->parsed()) {
            const std::filesystem::path path =
                o.out_path.empty() ? cache_file(o.cfg.cache_dir, ctx->k(), ctx->n()) : std::filesystem::path(o.out_path);
            save_table(build_table(ctx), path);
            out << path.string() << "\n";
        }
    } catch (const DegenerateSpectrum& e) {
        err << "degenerate spectrum: " << e.what() << "\n";
        return kDegenerateSpectrum;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}

}  // namespace qgr::cli
