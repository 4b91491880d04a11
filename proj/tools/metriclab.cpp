// metriclab: analyses of finite metric spaces, their covers, and the packaged
// example constructions. One subcommand per analysis family; JSON or text
// reports on stdout. Exit codes: 0 success, 1 domain violations or failed
// expectations, 2 input or usage errors.

#include <chrono>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include <metriclab/io.hpp>

namespace ml = metriclab;

namespace {

struct Outcome {
    ml::json results;
    std::string text;
    std::string status = "ok";
    int exit_code = 0;
};

ml::PointSet parse_index_list(const std::string& csv) {
    ml::PointSet out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad index: " + token);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty index list");
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad number: " + token);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty number list");
    return out;
}

std::string fmt(double v) { return ml::detail::shortest_decimal(v); }

std::string join_points(const ml::PointSet& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
    return s;
}

// ---------------------------------------------------------------------------

Outcome run_validate(const std::string& space_file) {
    Outcome o;
    try {
        auto s = ml::load_space(space_file);
        o.results = ml::json{{"axiom_tol", ml::num_json(s.axiom_tol())},
                             {"n", s.n()},
                             {"ok", true},
                             {"violations", ml::json::array()}};
        o.text = "ok: " + std::to_string(s.n()) + " points, axiom_tol " + fmt(s.axiom_tol());
    } catch (const ml::MetricError& e) {
        o.results = ml::json{{"ok", false}, {"violations", ml::to_json(e.violations)}};
        o.text = std::string("metric violations: ") + e.what();
        o.status = "violations";
        o.exit_code = 1;
    }
    return o;
}

Outcome run_chains(const ml::FiniteMetricSpace& s, bool want_threshold, bool want_components,
                   const std::vector<int>& pair, double eps, bool eps_set) {
    Outcome o;
    const int modes = int(want_threshold) + int(want_components) + int(!pair.empty());
    if (modes != 1) throw std::invalid_argument("pick exactly one of --pair, --components, --threshold");
    if (want_threshold) {
        double t = ml::chainability_threshold(s);
        o.results = ml::json{{"threshold", ml::num_json(t)}};
        o.text = "threshold: " + fmt(t);
        return o;
    }
    if (!eps_set) throw std::invalid_argument("--eps is required for --pair and --components");
    if (want_components) {
        auto parts = ml::eps_components(s, eps);
        o.results = ml::components_json(parts);
        o.text = std::to_string(parts.size()) + " components at eps " + fmt(eps);
        return o;
    }
    auto chain = ml::eps_chain(s, pair[0], pair[1], eps);
    o.results = ml::json{{"connected", chain.has_value()}, {"chain", chain ? ml::to_json(*chain) : ml::json(nullptr)}};
    o.text = chain ? "chain of length " + std::to_string(chain->length()) + ": " + join_points(chain->points)
                   : "no chain at eps " + fmt(eps);
    return o;
}

Outcome run_nets(const ml::FiniteMetricSpace& s, const std::string& eps_csv, const std::string& target_csv) {
    Outcome o;
    auto eps_list = parse_double_list(eps_csv);
    ml::PointSet target = target_csv.empty() ? ml::detail::all_points(s) : parse_index_list(target_csv);
    auto profile = ml::covering_profile(s, target, eps_list);
    ml::json prof = ml::json::array();
    ml::json nets = ml::json::array();
    ml::json separated = ml::json::array();
    for (const auto& [eps, entry] : profile) {
        prof.push_back(ml::json{{"eps", ml::num_json(eps)},
                                {"net_size", entry.net_size},
                                {"packing_size", entry.packing_size}});
        nets.push_back(ml::to_json(ml::greedy_eps_net(s, target, eps)));
        separated.push_back(ml::to_json(ml::max_separated_subset(s, target, eps)));
    }
    o.results = ml::json{{"nets", std::move(nets)}, {"profile", prof}, {"separated", std::move(separated)}};
    o.text = "eps: net_size / packing_size";
    for (const auto& row : prof)
        o.text += "\n" + ml::num_json(row["eps"]).dump() + ": " + row["net_size"].dump() + " / " +
                  row["packing_size"].dump();
    return o;
}

Outcome run_cover(const ml::FiniteMetricSpace& s, const std::optional<ml::Cover>& cover, bool want_lebesgue,
                  double local_finite_delta, const std::string& subcover_csv, double adversarial_eps) {
    Outcome o;
    if (adversarial_eps > 0) {
        auto witness = ml::max_separated_subset(s, ml::detail::all_points(s), adversarial_eps);
        if (witness.indices.size() < 2)
            throw std::invalid_argument("no separated pair at eps " + fmt(adversarial_eps));
        auto adv = ml::adversarial_cover(s, witness);
        o.results = ml::json{{"cover", ml::cover_to_json(adv)}, {"witness", ml::to_json(witness)}};
        o.text = "adversarial cover: " + std::to_string(witness.indices.size()) + " witness balls + complement";
        return o;
    }
    if (!cover) throw std::invalid_argument("--cover is required");
    if (want_lebesgue) {
        if (auto unc = ml::covers_check(s, *cover)) {
            o.results = ml::json{{"covered", false}, {"uncovered", *unc}};
            o.text = "not a cover of the target: point " + std::to_string(*unc) + " uncovered";
            o.status = "violations";
            o.exit_code = 1;
            return o;
        }
        auto rep = ml::lebesgue_exact(s, *cover);
        o.results = ml::to_json(rep);
        o.text = rep.complete ? "ball_bound " + fmt(rep.ball_bound) + ", exact " + fmt(rep.exact)
                              : "ball_bound " + fmt(rep.ball_bound) + ", bracket [" + fmt(rep.lower) + ", " +
                                    fmt(rep.upper) + "]";
        if (rep.witness) o.text += ", witness {" + join_points(*rep.witness) + "}";
        return o;
    }
    if (local_finite_delta > 0) {
        auto prof = ml::local_finiteness_profile(s, *cover, local_finite_delta);
        o.results = ml::to_json(prof);
        o.results["delta"] = ml::num_json(local_finite_delta);
        o.text = "max incidence " + std::to_string(prof.max_incidence) + " at delta " + fmt(local_finite_delta);
        return o;
    }
    if (!subcover_csv.empty()) {
        auto sub = ml::finite_subcover(s, *cover, parse_index_list(subcover_csv));
        o.results = ml::to_json(sub);
        if (sub.ok) {
            o.text = "subcover of size " + std::to_string(sub.labels.size());
        } else {
            o.text = "no subcover: point " + std::to_string(*sub.uncovered) + " uncovered";
            o.status = "violations";
            o.exit_code = 1;
        }
        return o;
    }
    auto unc = ml::covers_check(s, *cover);
    auto members = ml::realize(s, *cover);
    o.results = ml::json{{"covered", !unc.has_value()},
                         {"members", ml::to_json(members)},
                         {"uncovered", unc ? ml::json(*unc) : ml::json(nullptr)}};
    o.text = unc ? "target not covered: first uncovered point " + std::to_string(*unc)
                 : "target covered by " + std::to_string(members.size()) + " members";
    return o;
}

Outcome run_convexity(const ml::FiniteMetricSpace& s, const std::string& check, double tol, int threads) {
    Outcome o;
    ml::ConvexityReport rep;
    if (check == "p")
        rep = ml::property_p_check(s, tol);
    else if (check == "menger")
        rep = ml::menger_check(s, tol, threads);
    else if (check == "metric")
        rep = ml::metric_convexity_check(s, tol);
    else
        throw std::invalid_argument("--check must be p, menger, or metric");
    o.results = ml::to_json(rep);
    o.text = rep.kind + " at tol " + fmt(tol) + ": " +
             (rep.holds ? "holds" : "fails, " + std::to_string(rep.violations.size()) + " violations");
    return o;
}

Outcome run_examples(bool list, const std::string& name, const std::vector<std::string>& params,
                     const std::string& fault_claim, int threads) {
    Outcome o;
    if (list) {
        o.results = ml::json{{"examples", ml::example_names()}};
        o.text = "";
        for (const auto& n : ml::example_names()) o.text += (o.text.empty() ? "" : "\n") + n;
        return o;
    }
    std::map<std::string, std::string> kv;
    for (const auto& p : params) {
        auto pos = p.find('=');
        if (pos == std::string::npos) throw std::invalid_argument("--param needs k=v, got: " + p);
        kv[p.substr(0, pos)] = p.substr(pos + 1);
    }
    auto bundle = ml::make_example(name, kv);
    bundle.threads = threads;
    auto results = ml::run_bundle(bundle, fault_claim);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;
    o.results = ml::json{{"all_pass", all_pass},
                         {"claims", ml::to_json(results)},
                         {"n", bundle.space.n()},
                         {"name", bundle.name},
                         {"params", bundle.params},
                         {"provenance", bundle.provenance}};
    for (const auto& r : results)
        o.text += (o.text.empty() ? "" : "\n") + std::string(r.pass ? "PASS " : "FAIL ") + r.claim + "  (" +
                  r.details + ")";
    if (!all_pass) {
        o.status = "violations";
        o.exit_code = 1;
    }
    return o;
}

Outcome run_verify_paper(const std::string& scale, const std::string& fault_claim, int threads) {
    Outcome o;
    ml::json bundles = ml::json::array();
    bool all_pass = true;
    for (const auto& preset : ml::verify_presets(scale)) {
        auto bundle = ml::make_example(preset.example, preset.params);
        bundle.threads = threads;
        auto results = ml::run_bundle(bundle, fault_claim);
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            o.text += (o.text.empty() ? "" : "\n") + std::string(r.pass ? "PASS " : "FAIL ") + r.claim + "  (" +
                      r.details + ")";
        }
        bundles.push_back(ml::json{{"claims", ml::to_json(results)},
                                   {"n", bundle.space.n()},
                                   {"name", bundle.name},
                                   {"params", bundle.params}});
    }
    o.results = ml::json{{"all_pass", all_pass}, {"bundles", std::move(bundles)}, {"scale", scale}};
    o.text += std::string("\n") + (all_pass ? "all claims pass" : "CLAIMS FAILED") + " at scale " + scale;
    if (!all_pass) {
        o.status = "violations";
        o.exit_code = 1;
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analyses of finite metric spaces, covers, and packaged example constructions"};
    app.require_subcommand(1);

    bool opt_json = false, opt_text = false, opt_timing = false;
    int opt_threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string opt_fault;
    app.add_flag("--json", opt_json, "emit the full JSON run report (default)");
    app.add_flag("--text", opt_text, "emit a short human-readable summary instead of JSON");
    app.add_flag("--timing", opt_timing, "measure duration_ms (off keeps reports byte-stable)");
    app.add_option("--threads", opt_threads, "worker threads for pairwise scans");
    app.add_option("--fault-inject", opt_fault, "corrupt the named claim's check (test hook)")->group("");

    std::string space_file, cover_file;

    auto* c_validate = app.add_subcommand("validate", "check the metric axioms of a space file");
    c_validate->add_option("--space", space_file, "space JSON file")->required();

    auto* c_chains = app.add_subcommand("chains", "chain connectivity at a scale");
    double ch_eps = 0.0;
    bool ch_threshold = false, ch_components = false;
    std::vector<int> ch_pair;
    c_chains->add_option("--space", space_file)->required();
    auto* ch_eps_opt = c_chains->add_option("--eps", ch_eps, "chain step bound");
    c_chains->add_flag("--threshold", ch_threshold, "smallest eps making the space one component");
    c_chains->add_flag("--components", ch_components, "partition into eps-components");
    c_chains->add_option("--pair", ch_pair, "two point indices to join")->expected(2);

    auto* c_nets = app.add_subcommand("nets", "greedy nets and separated subsets");
    std::string nets_eps, nets_target;
    c_nets->add_option("--space", space_file)->required();
    c_nets->add_option("--eps", nets_eps, "comma-separated scales")->required();
    c_nets->add_option("--target", nets_target, "comma-separated point indices (default: all)");

    auto* c_cover = app.add_subcommand("cover", "cover analyses: Lebesgue numbers, local finiteness, subcovers");
    bool cov_lebesgue = false;
    double cov_delta = 0.0, cov_adversarial = 0.0;
    std::string cov_subcover;
    c_cover->add_option("--space", space_file)->required();
    c_cover->add_option("--cover", cover_file, "cover JSON file");
    c_cover->add_flag("--lebesgue", cov_lebesgue, "ball bound, exact value, minimal witness");
    c_cover->add_option("--local-finite", cov_delta, "incidence profile at this delta");
    c_cover->add_option("--subcover", cov_subcover, "greedy subcover of these points");
    c_cover->add_option("--adversarial", cov_adversarial, "emit the shrinking-ball cover at this eps");

    auto* c_convexity = app.add_subcommand("convexity", "property P, Menger, and metric convexity checks");
    std::string cx_check;
    double cx_tol = 0.0;
    c_convexity->add_option("--space", space_file)->required();
    c_convexity->add_option("--check", cx_check, "p | menger | metric")->required();
    c_convexity->add_option("--tol", cx_tol, "tolerance")->required();

    auto* c_examples = app.add_subcommand("examples", "packaged example spaces with self-checking claims");
    bool ex_list = false;
    std::string ex_name;
    std::vector<std::string> ex_params;
    c_examples->add_flag("--list", ex_list, "list example names");
    c_examples->add_option("--run", ex_name, "build the named example and run its claims");
    c_examples->add_option("--param", ex_params, "k=v generator parameter (repeatable)");

    auto* c_verify = app.add_subcommand("verify-paper", "run every example bundle at a preset resolution");
    bool vp_small = false, vp_medium = false, vp_large = false;
    c_verify->add_flag("--small", vp_small, "N around 32 (default)");
    c_verify->add_flag("--medium", vp_medium, "N around 128");
    c_verify->add_flag("--large", vp_large, "N around 512");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    ml::json inputs = ml::json::object();
    auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (c_validate->parsed()) {
            inputs["space"] = space_file;
            o = run_validate(space_file);
        } else if (c_chains->parsed()) {
            inputs["space"] = space_file;
            if (!ch_eps_opt->empty()) inputs["eps"] = ml::num_json(ch_eps);
            auto s = ml::load_space(space_file);
            o = run_chains(s, ch_threshold, ch_components, ch_pair, ch_eps, !ch_eps_opt->empty());
        } else if (c_nets->parsed()) {
            inputs["space"] = space_file;
            inputs["eps"] = nets_eps;
            if (!nets_target.empty()) inputs["target"] = nets_target;
            auto s = ml::load_space(space_file);
            o = run_nets(s, nets_eps, nets_target);
        } else if (c_cover->parsed()) {
            inputs["space"] = space_file;
            if (!cover_file.empty()) inputs["cover"] = cover_file;
            auto s = ml::load_space(space_file);
            std::optional<ml::Cover> cover;
            if (!cover_file.empty()) cover = ml::load_cover(cover_file, s);
            o = run_cover(s, cover, cov_lebesgue, cov_delta, cov_subcover, cov_adversarial);
        } else if (c_convexity->parsed()) {
            inputs["space"] = space_file;
            inputs["check"] = cx_check;
            inputs["tol"] = ml::num_json(cx_tol);
            auto s = ml::load_space(space_file);
            o = run_convexity(s, cx_check, cx_tol, opt_threads);
        } else if (c_examples->parsed()) {
            if (!ex_list && ex_name.empty())
                throw std::invalid_argument("examples needs --list or --run NAME");
            if (ex_list)
                inputs["list"] = true;
            else {
                inputs["name"] = ex_name;
                inputs["params"] = ex_params;
            }
            o = run_examples(ex_list, ex_name, ex_params, opt_fault, opt_threads);
        } else if (c_verify->parsed()) {
            if (int(vp_small) + int(vp_medium) + int(vp_large) > 1)
                throw std::invalid_argument("pick at most one of --small, --medium, --large");
            std::string scale = vp_medium ? "medium" : vp_large ? "large" : "small";
            inputs["scale"] = scale;
            o = run_verify_paper(scale, opt_fault, opt_threads);
        }
    } catch (const ml::MetricError& e) {
        o.results = ml::json{{"message", e.what()}, {"violations", ml::to_json(e.violations)}};
        o.text = std::string("metric violations: ") + e.what();
        o.status = "violations";
        o.exit_code = 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        o.results = ml::json{{"message", e.what()}};
        o.text = std::string("error: ") + e.what();
        o.status = "error";
        o.exit_code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        o.results = ml::json{{"message", e.what()}};
        o.text = std::string("error: ") + e.what();
        o.status = "error";
        o.exit_code = 2;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    ml::json report{{"command", command},
                    {"duration_ms", opt_timing ? elapsed.count() : 0},
                    {"inputs", std::move(inputs)},
                    {"results", std::move(o.results)},
                    {"status", o.status}};
    if (opt_text)
        std::cout << o.text << "\n";
    else
        std::cout << report.dump(2) << "\n";
    return o.exit_code;
}
