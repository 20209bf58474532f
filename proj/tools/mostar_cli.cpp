// Command-line front end: generation, measurement, ranking, extremal
// verification, reduction gadgets, mechanism tables, random experiments.
//
// Exit codes: 0 success, 1 domain error (bad parameters, disconnected input
// where connectivity is required), 2 usage error. Diagnostics go to stderr,
// data to stdout (or --out).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mostar/extremal.hpp"
#include "mostar/families.hpp"
#include "mostar/graph.hpp"
#include "mostar/kernels.hpp"
#include "mostar/measures.hpp"
#include "mostar/mechanisms.hpp"
#include "mostar/random_graphs.hpp"
#include "mostar/rank.hpp"
#include "mostar/reductions.hpp"

#ifndef MOSTAR_DATA_DIR
#define MOSTAR_DATA_DIR "data"
#endif

namespace {

using namespace mostar;

int default_threads() {
    if (const char* env = std::getenv("THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

Graph load_graph(const std::string& path) {
    std::vector<std::string> warnings;
    Graph g;
    if (path.empty() || path == "-") {
        g = read_graph_text(std::cin, &warnings);
    } else {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open input file: " + path);
        g = read_graph_text(in, &warnings);
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return g;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw DomainError("cannot open output file: " + path);
    return file;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

VertexWeightedGraph gadget_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open gadget file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    VertexWeightedGraph wg;
    wg.core = build_graph(n, edges);
    wg.weight.assign(n, 1);
    if (j.contains("weights")) {
        auto ws = j.at("weights");
        for (int v = 0; v < n; ++v) wg.weight[v] = BigInt(ws[v].get<std::string>());
        if (j.contains("c")) wg.apex = j.at("c").get<int>();
    }
    return wg;
}

int run_gen(const std::string& tag, const std::vector<std::string>& params,
            const std::string& out_path) {
    auto spec = parse_family(tag, params);
    if (!spec) {
        std::cerr << "error: unknown family or bad parameters: " << tag << '\n';
        return 2;
    }
    Graph g = generate(*spec);
    std::ofstream file;
    write_graph_text(open_output(file, out_path), g);
    return 0;
}

int run_oracle(const std::string& tag, const std::vector<std::string>& params,
               const std::string& measure) {
    auto spec = parse_family(tag, params);
    if (!spec) {
        std::cerr << "error: unknown family or bad parameters: " << tag << '\n';
        return 2;
    }
    auto m = measure_from_name(measure);
    if (!m) {
        std::cerr << "error: unknown measure: " << measure << '\n';
        return 2;
    }
    Graph g = generate(*spec);
    DistanceMatrix dm = all_pairs(g);
    if (!dm.connected()) throw DomainError("oracle requires a connected family instance");
    NCounts nc = build_ncounts(dm);
    std::int64_t computed = 0;
    switch (*m) {
        case Measure::Mo: computed = mostar_graph(g, nc); break;
        case Measure::MoTop: computed = terminal_mostar(g, dm); break;
        case Measure::MoStar: computed = total_mostar(nc); break;
        case Measure::Irr: computed = irregularity_graph(g); break;
        case Measure::Peri: computed = peri_graph(nc); break;
        case Measure::Spr: computed = spr_graph(nc); break;
        case Measure::EPeri: {
            BeatsBits b = build_beats(nc);
            computed = eperi_graph(g, b);
            break;
        }
        case Measure::ESpr: computed = espr_graph(g, nc); break;
    }
    auto cf = closed_form(*spec, *m);
    std::cout << "family: " << spec->name() << "\nmeasure: " << measure_name(*m)
              << "\ncomputed: " << computed << "\nclosed_form: ";
    if (cf) {
        std::ostringstream cfs;
        cfs << *cf;
        bool match = Rational(computed) == *cf;
        std::cout << cfs.str() << "\nmatch: " << (match ? "yes" : "NO") << '\n';
        return match ? 0 : 1;
    }
    std::cout << "not covered\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph peripherality toolkit (Mostar index and friends)"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default: THREADS env or 1)");

    auto* gen = app.add_subcommand("gen", "generate a family graph as graph text");
    std::string gen_tag, gen_out;
    std::vector<std::string> gen_params;
    gen->add_option("tag", gen_tag, "family tag")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    auto* measure = app.add_subcommand("measure", "full measure report for a graph");
    std::string measure_in, measure_format = "json";
    measure->add_option("--in", measure_in, "graph text input (default stdin)");
    measure->add_option("--format", measure_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* rank_cmd = app.add_subcommand("rank", "rank table for a graph (ids as labels)");
    std::string rank_in, rank_kind = "vertex", rank_format = "csv";
    rank_cmd->add_option("--in", rank_in, "graph text input (default stdin)");
    rank_cmd->add_option("--kind", rank_kind, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
    rank_cmd->add_option("--format", rank_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* oracle = app.add_subcommand("oracle", "closed form vs computed value for a family");
    std::string oracle_tag, oracle_measure;
    std::vector<std::string> oracle_params;
    oracle->add_option("tag", oracle_tag, "family tag")->required();
    oracle->add_option("params", oracle_params, "family parameters");
    oracle->add_option("--measure", oracle_measure, "measure id")->required();

    auto* verify = app.add_subcommand("verify", "re-verify extremal claims by enumeration");
    std::string verify_claims = "all", verify_range = "4..10";
    bool verify_long = false;
    verify->add_option("--claims", verify_claims,
                       "claim ids / groups (trees, connected, all), comma separated, or a file");
    verify->add_option("--n", verify_range, "order range A..B");
    verify->add_flag("--long", verify_long, "enable minutes-scale checks (n=22 tree scan)");

    auto* scan_cmd = app.add_subcommand("scan", "extremal scan over trees or connected graphs");
    std::string scan_obj, scan_dir = "max", scan_gen = "trees", scan_checkpoint;
    int scan_n = 0;
    std::uint64_t scan_resume = 0;
    bool scan_long = false;
    scan_cmd
        ->add_option("--objective", scan_obj,
                     "Mo|Mo_top|Mo_star|irr|Mo-irr|peri|spr|eperi|espr|peri+deg|eperi+edeg")
        ->required();
    scan_cmd->add_option("--n", scan_n, "graph order")->required();
    scan_cmd->add_option("--direction", scan_dir, "max|min")
        ->check(CLI::IsMember({"max", "min"}));
    scan_cmd->add_option("--generator", scan_gen, "trees|connected")
        ->check(CLI::IsMember({"trees", "connected"}));
    scan_cmd->add_option("--checkpoint", scan_checkpoint, "checkpoint file path");
    scan_cmd->add_option("--resume", scan_resume, "resume cursor (stream index)");
    scan_cmd->add_flag("--long", scan_long, "allow long runs (trees n > 14)");

    auto* reduce = app.add_subcommand("reduce", "build an NP-reduction gadget");
    std::string reduce_kind, reduce_in, reduce_out;
    bool reduce_prune = false;
    reduce->add_option("--kind", reduce_kind, "H|Hp|J|X")
        ->required()
        ->check(CLI::IsMember({"H", "Hp", "J", "X"}));
    reduce->add_option("--in", reduce_in, "graph text input (default stdin)");
    reduce->add_option("--out", reduce_out, "gadget JSON output (default stdout)");
    reduce->add_flag("--prune", reduce_prune, "J only: drop components of order <= 2");

    auto* clique = app.add_subcommand("clique", "constrained clique search");
    std::string clique_in, clique_gadget, clique_constraint;
    int clique_k = 0;
    bool clique_decide = false;
    clique->add_option("--in", clique_in, "graph text input");
    clique->add_option("--gadget", clique_gadget, "gadget JSON input (weighted search)");
    clique->add_option("--k", clique_k, "clique size")->required();
    clique->add_option("--constraint", clique_constraint,
                       "mo-eq|mo-neq|irr-eq|irr-neq|peri-eq|peri-neq|eperi-eq|eperi-neq|"
                       "ecc-eq|ecc-neq|eecc-eq|eecc-neq (omit for plain clique)");
    clique->add_flag("--decide", clique_decide,
                     "use the polynomial decider (ecc-neq / eecc-neq only)");

    auto* mech = app.add_subcommand("mech", "chemical mechanism tables");
    auto* mech_rank = mech->add_subcommand("rank", "compute a rank table");
    std::string mech_dataset, mech_in, mech_kind = "vertex", mech_format = "csv";
    mech_rank->add_option("--dataset", mech_dataset, "superfast|mozart4");
    mech_rank->add_option("--in", mech_in, "reaction file input");
    mech_rank->add_option("--kind", mech_kind, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
    mech_rank->add_option("--format", mech_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* mech_cmp = mech->add_subcommand("compare", "diff a computed table against a reference");
    std::string cmp_dataset, cmp_kind = "vertex", cmp_ref;
    mech_cmp->add_option("--dataset", cmp_dataset, "superfast|mozart4")->required();
    mech_cmp->add_option("--kind", cmp_kind, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
    mech_cmp->add_option("--ref", cmp_ref, "reference CSV (default: bundled data dir)");

    auto* random = app.add_subcommand("random", "random graph experiments");
    auto* random_irr = random->add_subcommand("irr", "Monte Carlo irregularity of G(n,1/2)");
    int rnd_n = 200, rnd_trials = 200;
    std::uint64_t rnd_seed = 7;
    std::string rnd_format = "json";
    random_irr->add_option("--n", rnd_n, "graph order");
    random_irr->add_option("--trials", rnd_trials, "trial count");
    random_irr->add_option("--seed", rnd_seed, "seed");
    random_irr->add_option("--format", rnd_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    auto* random_exact = random->add_subcommand("exact", "exact E[irr(G(n,1/2))], n <= 5");
    int exact_n = 4;
    random_exact->add_option("--n", exact_n, "graph order (<= 5)");

    // global options (--threads) may follow a subcommand name
    for (CLI::App* sub : {gen, measure, rank_cmd, oracle, verify, scan_cmd, reduce, clique,
                          mech, mech_rank, mech_cmp, random, random_irr, random_exact})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return run_gen(gen_tag, gen_params, gen_out);

        if (*measure) {
            Graph g = load_graph(measure_in);
            MeasureReport r = measure_report(g, threads);
            if (measure_format == "json") report_to_json(std::cout, r);
            else report_to_csv(std::cout, r);
            return 0;
        }

        if (*rank_cmd) {
            Graph g = load_graph(rank_in);
            std::vector<std::string> labels(g.n);
            for (int v = 0; v < g.n; ++v) labels[v] = std::to_string(v);
            RankTable t = rank_table(
                g, labels, rank_kind == "vertex" ? TableKind::Vertex : TableKind::Edge);
            if (rank_format == "csv") rank_table_to_csv(std::cout, t);
            else rank_table_to_json(std::cout, t);
            return 0;
        }

        if (*oracle) return run_oracle(oracle_tag, oracle_params, oracle_measure);

        if (*verify) {
            std::vector<std::string> which;
            std::ifstream claim_file(verify_claims);
            if (claim_file.good()) {
                std::string line;
                while (std::getline(claim_file, line))
                    if (!line.empty()) which.push_back(line);
            } else {
                std::stringstream ss(verify_claims);
                std::string tok;
                while (std::getline(ss, tok, ',')) which.push_back(tok);
            }
            auto [lo, hi] = parse_range(verify_range);
            auto results = mostar::verify_claims(which, lo, hi, verify_long);
            claims_to_json(std::cout, results);
            for (const auto& r : results)
                if (!r.pass) return 1;
            return 0;
        }

        if (*scan_cmd) {
            auto obj = objective_from_name(scan_obj);
            if (!obj) {
                std::cerr << "error: unknown objective: " << scan_obj << '\n';
                return 2;
            }
            GeneratorKind gk =
                scan_gen == "trees" ? GeneratorKind::FreeTrees : GeneratorKind::ConnectedGraphs;
            if (gk == GeneratorKind::FreeTrees && scan_n > 14 && !scan_long)
                throw DomainError("tree scans above n=14 are gated behind --long");
            ScanOptions opts;
            opts.checkpoint_path = scan_checkpoint;
            opts.resume_cursor = scan_resume;
            auto res = scan(*obj, scan_n, scan_dir == "max", gk, opts);
            std::cout << "{\n  \"objective\": \"" << res.objective << "\",\n  \"n\": " << res.n
                      << ",\n  \"direction\": \"" << (res.maximize ? "max" : "min")
                      << "\",\n  \"optimum\": " << res.optimum
                      << ",\n  \"witness_count\": " << res.witness_count
                      << ",\n  \"count_scanned\": " << res.count_scanned
                      << ",\n  \"witnesses\": [";
            std::size_t show = std::min<std::size_t>(res.witnesses.size(), 10);
            for (std::size_t i = 0; i < show; ++i)
                std::cout << (i ? ", " : "") << '"' << res.witnesses[i] << '"';
            std::cout << "]\n}\n";
            return 0;
        }

        if (*reduce) {
            Graph g = load_graph(reduce_in);
            GadgetOutput out;
            if (reduce_kind == "H") out = build_H(g);
            else if (reduce_kind == "Hp") out = build_H_pruned(g);
            else if (reduce_kind == "J") out = build_J(g, reduce_prune);
            else out = build_X(g);
            std::ofstream file;
            gadget_to_json(open_output(file, reduce_out), out);
            return 0;
        }

        if (*clique) {
            if (clique_decide) {
                Graph g = load_graph(clique_in);
                bool ans;
                if (clique_constraint == "ecc-neq") ans = decide_ecc_neq(g, clique_k);
                else if (clique_constraint == "eecc-neq") ans = decide_eecc_neq(g, clique_k);
                else {
                    std::cerr << "error: --decide supports ecc-neq and eecc-neq only\n";
                    return 2;
                }
                std::cout << (ans ? "yes" : "no") << '\n';
                return 0;
            }
            std::optional<std::vector<int>> witness;
            if (!clique_gadget.empty()) {
                auto wg = gadget_from_json(clique_gadget);
                auto c = constraint_from_name(clique_constraint);
                if (!c) {
                    std::cerr << "error: unknown constraint: " << clique_constraint << '\n';
                    return 2;
                }
                witness = constrained_clique(wg, clique_k, *c);
            } else {
                Graph g = load_graph(clique_in);
                if (clique_constraint.empty()) {
                    witness = find_clique(g, clique_k);
                } else {
                    auto c = constraint_from_name(clique_constraint);
                    if (!c) {
                        std::cerr << "error: unknown constraint: " << clique_constraint << '\n';
                        return 2;
                    }
                    witness = constrained_clique(g, clique_k, *c);
                }
            }
            if (witness) {
                std::cout << "witness:";
                for (int v : *witness) std::cout << ' ' << v;
                std::cout << '\n';
            } else {
                std::cout << "none\n";
            }
            return 0;
        }

        if (*mech) {
            if (*mech_rank) {
                NamedGraph ng;
                if (!mech_dataset.empty()) {
                    ng = builtin_mechanism(mech_dataset);
                } else if (!mech_in.empty()) {
                    std::ifstream in(mech_in);
                    if (!in) throw DomainError("cannot open reaction file: " + mech_in);
                    ng = reactant_graph(parse_mechanism(in));
                } else {
                    std::cerr << "error: mech rank needs --dataset or --in\n";
                    return 2;
                }
                RankTable t = mechanism_rank_table(
                    ng, mech_kind == "vertex" ? TableKind::Vertex : TableKind::Edge);
                if (mech_format == "csv") rank_table_to_csv(std::cout, t);
                else rank_table_to_json(std::cout, t);
                return 0;
            }
            if (*mech_cmp) {
                NamedGraph ng = builtin_mechanism(cmp_dataset);
                TableKind kind = cmp_kind == "vertex" ? TableKind::Vertex : TableKind::Edge;
                RankTable computed = mechanism_rank_table(ng, kind);
                std::string ref_path = cmp_ref;
                if (ref_path.empty())
                    ref_path = std::string(MOSTAR_DATA_DIR) + "/" + cmp_dataset + "_" +
                               cmp_kind + "_ranks.csv";
                std::ifstream in(ref_path);
                if (!in) throw DomainError("cannot open reference table: " + ref_path);
                RankTable reference = load_rank_table_csv(in, kind);
                auto diffs = compare_tables(computed, reference);
                if (diffs.empty()) {
                    std::cout << "identical (" << computed.row_labels.size() << " rows x "
                              << computed.columns.size() << " columns)\n";
                    return 0;
                }
                for (const auto& d : diffs)
                    std::cout << d.row << " [" << d.column << "]: computed " << d.computed
                              << " reference " << d.reference << '\n';
                return 1;
            }
            std::cerr << "error: mech needs a subcommand (rank, compare)\n";
            return 2;
        }

        if (*random) {
            if (*random_irr) {
                auto ex = monte_carlo_irr(rnd_n, rnd_trials, rnd_seed);
                if (rnd_format == "json") {
                    std::cout << "{\n  \"n\": " << ex.n << ",\n  \"p\": 0.5,\n  \"trials\": "
                              << ex.trials << ",\n  \"seed\": " << ex.seed
                              << ",\n  \"mean\": " << format_sig12(ex.mean)
                              << ",\n  \"std_error\": " << format_sig12(ex.std_error)
                              << ",\n  \"ratio_to_n52_over_4sqrtpi\": "
                              << format_sig12(ex.ratio) << "\n}\n";
                } else {
                    std::cout << "n=" << ex.n << " trials=" << ex.trials << " seed=" << ex.seed
                              << " mean=" << format_sig12(ex.mean)
                              << " stderr=" << format_sig12(ex.std_error)
                              << " ratio=" << format_sig12(ex.ratio) << '\n';
                }
                return 0;
            }
            if (*random_exact) {
                Rational exact = exact_expected_irr(exact_n);
                Rational cond = expected_irr_conditioned(exact_n);
                Rational approx = expected_irr_binomial_approx(exact_n);
                std::cout << "n: " << exact_n << "\nenumeration: " << exact
                          << "\nconditioned_form: " << cond
                          << "\nbinomial_approx_form: " << approx
                          << "\napprox_gap: " << Rational(approx - exact) << '\n';
                return 0;
            }
            std::cerr << "error: random needs a subcommand (irr, exact)\n";
            return 2;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
