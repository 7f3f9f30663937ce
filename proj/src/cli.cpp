#include "sgm/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgm/bounds.hpp"
#include "sgm/graph.hpp"
#include "sgm/moments.hpp"
#include "sgm/oracle.hpp"
#include "sgm/stats.hpp"
#include "sgm/tails.hpp"

namespace sgm {
namespace cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char byte : data) {
        h ^= byte;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json rat_json(const Rational& r) {
    return ordered_json{{"exact", r.to_fraction_string()}, {"approx", r.to_double()}};
}

ordered_json opt_rat_json(const std::optional<Rational>& r) {
    if (!r) return nullptr;
    return rat_json(*r);
}

ordered_json stats_json(const GraphStats& s) {
    return ordered_json{
        {"n", s.n},
        {"m", s.m},
        {"d2", s.d2},
        {"is_bipartite", s.is_bipartite},
        {"alpha_upper", s.alpha_upper},
        {"omega_upper", s.omega_upper},
        {"comp_m", s.comp_m},
        {"comp_d2", s.comp_d2},
    };
}

ordered_json moment_json(const MomentSummary& mom) {
    return ordered_json{
        {"c", mom.c},
        {"s1", rat_json(mom.s1)},
        {"s2", rat_json(mom.s2)},
        {"mu2", rat_json(mom.mu2)},
        {"sigma2", rat_json(mom.sigma2)},
    };
}

struct Envelope {
    std::string command;
    std::string input_digest;
    ordered_json results;
    std::vector<std::string> warnings;
};

void emit_json(std::ostream& out, const Envelope& env) {
    ordered_json doc{
        {"command", env.command},
        {"input_digest", env.input_digest},
        {"results", env.results},
        {"warnings", env.warnings},
    };
    out << doc.dump(2) << "\n";
}

void emit_pretty_header(std::ostream& out, const Envelope& env) {
    out << "command: " << env.command << "\n";
    out << "input digest: " << env.input_digest << "\n";
    for (const auto& w : env.warnings) out << "warning: " << w << "\n";
}

std::string pretty_rat(const Rational& r) {
    return r.to_decimal(6) + " (" + r.to_fraction_string() + ")";
}

std::string pretty_opt(const std::optional<Rational>& r) {
    return r ? pretty_rat(*r) : std::string("absent");
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

struct LoadedGraph {
    ParsedGraph parsed;
    GraphStats stats;
    std::string digest;
};

LoadedGraph load_graph(const std::string& path, std::istream& in) {
    LoadedGraph lg;
    lg.parsed = parse_edge_list(read_input(path, in));
    lg.stats = compute_stats(lg.parsed.graph);
    lg.digest = fnv1a_hex(serialize(lg.parsed.graph));
    return lg;
}

struct CRange {
    long long lo = 0;
    long long hi = 0;
};

CRange parse_c_range(const std::string& text) {
    CRange r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ValidationError("malformed c range '" + text + "' (expected N or A..B)");
    }
    if (r.lo > r.hi) {
        throw ValidationError("empty c range '" + text + "'");
    }
    return r;
}

void check_c(const GraphStats& stats, long long c) {
    if (c < 2 || c > stats.n) {
        throw ValidationError("c = " + std::to_string(c) + " outside valid range 2.." +
                              std::to_string(stats.n));
    }
}

// ---- moments ----------------------------------------------------------

int cmd_moments(const LoadedGraph& lg, const CRange& crange, bool pretty, std::ostream& out) {
    Envelope env{"moments", lg.digest, {}, {}};
    check_c(lg.stats, crange.lo);
    check_c(lg.stats, crange.hi);
    ordered_json list = ordered_json::array();
    std::vector<MomentSummary> moments;
    for (long long c = crange.lo; c <= crange.hi; ++c) {
        moments.push_back(binomial_moments(lg.stats, c));
        list.push_back(moment_json(moments.back()));
    }
    env.results = ordered_json{{"stats", stats_json(lg.stats)}, {"moments", list}};
    if (pretty) {
        emit_pretty_header(out, env);
        const auto& s = lg.stats;
        out << "graph: n=" << s.n << " m=" << s.m << " d2=" << s.d2
            << " bipartite=" << (s.is_bipartite ? "yes" : "no") << " alpha<=" << s.alpha_upper
            << " omega<=" << s.omega_upper << "\n";
        for (const auto& mom : moments) {
            out << "c=" << mom.c << "  s1=" << pretty_rat(mom.s1) << "  s2=" << pretty_rat(mom.s2)
                << "  sigma2=" << pretty_rat(mom.sigma2) << "\n";
        }
    } else {
        emit_json(out, env);
    }
    return kExitOk;
}

// ---- bounds -----------------------------------------------------------

int cmd_bounds(const LoadedGraph& lg, long long c, std::optional<long long> ell_override,
               std::optional<long long> u_override, bool pretty, std::ostream& out) {
    Envelope env{"bounds", lg.digest, {}, {}};
    check_c(lg.stats, c);
    MomentSummary mom = binomial_moments(lg.stats, c);
    SupportBounds sb = support_bounds(lg.stats, c);
    const long long gamma_full = c * (c - 1) / 2;
    if (ell_override) {
        if (*ell_override < 0) throw ValidationError("ell override must be >= 0");
        sb.ell_star = *ell_override;
    }
    if (u_override) {
        if (*u_override > gamma_full) {
            throw ValidationError("u override must be <= c(c-1)/2");
        }
        sb.u_star = *u_override;
    }
    DensityBounds db = bhatia_davis_bounds(mom, sb);
    for (const auto& note : db.notes) env.warnings.push_back(note);

    ordered_json dominance = nullptr;
    if (!mom.s1.is_zero()) {
        DominanceReport rep = dominance_report(mom, sb);
        const char* name = rep.dominant == Dominant::equal ? "equal"
                           : rep.dominant == Dominant::bhatia_davis ? "bhatia_davis"
                                                                    : "frechet";
        dominance = ordered_json{{"frechet", rat_json(rep.frechet)},
                                 {"bhatia_davis", rat_json(rep.bhatia_davis)},
                                 {"dominant", name}};
    }

    env.results = ordered_json{
        {"support",
         ordered_json{{"c", sb.c},
                      {"ell_star", sb.ell_star},
                      {"u_star", sb.u_star},
                      {"gamma_c", sb.gamma_c},
                      {"motzkin_straus", rat_json(sb.motzkin_straus)}}},
        {"density",
         ordered_json{{"frechet_lower", db.frechet_lower.get_str()},
                      {"bd_densest_lower", db.bd_densest_lower.get_str()},
                      {"bd_sparsest_upper", db.bd_sparsest_upper.get_str()}}},
        {"dominance", dominance},
        {"triangle_free_consistent", triangle_free_consistency(lg.stats)},
    };
    if (pretty) {
        emit_pretty_header(out, env);
        out << "support: ell*=" << sb.ell_star << " u*=" << sb.u_star << " gamma_c=" << sb.gamma_c
            << " motzkin_straus=" << pretty_rat(sb.motzkin_straus) << "\n";
        out << "densest lower bound:  " << db.bd_densest_lower.get_str()
            << " (frechet " << db.frechet_lower.get_str() << ")\n";
        out << "sparsest upper bound: " << db.bd_sparsest_upper.get_str() << "\n";
    } else {
        emit_json(out, env);
    }
    return kExitOk;
}

// ---- tails ------------------------------------------------------------

ordered_json tail_report_json(const TailReport& rep) {
    return ordered_json{
        {"c", rep.c},
        {"t", rep.t},
        {"chung_erdos_lb", rat_json(rep.chung_erdos_lb)},
        {"petrov_lb", opt_rat_json(rep.petrov_lb)},
        {"factorial_ub", opt_rat_json(rep.factorial_ub)},
        {"cantelli_ub", opt_rat_json(rep.cantelli_ub)},
        {"complement_ub", opt_rat_json(rep.complement_ub)},
        {"combined_ub", rat_json(rep.combined_ub)},
    };
}

int cmd_tails(const LoadedGraph& lg, long long c, long long t, bool diagnostics, bool pretty,
              std::ostream& out) {
    Envelope env{"tails", lg.digest, {}, {}};
    check_c(lg.stats, c);
    MomentSummary mom = binomial_moments(lg.stats, c);
    MomentSummary comp = complement_moments(lg.stats, c);
    TailReport rep = combined_upper_tail(mom, comp, t);
    for (const auto& note : rep.notes) env.warnings.push_back(note);
    env.results = tail_report_json(rep);
    if (diagnostics) {
        PrintedVariants pv = printed_variants(mom, comp, t);
        env.results["printed_variants"] =
            ordered_json{{"factorial_half", opt_rat_json(pv.factorial_half)},
                         {"complement_shifted", opt_rat_json(pv.complement_shifted)}};
        env.warnings.push_back(
            "printed_variants are alternative printed forms, not certified bounds");
    }
    if (pretty) {
        emit_pretty_header(out, env);
        out << "P(M_" << c << " >= " << t << "):\n";
        out << "  chung-erdos lower (t=1): " << pretty_rat(rep.chung_erdos_lb) << "\n";
        out << "  petrov lower:            " << pretty_opt(rep.petrov_lb) << "\n";
        out << "  factorial upper:         " << pretty_opt(rep.factorial_ub) << "\n";
        out << "  cantelli upper:          " << pretty_opt(rep.cantelli_ub) << "\n";
        out << "  complement upper:        " << pretty_opt(rep.complement_ub) << "\n";
        out << "  combined upper:          " << pretty_rat(rep.combined_ub) << "\n";
    } else {
        emit_json(out, env);
    }
    return kExitOk;
}

// ---- count ------------------------------------------------------------

CountKind parse_kind(const std::string& name) {
    if (name == "independent_sets") return CountKind::independent_sets;
    if (name == "cliques") return CountKind::cliques;
    if (name == "subtrees") return CountKind::subtrees;
    if (name == "balanced_bicliques") return CountKind::balanced_bicliques;
    throw ValidationError("unknown count kind '" + name + "'");
}

int cmd_count(const LoadedGraph& lg, const std::string& kind_name, std::optional<long long> c_opt,
              bool pretty, std::ostream& out) {
    Envelope env{"count", lg.digest, {}, {}};
    CountKind kind = parse_kind(kind_name);
    const Graph& g = lg.parsed.graph;

    std::vector<long long> cs;
    if (c_opt) {
        check_c(lg.stats, *c_opt);
        cs.push_back(*c_opt);
    } else {
        for (long long c = 2; c <= lg.stats.n; ++c) {
            if (kind == CountKind::balanced_bicliques && c % 2 != 0) continue;
            cs.push_back(c);
        }
    }
    ordered_json per_c = ordered_json::array();
    std::vector<CountBound> rows;
    for (long long c : cs) {
        rows.push_back(count_bound(g, lg.stats, c, kind));
        per_c.push_back(ordered_json{{"c", c},
                                     {"bound", rat_json(rows.back().bound)},
                                     {"binomial_total", rows.back().binomial_total.get_str()}});
    }
    env.results = ordered_json{{"kind", kind_name}, {"per_c", per_c}};
    if (g.is_tree()) {
        TreeAggregates agg = tree_aggregate_bounds(g, lg.stats);
        env.results["aggregates"] =
            ordered_json{{"independent_sets_total", rat_json(agg.independent_sets_total)},
                         {"subtrees_total", rat_json(agg.subtrees_total)}};
    }
    if (pretty) {
        emit_pretty_header(out, env);
        out << "kind: " << kind_name << "\n";
        for (const auto& row : rows) {
            out << "c=" << row.c << "  bound=" << pretty_rat(row.bound)
                << "  of C(n,c)=" << row.binomial_total.get_str() << "\n";
        }
        if (env.results.contains("aggregates")) {
            TreeAggregates agg = tree_aggregate_bounds(g, lg.stats);
            out << "independent sets total <= " << pretty_rat(agg.independent_sets_total) << "\n";
            out << "subtrees total         <= " << pretty_rat(agg.subtrees_total) << "\n";
        }
    } else {
        emit_json(out, env);
    }
    return kExitOk;
}

// ---- significance -----------------------------------------------------

std::vector<int> resolve_community(const ParsedGraph& parsed, const std::string& inline_spec,
                                   const std::string& file_spec, std::istream& in) {
    std::vector<std::string> labels;
    if (!inline_spec.empty() && !file_spec.empty()) {
        throw ValidationError("give the community either inline or as a file, not both");
    }
    if (inline_spec.empty() && file_spec.empty()) {
        throw ValidationError("no community given (use --community or --community-file)");
    }
    if (!inline_spec.empty()) {
        std::string cur;
        for (char ch : inline_spec) {
            if (ch == ',') {
                if (!cur.empty()) labels.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
        if (!cur.empty()) labels.push_back(cur);
    } else {
        std::istringstream lines(read_input(file_spec, in));
        std::string line;
        while (std::getline(lines, line)) {
            while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
                line.pop_back();
            }
            std::size_t start = 0;
            while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) {
                ++start;
            }
            line = line.substr(start);
            if (line.empty() || line[0] == '#' || line[0] == '%') continue;
            labels.push_back(line);
        }
    }
    std::unordered_map<std::string, int> index_of;
    index_of.reserve(parsed.labels.size());
    for (std::size_t i = 0; i < parsed.labels.size(); ++i) {
        index_of.emplace(parsed.labels[i], static_cast<int>(i));
    }
    std::vector<int> community;
    community.reserve(labels.size());
    for (const auto& label : labels) {
        auto it = index_of.find(label);
        if (it == index_of.end()) {
            throw ValidationError("unknown community vertex '" + label + "'");
        }
        community.push_back(it->second);
    }
    return community;
}

ordered_json significance_json(const SignificanceResult& res, const Rational& alpha) {
    return ordered_json{
        {"c", res.c},
        {"m_community", res.m_community},
        {"s1", rat_json(res.s1)},
        {"tail_bound", rat_json(clamp_unit(res.tail_bound))},
        {"alpha", rat_json(alpha)},
        {"significant", res.significant},
    };
}

int cmd_significance(const LoadedGraph& lg, const std::vector<int>& community,
                     const Rational& alpha, bool pretty, std::ostream& out) {
    Envelope env{"significance", lg.digest, {}, {}};
    SignificanceResult hyper = significance_test(lg.parsed.graph, lg.stats, community, alpha);
    SignificanceResult hypo = hypo_significance_test(lg.parsed.graph, lg.stats, community, alpha);
    env.results = ordered_json{{"hyper_dense", significance_json(hyper, alpha)},
                               {"hypo_dense", significance_json(hypo, alpha)}};
    if (pretty) {
        emit_pretty_header(out, env);
        out << "community: c=" << hyper.c << " edges=" << hyper.m_community
            << " expected=" << pretty_rat(hyper.s1) << "\n";
        out << "hyper-dense: p <= " << pretty_rat(hyper.tail_bound)
            << (hyper.significant ? "  SIGNIFICANT" : "  not significant") << "\n";
        out << "hypo-dense:  p <= " << pretty_rat(hypo.tail_bound)
            << (hypo.significant ? "  SIGNIFICANT" : "  not significant") << "\n";
    } else {
        emit_json(out, env);
    }
    return kExitOk;
}

// ---- oracle -----------------------------------------------------------

int cmd_oracle(const LoadedGraph& lg, long long c, long long budget, bool pretty,
               std::ostream& out) {
    Envelope env{"oracle", lg.digest, {}, {}};
    check_c(lg.stats, c);
    oracle::ExactDistribution dist = oracle::exact_distribution(lg.parsed.graph, c, budget);
    oracle::DistributionSummary summary = oracle::exact_summary(dist);
    MomentSummary formula = binomial_moments(lg.stats, c);
    bool match = summary.s1 == formula.s1 && summary.s2 == formula.s2 &&
                 summary.sigma2 == formula.sigma2;

    ordered_json counts = ordered_json::object();
    for (const auto& [k, cnt] : dist.counts) {
        counts[std::to_string(k)] = cnt.get_str();
    }
    env.results = ordered_json{
        {"distribution",
         ordered_json{{"c", dist.c}, {"total", dist.total.get_str()}, {"counts", counts}}},
        {"summary",
         ordered_json{{"ell", summary.ell},
                      {"u", summary.u},
                      {"s1", rat_json(summary.s1)},
                      {"s2", rat_json(summary.s2)},
                      {"sigma2", rat_json(summary.sigma2)},
                      {"count_at_ell", summary.count_at_ell.get_str()},
                      {"count_at_u", summary.count_at_u.get_str()}}},
        {"formula", moment_json(formula)},
        {"match", match},
    };
    if (!match) {
        env.warnings.push_back("formula moments disagree with exhaustive enumeration");
    }
    if (pretty) {
        emit_pretty_header(out, env);
        out << "c=" << c << " total=" << dist.total.get_str() << "\n";
        for (const auto& [k, cnt] : dist.counts) {
            out << "  size " << k << ": " << cnt.get_str() << "\n";
        }
        out << "support [" << summary.ell << ", " << summary.u << "]\n";
        out << "s1 " << pretty_rat(summary.s1) << "  s2 " << pretty_rat(summary.s2)
            << "  sigma2 " << pretty_rat(summary.sigma2) << "\n";
        out << "formula match: " << (match ? "yes" : "NO") << "\n";
    } else {
        emit_json(out, env);
    }
    return match ? kExitOk : kExitMismatch;
}

// ---- gen --------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<long long>& params,
            std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw ValidationError("family '" + family + "' expects " + std::to_string(count) +
                                  " parameter(s)");
        }
    };
    Graph g;
    if (family == "complete") {
        need(1);
        g = complete(params[0]);
    } else if (family == "star") {
        need(1);
        g = star(params[0]);
    } else if (family == "complete_bipartite") {
        need(2);
        g = complete_bipartite(params[0], params[1]);
    } else if (family == "matching") {
        need(1);
        g = matching(params[0]);
    } else if (family == "path") {
        need(1);
        g = path(params[0]);
    } else if (family == "empty") {
        need(1);
        g = empty_graph(params[0]);
    } else if (family == "gnm") {
        need(2);
        g = random_gnm(params[0], params[1], seed);
    } else if (family == "tree") {
        need(1);
        g = random_tree(params[0], seed);
    } else {
        throw ValidationError("unknown family '" + family + "'");
    }
    std::string text = serialize(g);
    if (out_path == "-") {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw ValidationError("cannot open output file '" + out_path + "'");
        }
        file << text;
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact second-order statistics of random induced subgraphs"};
    app.require_subcommand(1);

    std::string input_path = "-";
    bool pretty = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input_path, "edge-list file, or - for stdin");
        sub->add_flag("--pretty", pretty, "human-readable table instead of JSON");
    };

    auto* sub_moments = app.add_subcommand("moments", "first two binomial moments per c");
    std::string c_range_text;
    add_common(sub_moments);
    sub_moments->add_option("--c", c_range_text, "subset order, N or A..B")->required();

    auto* sub_bounds = app.add_subcommand("bounds", "certified densest/sparsest size bounds");
    long long bounds_c = 0;
    long long ell_override = 0, u_override = 0;
    add_common(sub_bounds);
    sub_bounds->add_option("--c", bounds_c, "subset order")->required();
    auto* ell_opt = sub_bounds->add_option("--ell", ell_override, "override ell_star");
    auto* u_opt = sub_bounds->add_option("--u", u_override, "override u_star");

    auto* sub_tails = app.add_subcommand("tails", "tail probability bounds at threshold t");
    long long tails_c = 0, tails_t = 0;
    bool diagnostics = false;
    add_common(sub_tails);
    sub_tails->add_option("--c", tails_c, "subset order")->required();
    sub_tails->add_option("--t", tails_t, "edge threshold")->required();
    sub_tails->add_flag("--diagnostics", diagnostics, "include alternative printed forms");

    auto* sub_count = app.add_subcommand("count", "upper bounds on trivial-subgraph counts");
    std::string kind_name;
    long long count_c = 0;
    add_common(sub_count);
    sub_count->add_option("--kind", kind_name,
                          "independent_sets|cliques|subtrees|balanced_bicliques")
        ->required();
    auto* count_c_opt = sub_count->add_option("--c", count_c, "single subset order");

    auto* sub_signif = app.add_subcommand("significance", "hyper/hypo-density test");
    std::string community_inline, community_file, alpha_text = "0.05";
    add_common(sub_signif);
    sub_signif->add_option("--community", community_inline, "comma-separated vertex labels");
    sub_signif->add_option("--community-file", community_file, "one vertex label per line");
    sub_signif->add_option("--alpha", alpha_text, "significance level in (0,1)");

    auto* sub_oracle = app.add_subcommand("oracle", "exhaustive distribution + self-test");
    long long oracle_c = 0;
    long long budget = oracle::kDefaultBudget;
    add_common(sub_oracle);
    sub_oracle->add_option("--c", oracle_c, "subset order")->required();
    sub_oracle->add_option("--budget", budget, "max subsets to enumerate");

    auto* sub_gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    std::string family;
    std::vector<long long> params;
    std::uint64_t seed = 0;
    std::string out_path = "-";
    sub_gen->add_option("family", family,
                        "complete|star|complete_bipartite|matching|path|empty|gnm|tree")
        ->required();
    sub_gen->add_option("params", params, "family parameters");
    sub_gen->add_option("--seed", seed, "seed for random families");
    sub_gen->add_option("--out", out_path, "output file, or - for stdout");

    // CLI11's vector parse wants reversed arguments without the program name.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (app.got_subcommand(sub_gen)) {
            return cmd_gen(family, params, seed, out_path, out);
        }
        LoadedGraph lg = load_graph(input_path, in);
        if (app.got_subcommand(sub_moments)) {
            return cmd_moments(lg, parse_c_range(c_range_text), pretty, out);
        }
        if (app.got_subcommand(sub_bounds)) {
            std::optional<long long> ell, u;
            if (ell_opt->count() > 0) ell = ell_override;
            if (u_opt->count() > 0) u = u_override;
            return cmd_bounds(lg, bounds_c, ell, u, pretty, out);
        }
        if (app.got_subcommand(sub_tails)) {
            return cmd_tails(lg, tails_c, tails_t, diagnostics, pretty, out);
        }
        if (app.got_subcommand(sub_count)) {
            std::optional<long long> c;
            if (count_c_opt->count() > 0) c = count_c;
            return cmd_count(lg, kind_name, c, pretty, out);
        }
        if (app.got_subcommand(sub_signif)) {
            std::vector<int> community =
                resolve_community(lg.parsed, community_inline, community_file, in);
            return cmd_significance(lg, community, Rational::parse(alpha_text), pretty, out);
        }
        if (app.got_subcommand(sub_oracle)) {
            return cmd_oracle(lg, oracle_c, budget, pretty, out);
        }
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    err << "error: no command given\n";
    return kExitValidation;
}

} // namespace cli
} // namespace sgm
