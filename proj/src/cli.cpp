#include "gpl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "gpl/curve.hpp"
#include "gpl/errors.hpp"
#include "gpl/group.hpp"
#include "gpl/packing.hpp"
#include "gpl/search.hpp"
#include "gpl/slope.hpp"
#include "gpl/verify.hpp"

namespace gpl {

namespace {

std::string bracket_list(std::span<const int> xs) {
    std::string s = "[";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "]";
}

std::chrono::milliseconds solver_budget() {
    const char* env = std::getenv("GPL_TIME_BUDGET");
    if (!env || !*env) return std::chrono::milliseconds(60000);
    char* end = nullptr;
    const long seconds = std::strtol(env, &end, 10);
    if (!end || *end != '\0' || seconds <= 0)
        throw Error("GPL_TIME_BUDGET must be a positive integer number of seconds");
    return std::chrono::seconds(seconds);
}

std::vector<std::shared_ptr<const FiniteGroup>> load_catalogs(const std::vector<std::string>& files) {
    std::vector<std::shared_ptr<const FiniteGroup>> groups;
    for (const std::string& file : files) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open catalog file '" + file + "'");
        try {
            for (FiniteGroup& g : parse_catalog(in))
                groups.push_back(std::make_shared<const FiniteGroup>(std::move(g)));
        } catch (const ParseError& e) {
            throw Error("ParseError: " + file + ": " + e.what());
        }
    }
    return groups;
}

/// Builtin specs win over catalog names; catalog groups are found by name.
std::shared_ptr<const FiniteGroup> resolve_group(
    const std::string& spec, const std::vector<std::shared_ptr<const FiniteGroup>>& catalog) {
    try {
        return std::make_shared<const FiniteGroup>(builtin(spec));
    } catch (const UnsupportedSpec&) {
        for (const auto& g : catalog)
            if (g->name() == spec) return g;
        throw UnsupportedSpec("'" + spec + "' is neither a builtin spec nor a catalog group name");
    }
}

void cmd_types(std::ostream& out, const std::string& format) {
    const auto table = enumerate_exceptional_types();
    if (format == "csv") {
        out << "type,m_bound,order\n";
        for (const ExceptionalType& row : table)
            out << '"' << row.type.paren() << "\"," << row.m_coefficient << "(g-1),"
                << row.order_coefficient << "(g-1)\n";
    } else {
        for (const ExceptionalType& row : table)
            out << row.type.paren() << ' ' << row.m_coefficient << "(g-1) "
                << row.order_coefficient << "(g-1)\n";
    }
}

void cmd_genus(std::ostream& out, long long order, const std::string& type_text) {
    const CurveType type = parse_curve_type(type_text);
    out << riemann_hurwitz_genus(order, type.quotient_genus(), type.branch_orders()) << "\n";
}

void cmd_vectors(std::ostream& out, const std::string& group_spec, const std::string& type_text,
                 bool require_distinct, const std::vector<std::string>& catalog_files) {
    const auto catalog = load_catalogs(catalog_files);
    const auto group = resolve_group(group_spec, catalog);
    const CurveType type = parse_curve_type(type_text);
    out << "group " << group->name() << " order " << group->order() << "\n";
    out << "type " << type.paren() << "\n";
    const auto vectors = enumerate_generating_vectors(*group, type, require_distinct);
    if (vectors.empty()) {
        out << "no vectors\n";
        return;
    }
    for (size_t i = 0; i < vectors.size(); ++i)
        out << "class " << i + 1 << " " << bracket_list(vectors[i].elements) << "\n";
    out << vectors.size() << (vectors.size() == 1 ? " class\n" : " classes\n");
}

void cmd_pack(std::ostream& out, const std::string& group_spec, const std::string& type_text,
              bool require_distinct, const std::vector<std::string>& catalog_files) {
    const auto catalog = load_catalogs(catalog_files);
    const auto group = resolve_group(group_spec, catalog);
    const CurveType type = parse_curve_type(type_text);
    out << "group " << group->name() << " order " << group->order() << "\n";
    const auto vectors = enumerate_generating_vectors(*group, type, require_distinct);
    if (vectors.empty()) {
        out << "type " << type.paren() << "\n";
        out << "no vectors\n";
        return;
    }
    PackingOptions options;
    options.time_budget = solver_budget();

    const long long genus = riemann_hurwitz_genus(group->order(), 0, type.branch_orders());
    if (genus < 2) throw GenusTooSmall("derived curve genus " + std::to_string(genus) + " is below 2");
    out << "type " << type.paren() << " genus " << genus << " mu-bound "
        << mu_upper_bound(group->order(), type.branch_orders().back()) << "\n";

    int best_m = 0;
    bool truncated = false;
    for (size_t i = 0; i < vectors.size(); ++i) {
        const CurveAction action = CurveAction::create(*group, type, vectors[i].elements);
        const PackingResult result = max_packing(*group, action.fixed_set, options);
        out << "class " << i + 1 << " vector " << bracket_list(vectors[i].elements) << " m "
            << result.m << " ratio " << packing_ratio(result.m, genus) << " witness "
            << bracket_list(result.witness) << " nodes " << result.nodes_explored
            << (result.time_bounded ? " truncated" : "") << "\n";
        best_m = std::max(best_m, result.m);
        truncated = truncated || result.time_bounded;
    }
    out << "best m " << best_m << " ratio " << packing_ratio(best_m, genus)
        << (truncated ? " (time-bounded: lower bound)" : "") << "\n";
}

void cmd_slope(std::ostream& out, const std::string& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open configuration file '" + file + "'");
    AdmissibleConfiguration config = [&] {
        try {
            return parse_configuration(in);
        } catch (const ParseError& e) {
            throw Error("ParseError: " + file + ": " + e.what());
        }
    }();

    out << "d " << config.d() << " e1 " << config.e1() << " e2 " << config.e2() << " components "
        << config.num_components() << "\n";
    out << "galois " << (config.galois() ? "yes" : "no") << " simple "
        << (config.simple() ? "yes" : "no") << " very-simple "
        << (config.very_simple() ? "yes" : "no") << "\n";
    const SurfaceInvariants inv = invariants(config);
    out << "c2 " << inv.c2 << "\n";
    out << "c1^2 " << inv.c1sq << "\n";
    out << "sigma " << inv.sigma << "\n";
    out << "slope " << inv.slope << "\n";
    out << "abstract-slope " << abstract_slope(config) << "\n";

    if (!config.galois() || !config.simple()) {
        out << "slopebound not-applicable (requires a simple Galois configuration)\n";
        return;
    }
    const long long genus = config.genus_b2();
    const long long m = config.num_components();
    if (m == 0 || m > 3 * (genus - 1)) {
        out << "slopebound not-applicable (m " << m << " outside 1..3(g-1) " << 3 * (genus - 1)
            << ")\n";
        return;
    }
    std::vector<int> r_list;
    for (const BranchComponent& comp : config.components()) r_list.push_back(comp.strata.front().r);
    const SlopeBoundCheck check = check_slope_bound(genus, r_list);
    out << "slopebound m " << m << " max 3(g-1) " << 3 * (genus - 1) << " verdict "
        << (check.verdict == BoundVerdict::equal ? "equal" : "below") << " slope " << check.slope
        << "\n";
}

void cmd_search(std::ostream& out, long long max_genus, const std::vector<std::string>& type_texts,
                const std::vector<std::string>& builtin_specs,
                const std::vector<std::string>& catalog_files, bool require_distinct,
                const std::string& format, bool show_ratio_table) {
    SearchSpec spec;
    spec.max_genus = max_genus;
    spec.require_distinct = require_distinct;
    spec.per_instance_budget = solver_budget();
    for (const std::string& t : type_texts) spec.types.push_back(parse_curve_type(t));

    for (const std::string& b : builtin_specs)
        spec.catalog.push_back(std::make_shared<const FiniteGroup>(builtin(b)));
    for (auto& g : load_catalogs(catalog_files)) spec.catalog.push_back(std::move(g));
    // search results are deduplicated by name only
    std::vector<std::shared_ptr<const FiniteGroup>> unique;
    for (auto& g : spec.catalog) {
        bool dup = false;
        for (const auto& u : unique) dup = dup || u->name() == g->name();
        if (!dup) unique.push_back(std::move(g));
    }
    spec.catalog = std::move(unique);

    ReportContext context;
    context.max_genus = spec.max_genus;
    context.require_distinct = spec.require_distinct;
    context.budget_seconds = spec.per_instance_budget.count() / 1000;
    for (const std::string& b : builtin_specs) context.catalog_names.push_back("builtin:" + b);
    for (const std::string& f : catalog_files) context.catalog_names.push_back("file:" + f);

    const auto records = run_search(spec);
    const ReportFormat rf = format == "csv" ? ReportFormat::csv : ReportFormat::text;
    if (show_ratio_table) {
        const auto rows = ratio_table(records);
        write_ratio_table(out, rows, context, rf);
    } else {
        write_records(out, records, context, rf);
    }
}

int cmd_verify_paper(std::ostream& out, std::ostream& err) {
    const auto steps = run_paper_verification();
    for (size_t i = 0; i < steps.size(); ++i) {
        const VerificationStep& s = steps[i];
        out << (s.ok ? "ok " : "FAIL ") << i + 1 << " " << s.name << " (" << s.detail << ")\n";
        if (!s.ok) {
            err << "error: VerificationFailed: " << s.name << "\n";
            return 1;
        }
    }
    out << "all " << steps.size() << " assertions passed\n";
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"packings of graphs of automorphisms and slopes of branched covers"};
    app.name("gpl");
    app.require_subcommand(1);

    std::string format = "text";
    std::vector<std::string> catalog_files;
    std::vector<std::string> type_texts;
    std::vector<std::string> builtin_specs;
    bool require_distinct = false;
    bool show_ratio_table = false;
    long long order = 0, max_genus = 2;
    std::string group_spec, type_text, config_file;

    CLI::App* types = app.add_subcommand("types", "print the exceptional-type table");
    types->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
    types->add_option("--catalog", catalog_files);

    CLI::App* genus = app.add_subcommand("genus", "evaluate the Hurwitz genus formula");
    genus->add_option("order", order)->required();
    genus->add_option("type", type_text)->required();
    genus->add_option("--catalog", catalog_files);

    CLI::App* vectors = app.add_subcommand("vectors", "enumerate generating vector classes");
    vectors->add_option("group", group_spec)->required();
    vectors->add_option("type", type_text)->required();
    vectors->add_flag("--require-distinct", require_distinct);
    vectors->add_option("--catalog", catalog_files);

    CLI::App* pack = app.add_subcommand("pack", "solve the maximum packing per vector class");
    pack->add_option("group", group_spec)->required();
    pack->add_option("type", type_text)->required();
    pack->add_flag("--require-distinct", require_distinct);
    pack->add_option("--catalog", catalog_files);

    CLI::App* slope = app.add_subcommand("slope", "invariants and slope of a configuration file");
    slope->add_option("file", config_file)->required();
    slope->add_option("--catalog", catalog_files);

    CLI::App* search = app.add_subcommand("search", "sweep (group,type) pairs up to a genus bound");
    search->add_option("--max-genus", max_genus)->check(CLI::Range(2LL, 1000000LL));
    search->add_option("--type", type_texts);
    search->add_option("--builtin", builtin_specs);
    search->add_option("--catalog", catalog_files);
    search->add_flag("--require-distinct", require_distinct);
    search->add_flag("--ratio-table", show_ratio_table);
    search->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in verification scenario");
    verify->add_option("--catalog", catalog_files);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (types->parsed()) {
            cmd_types(out, format);
        } else if (genus->parsed()) {
            cmd_genus(out, order, type_text);
        } else if (vectors->parsed()) {
            cmd_vectors(out, group_spec, type_text, require_distinct, catalog_files);
        } else if (pack->parsed()) {
            cmd_pack(out, group_spec, type_text, require_distinct, catalog_files);
        } else if (slope->parsed()) {
            cmd_slope(out, config_file);
        } else if (search->parsed()) {
            cmd_search(out, max_genus, type_texts, builtin_specs, catalog_files, require_distinct,
                       format, show_ratio_table);
        } else if (verify->parsed()) {
            return cmd_verify_paper(out, err);
        }
    } catch (const NonIntegralGenus& e) {
        err << "error: NonIntegralGenus: " << e.what() << "\n";
        return 1;
    } catch (const NegativeGenus& e) {
        err << "error: NegativeGenus: " << e.what() << "\n";
        return 1;
    } catch (const GenusTooSmall& e) {
        err << "error: GenusTooSmall: " << e.what() << "\n";
        return 1;
    } catch (const NonDivisor& e) {
        err << "error: NonDivisor: " << e.what() << "\n";
        return 1;
    } catch (const UnsupportedSpec& e) {
        err << "error: UnsupportedSpec: " << e.what() << "\n";
        return 1;
    } catch (const NotAGroup& e) {
        err << "error: NotAGroup: " << e.what() << "\n";
        return 1;
    } catch (const OrderCapExceeded& e) {
        err << "error: OrderCapExceeded: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionViolated& e) {
        err << "error: PreconditionViolated: " << e.what() << "\n";
        return 1;
    } catch (const ZeroDenominator& e) {
        err << "error: ZeroDenominator: " << e.what() << "\n";
        return 1;
    } catch (const InconsistentDegrees& e) {
        err << "error: InconsistentDegrees: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace gpl
