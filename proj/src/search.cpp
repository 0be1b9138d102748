#include "gpl/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "gpl/errors.hpp"
#include "gpl/slope.hpp"

namespace gpl {

std::vector<std::shared_ptr<const FiniteGroup>> groups_for(
    const CurveType& type, long long genus,
    std::span<const std::shared_ptr<const FiniteGroup>> catalog) {
    if (type.quotient_genus() != 0) throw Error("group search requires quotient genus 0");
    if (genus < 2) throw Error("group search requires genus >= 2");
    Rat chi(-2);
    for (int nu : type.branch_orders()) chi += Rat(nu - 1, nu);
    if (chi.sign() <= 0) return {};
    Rat forced = Rat(2 * genus - 2) / chi;
    if (!forced.is_integer()) return {};
    const Int order = forced.to_integer();
    std::vector<std::shared_ptr<const FiniteGroup>> matching;
    for (const auto& group : catalog)
        if (Int(group->order()) == order) matching.push_back(group);
    return matching;
}

namespace {

// The exceptional table coefficient caps the ratio for its type; everything
// else is capped by 3. A record above its cap means a solver defect.
Rat ratio_cap(const CurveType& type) {
    static const std::vector<ExceptionalType> table = enumerate_exceptional_types();
    for (const ExceptionalType& row : table)
        if (row.type == type) return Rat(row.m_coefficient);
    return Rat(3);
}

std::optional<SearchRecord> solve_cell(const CurveType& type, long long genus,
                                       const FiniteGroup& group, const SearchSpec& spec) {
    const auto vectors = enumerate_generating_vectors(group, type, spec.require_distinct);
    if (vectors.empty()) return std::nullopt;

    SearchRecord record;
    record.type = type;
    record.genus = genus;
    record.group_name = group.name();
    record.vector_classes = static_cast<long long>(vectors.size());

    PackingOptions options;
    options.time_budget = spec.per_instance_budget;
    for (const GeneratingVector& vec : vectors) {
        const auto fixed = fixed_point_elements(group, vec.elements);
        const PackingResult solved = max_packing(group, fixed, options);
        record.truncated = record.truncated || solved.time_bounded;
        if (solved.m > record.best_m) {
            record.best_m = solved.m;
            record.best_vector = vec.elements;
        }
    }
    record.ratio = packing_ratio(record.best_m, genus);
    std::vector<int> threes(record.best_m, 3);
    record.best_slope = simple_galois_slope(genus, threes);
    if (!record.truncated && record.ratio > ratio_cap(type))
        throw Error("packing ratio " + record.ratio.str() + " exceeds the table bound for " + type.paren() + " (internal inconsistency)");
    return record;
}

} // namespace

std::vector<SearchRecord> run_search(const SearchSpec& spec) {
    if (spec.max_genus < 2) throw Error("search requires max_genus >= 2");
    std::vector<CurveType> types = spec.types;
    if (types.empty())
        for (const ExceptionalType& row : enumerate_exceptional_types()) types.push_back(row.type);
    for (const CurveType& type : types)
        if (type.quotient_genus() != 0) throw Error("search types must have quotient genus 0");

    struct Cell {
        CurveType type;
        long long genus;
        std::shared_ptr<const FiniteGroup> group;
    };
    std::vector<Cell> cells;
    for (const CurveType& type : types)
        for (long long genus = 2; genus <= spec.max_genus; ++genus)
            for (const auto& group : groups_for(type, genus, spec.catalog))
                cells.push_back(Cell{type, genus, group});

    // cells are independent work items; workers fill disjoint slots
    // TODO: split per-vector solves across workers; per-cell granularity
    // wastes a core when a catalog has one dominant cell
    std::vector<std::optional<SearchRecord>> slots(cells.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            try {
                slots[i] = solve_cell(cells[i].type, cells[i].genus, *cells[i].group, spec);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned nthreads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                              static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<SearchRecord> records;
    for (auto& slot : slots)
        if (slot) records.push_back(std::move(*slot));
    std::sort(records.begin(), records.end(), [](const SearchRecord& a, const SearchRecord& b) {
        if (a.type != b.type) return a.type < b.type;
        if (a.genus != b.genus) return a.genus < b.genus;
        return a.group_name < b.group_name;
    });
    return records;
}

std::vector<RatioRow> ratio_table(std::span<const SearchRecord> records) {
    std::map<CurveType, RatioRow> rows;
    for (const SearchRecord& record : records) {
        auto [it, fresh] = rows.try_emplace(record.type);
        RatioRow& row = it->second;
        if (fresh) {
            row.type = record.type;
            row.max_ratio = record.ratio;
            row.witness_group = record.group_name;
            row.witness_genus = record.genus;
            row.genus_min = row.genus_max = record.genus;
        } else {
            row.genus_min = std::min(row.genus_min, record.genus);
            row.genus_max = std::max(row.genus_max, record.genus);
            if (record.ratio > row.max_ratio) {
                row.max_ratio = record.ratio;
                row.witness_group = record.group_name;
                row.witness_genus = record.genus;
            }
        }
    }
    std::vector<RatioRow> out;
    for (auto& [type, row] : rows) out.push_back(std::move(row));
    return out;
}

namespace {

void write_header(std::ostream& out, const ReportContext& context) {
    out << "# packing search report\n";
    out << "# catalog-limited: results cover only the groups supplied by the catalog\n";
    out << "# catalog:";
    if (context.catalog_names.empty()) out << " (empty)";
    for (const std::string& name : context.catalog_names) out << " " << name;
    out << "\n";
    out << "# settings: max_genus=" << context.max_genus
        << " require_distinct=" << (context.require_distinct ? "yes" : "no")
        << " budget=" << context.budget_seconds << "s\n";
}

std::string csv_quote(const std::string& field) {
    return '"' + field + '"';
}

} // namespace

void write_records(std::ostream& out, std::span<const SearchRecord> records,
                   const ReportContext& context, ReportFormat format) {
    write_header(out, context);
    if (format == ReportFormat::csv) {
        out << "type,genus,group,classes,best_m,ratio,best_slope,truncated\n";
        for (const SearchRecord& r : records)
            out << csv_quote(r.type.paren()) << ',' << r.genus << ',' << r.group_name << ','
                << r.vector_classes << ',' << r.best_m << ',' << r.ratio << ',' << r.best_slope
                << ',' << (r.truncated ? "yes" : "no") << '\n';
    } else {
        out << "# columns: type genus group classes best_m ratio best_slope truncated\n";
        for (const SearchRecord& r : records)
            out << r.type.paren() << ' ' << r.genus << ' ' << r.group_name << ' '
                << r.vector_classes << ' ' << r.best_m << ' ' << r.ratio << ' ' << r.best_slope
                << ' ' << (r.truncated ? "yes" : "no") << '\n';
    }
}

void write_ratio_table(std::ostream& out, std::span<const RatioRow> rows,
                       const ReportContext& context, ReportFormat format) {
    write_header(out, context);
    if (format == ReportFormat::csv) {
        out << "type,max_ratio,witness_group,witness_genus,genus_range\n";
        for (const RatioRow& row : rows)
            out << csv_quote(row.type.paren()) << ',' << row.max_ratio << ',' << row.witness_group
                << ',' << row.witness_genus << ',' << row.genus_min << ".." << row.genus_max << '\n';
    } else {
        out << "# columns: type max_ratio witness_group witness_genus genus_range\n";
        for (const RatioRow& row : rows)
            out << row.type.paren() << ' ' << row.max_ratio << ' ' << row.witness_group << ' '
                << row.witness_genus << ' ' << row.genus_min << ".." << row.genus_max << '\n';
    }
}

} // namespace gpl
