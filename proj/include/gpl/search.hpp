#ifndef GPL_SEARCH_HPP
#define GPL_SEARCH_HPP

#include <chrono>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpl/curve.hpp"
#include "gpl/packing.hpp"
#include "gpl/rat.hpp"

namespace gpl {

/// Sweep description: which types, up to which genus, over which groups.
/// Completeness is catalog-limited: only groups present in the catalog are
/// examined, and reports say so.
struct SearchSpec {
    long long max_genus = 2;
    std::vector<CurveType> types; // empty means the eight exceptional types
    std::vector<std::shared_ptr<const FiniteGroup>> catalog;
    std::chrono::milliseconds per_instance_budget{60000};
    bool require_distinct = false;
};

/// Best packing found for one (type, genus, group) cell.
struct SearchRecord {
    CurveType type;
    long long genus = 0;
    std::string group_name;
    long long vector_classes = 0; // classes examined
    int best_m = 0;
    std::vector<int> best_vector; // a generating vector achieving best_m
    Rat ratio;                    // best_m / (genus - 1)
    Rat best_slope;               // simple Galois slope with all indices 3
    bool truncated = false;
};

/// Catalog members whose order matches the one forced by the Hurwitz
/// formula for (type, genus); empty when that order is not a positive
/// integer or no catalog group has it.
std::vector<std::shared_ptr<const FiniteGroup>> groups_for(
    const CurveType& type, long long genus,
    std::span<const std::shared_ptr<const FiniteGroup>> catalog);

/// Runs the sweep. Instances are independent and solved concurrently; the
/// result list is a deterministic function of the spec, sorted by
/// (type, genus, group name). Ratios are checked against the exceptional
/// table coefficients (3 for non-exceptional types); exceeding one is a
/// hard internal error.
std::vector<SearchRecord> run_search(const SearchSpec& spec);

/// Per-type aggregation of a record list.
struct RatioRow {
    CurveType type;
    Rat max_ratio;
    std::string witness_group;
    long long witness_genus = 0;
    long long genus_min = 0;
    long long genus_max = 0;
};

std::vector<RatioRow> ratio_table(std::span<const SearchRecord> records);

/// Header metadata repeated at the top of every report.
struct ReportContext {
    std::vector<std::string> catalog_names;
    long long max_genus = 2;
    bool require_distinct = false;
    long long budget_seconds = 60;
};

enum class ReportFormat { text, csv };

void write_records(std::ostream& out, std::span<const SearchRecord> records,
                   const ReportContext& context, ReportFormat format);
void write_ratio_table(std::ostream& out, std::span<const RatioRow> rows,
                       const ReportContext& context, ReportFormat format);

} // namespace gpl

#endif
