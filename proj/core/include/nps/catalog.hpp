#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nps/exclusion.hpp"

namespace nps {

enum class StatusKind { Exists, NotExists, Open };

std::string status_name(StatusKind k);
StatusKind status_from_name(std::string_view s);

/// One table cell. Almost rows are keyed by n = number of nonzero entries
/// (the sequence period is n+1), following the source tabulation convention.
struct StatusRow {
    uint32_t n = 0;
    uint32_t p = 0;
    int64_t gamma = 0;
    Mode mode = Mode::pary;
    StatusKind status = StatusKind::Open;
    std::string reason;
};

/// Known existence construction, as a pure predicate over (n, p) for a fixed
/// (gamma, mode), with a literature citation.
struct ConstructionFact {
    int64_t gamma;
    Mode mode;
    std::string name;
    std::string provenance;
    bool (*applies)(uint32_t n, uint32_t p);
};

std::vector<ConstructionFact> construction_facts();

/// Precedence pipeline: construction facts / stored verified witnesses /
/// external provenance-only facts decide Exists; the exclusion engine or a
/// stored search/multiplier certificate decides NotExists; otherwise Open.
/// A cell claimed by both sides is a hard engine error (std::logic_error).
StatusRow status(uint32_t n, uint32_t p, int64_t gamma, Mode mode);

/// Primes appearing as table rows for a given n: divisors of n - gamma
/// (p-ary) resp. n - gamma - 1 (almost). The p-ary tables for gamma >= 0
/// carry odd p only; the gamma = -1 p-ary table and the almost tables carry
/// p = 2 rows as well, matching the source tables.
std::vector<uint32_t> candidate_primes(uint32_t n, int64_t gamma, Mode mode);

std::vector<StatusRow> generate_table(int64_t gamma, Mode mode, uint32_t n_max = 100);

// stable emitters (rows ordered by n then p)
std::string table_csv(const std::vector<StatusRow>& rows);
std::string table_markdown(const std::vector<StatusRow>& rows);
std::string table_json(const std::vector<StatusRow>& rows);

/// Parses the CSV schema n,p,gamma,mode,status,reason; '#' lines are comments.
std::vector<StatusRow> parse_table_csv(const std::string& text);
std::vector<StatusRow> load_golden_csv(const std::string& path);

enum class DiffSeverity { Hard, Info };

struct DiffEntry {
    std::string cell;
    DiffSeverity severity;
    std::string ours;
    std::string golden;
};

struct DiffReport {
    std::vector<DiffEntry> entries;
    size_t hard_count() const;
    std::string render() const;
};

/// Status disagreements (and missing/extra rows) are Hard; differing reason
/// strings (e.g. a different certificate parameter choice) are Info.
DiffReport diff_against_golden(const std::vector<StatusRow>& ours,
                               const std::vector<StatusRow>& golden);

}  // namespace nps
