#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricgen/dual.hpp"
#include "toricgen/ideal.hpp"

namespace toricgen {

enum class Route { direct, ldp };
enum class OutputFormat { plain, latex, json };

// One unit of work for the pipeline; the CLI fills this in from flags.
struct JobSpec {
    std::vector<LatticePoint> vertices;
    Route route = Route::direct;
    OutputFormat format = OutputFormat::plain;
    bool count_only = false;
    bool oracle = false;  // also run the all-pairs + elimination cross-check
    bool force = false;   // downgrade a failed Koelman gate to a warning
    std::optional<Int> dilate_factor;  // default: 1 (direct), index (ldp)
};

struct LdpInfo {
    std::vector<LatticePoint> ldp_vertices;
    std::vector<RationalPoint> polar_vertices;
    Int index = 1;
    Int dilation = 1;  // the factor actually applied to the polar
};

// The exhaustive route: enumerate every in-fiber pair, then keep the pivot
// columns of an exact elimination. Cross-checked against the fiber-star set.
struct OracleReport {
    Int all_pairs_columns = 0;
    Int all_pairs_rank = 0;
    bool matches_primary = false;
    bool passed = false;
};

struct ResultReport {
    Route route = Route::direct;
    LatticePolygon polygon;  // the polygon actually analyzed
    std::optional<LdpInfo> ldp;
    std::vector<LatticePoint> points;  // lattice points indexing coordinates
    Int delta = 0;
    Int boundary_count = 0;
    bool gate = false;
    bool gate_forced = false;
    Int beta = 0;
    Int generator_count = 0;
    bool count_only = false;
    bool external = false;  // generators came from a supplied list
    std::vector<BinomialGenerator> generators;
    VerifyReport verification;
    bool verification_full = false;  // rank checks ran (not just the count)
    std::optional<OracleReport> oracle;
    double elapsed_seconds = 0.0;  // reported on stderr only, never in payloads

    bool passed() const;
};

struct PolarReport {
    std::vector<LatticePoint> ldp_vertices;
    std::vector<RationalPoint> polar_vertices;
    Int index = 1;
    std::vector<LatticePoint> dilated_vertices;
    Int delta = 0;
    Int boundary_count = 0;
    bool gate = false;
};

// canonicalize -> (validate_ldp -> polar -> index -> dilated polar) ->
// lattice points -> gate -> basis -> generators -> verification.
ResultReport run(const JobSpec& job);

// Validates an externally supplied binomial list against the polygon's
// ideal. The gate never blocks a check; its status is still reported.
ResultReport check_external(const JobSpec& job, std::string_view binomial_text);

PolarReport run_polar(const JobSpec& job);

// Vertex input: JSON {"vertices": [[x,y],...]} or plain text, one "x y" per
// line; auto-detected by the first non-space byte.
std::vector<LatticePoint> parse_vertices(std::string_view text);

std::string render(const ResultReport& report, OutputFormat format);
std::string render(const PolarReport& report, OutputFormat format);

// Writes via a temporary file and rename, so readers never see half a report.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace toricgen
