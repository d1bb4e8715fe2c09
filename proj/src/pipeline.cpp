#include "toricgen/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "toricgen/notation.hpp"

namespace toricgen {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string point_text(const LatticePoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string rational_point_text(const RationalPoint& p) {
    return "(" + p.x.str() + "," + p.y.str() + ")";
}

struct PolygonBuild {
    LatticePolygon polygon;
    std::optional<LdpInfo> ldp;
};

// Shared front half of every job: canonical hull, then optionally the LDP
// polar/dilation route.
PolygonBuild build_polygon(const JobSpec& job) {
    const LatticePolygon hull = canonicalize(job.vertices);
    PolygonBuild out;
    if (job.route == Route::ldp) {
        const LdpPolygon q = validate_ldp(hull);
        const RationalPolygon dual = polar(q);
        const Int ell = index(dual);
        const Int k = job.dilate_factor.value_or(ell);
        if (k < 1 || k % ell != 0)
            throw ParseError("dilation factor on the ldp route must be a positive multiple of the index " +
                             std::to_string(ell));
        LatticePolygon p = dilated_polar(q);
        if (k != ell) p = dilate(p, k / ell);
        out.ldp = LdpInfo{q.polygon().vertices(), dual.vertices(), ell, k};
        out.polygon = std::move(p);
    } else {
        const Int k = job.dilate_factor.value_or(1);
        if (k < 1) throw ParseError("dilation factor must be >= 1");
        out.polygon = (k == 1) ? hull : dilate(hull, k);
    }
    return out;
}

void fill_geometry(ResultReport& rep, const JobSpec& job, PolygonBuild&& build) {
    rep.route = job.route;
    rep.polygon = std::move(build.polygon);
    rep.ldp = std::move(build.ldp);
    rep.points = lattice_points(rep.polygon);
    rep.delta = static_cast<Int>(rep.points.size()) - 1;
    rep.boundary_count = boundary_lattice_point_count(rep.polygon);
    rep.gate = koelman_gate(rep.polygon);
}

OracleReport run_oracle(const MonomialBasis& basis, Int expected_count) {
    const RelationMatrix all = enumerate_relations(basis, RelationMode::all_pairs);
    const std::vector<int> pivots = pivot_columns(all.to_matrix());

    // findBinom on the pivot columns: each column already names its +1/-1
    // rows, which are the two monomials of the binomial
    std::vector<RelationColumn> extracted;
    extracted.reserve(pivots.size());
    for (int c : pivots) extracted.push_back(all.columns[static_cast<std::size_t>(c)]);

    std::vector<RelationColumn> star = enumerate_relations(basis, RelationMode::fiber_star).columns;
    std::sort(extracted.begin(), extracted.end());
    std::sort(star.begin(), star.end());

    OracleReport rep;
    rep.all_pairs_columns = static_cast<Int>(all.columns.size());
    rep.all_pairs_rank = static_cast<Int>(pivots.size());
    rep.matches_primary = extracted == star;
    rep.passed = rep.matches_primary && rep.all_pairs_rank == expected_count;
    return rep;
}

}  // namespace

bool ResultReport::passed() const {
    const bool verify_ok = verification_full ? verification.all_passed() : verification.count_matches;
    const bool oracle_ok = !oracle || oracle->passed;
    return verify_ok && oracle_ok;
}

ResultReport run(const JobSpec& job) {
    const auto start = std::chrono::steady_clock::now();

    ResultReport rep;
    rep.count_only = job.count_only;
    fill_geometry(rep, job, build_polygon(job));

    if (!rep.gate) {
        if (!job.force)
            throw GateFailed("polygon has " + std::to_string(rep.boundary_count) +
                             " boundary lattice points (< 4): quadratic generation is not "
                             "guaranteed; pass --force to compute the degree-2 part anyway");
        rep.gate_forced = true;
    }

    const MonomialBasis basis = build_basis(rep.points);
    rep.beta = beta_formula(rep.polygon);

    if (job.count_only) {
        rep.generator_count = generator_count(basis);
        rep.verification.generators = rep.generator_count;
        rep.verification.beta = rep.beta;
        rep.verification.count_matches = (rep.generator_count == rep.beta);
        rep.verification_full = false;
    } else {
        rep.generators = minimal_generators(basis);
        rep.generator_count = static_cast<Int>(rep.generators.size());
        rep.verification = verify_generators(rep.polygon, basis, rep.generators);
        rep.verification_full = true;
    }

    if (rep.gate && rep.generator_count != rep.beta)
        throw std::logic_error("generator count disagrees with the closed formula");

    if (job.oracle) rep.oracle = run_oracle(basis, rep.generator_count);

    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

ResultReport check_external(const JobSpec& job, std::string_view binomial_text) {
    const auto start = std::chrono::steady_clock::now();

    ResultReport rep;
    rep.external = true;
    fill_geometry(rep, job, build_polygon(job));

    const MonomialBasis basis = build_basis(rep.points);
    rep.beta = beta_formula(rep.polygon);
    rep.generators = resolve_binomials(basis, parse_binomials(binomial_text));
    rep.generator_count = static_cast<Int>(rep.generators.size());
    rep.verification = verify_generators(rep.polygon, basis, rep.generators);
    rep.verification_full = true;

    if (job.oracle) rep.oracle = run_oracle(basis, rep.generator_count);

    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

PolarReport run_polar(const JobSpec& job) {
    const LatticePolygon hull = canonicalize(job.vertices);
    const LdpPolygon q = validate_ldp(hull);
    const RationalPolygon dual = polar(q);

    PolarReport rep;
    rep.ldp_vertices = q.polygon().vertices();
    rep.polar_vertices = dual.vertices();
    rep.index = index(dual);
    const LatticePolygon p = dilated_polar(q);
    rep.dilated_vertices = p.vertices();
    rep.delta = static_cast<Int>(lattice_points(p).size()) - 1;
    rep.boundary_count = boundary_lattice_point_count(p);
    rep.gate = koelman_gate(p);
    return rep;
}

std::vector<LatticePoint> parse_vertices(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty vertex input");

    std::vector<LatticePoint> vertices;
    if (text[first] == '{' || text[first] == '[') {
        ordered_json doc;
        try {
            doc = ordered_json::parse(text);
        } catch (const std::exception& e) {
            throw ParseError(std::string("invalid JSON vertex input: ") + e.what());
        }
        if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
            throw ParseError("JSON vertex input must be an object with a \"vertices\" array");
        for (const auto& v : doc["vertices"]) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
                !v[1].is_number_integer())
                throw ParseError("each vertex must be an array of two integers");
            vertices.push_back({v[0].get<Int>(), v[1].get<Int>()});
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::istringstream fields(line);
            Int x = 0, y = 0;
            std::string rest;
            if (!(fields >> x >> y) || (fields >> rest))
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected two integers separated by whitespace");
            vertices.push_back({x, y});
        }
    }
    if (vertices.empty()) throw ParseError("vertex input contains no vertices");
    return vertices;
}

namespace {

// --- plain ------------------------------------------------------------

std::string verification_line(const ResultReport& rep) {
    const auto& v = rep.verification;
    const auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    std::string line = "verification:";
    if (rep.verification_full) {
        line += std::string(" membership=") + mark(v.membership);
        line += std::string(" independence=") + mark(v.independence) + "(rank=" +
                std::to_string(v.generator_rank) + ")";
        line += std::string(" completeness=") + mark(v.completeness) + "(rank=" +
                std::to_string(v.relation_rank) + ")";
    }
    line += std::string(" count=") + mark(v.count_matches) + "(beta=" + std::to_string(v.beta) + ")";
    return line;
}

void append_geometry_plain(std::string& out, const ResultReport& rep) {
    out += "route: " + std::string(rep.route == Route::ldp ? "ldp" : "direct") + "\n";
    if (rep.ldp) {
        out += "ldp vertices:";
        for (const auto& v : rep.ldp->ldp_vertices) out += " " + point_text(v);
        out += "\npolar vertices:";
        for (const auto& v : rep.ldp->polar_vertices) out += " " + rational_point_text(v);
        out += "\nindex: " + std::to_string(rep.ldp->index) + "\n";
        out += "dilation: " + std::to_string(rep.ldp->dilation) + "\n";
    }
    out += "polygon:";
    for (const auto& v : rep.polygon.vertices()) out += " " + point_text(v);
    out += "\ndelta: " + std::to_string(rep.delta) + "\n";
    out += "boundary lattice points: " + std::to_string(rep.boundary_count) + "\n";
    out += std::string("koelman gate: ") +
           (rep.gate ? "passed" : (rep.gate_forced ? "FAILED (forced)" : "FAILED")) + "\n";
}

std::string render_plain(const ResultReport& rep) {
    std::string out;
    append_geometry_plain(out, rep);
    out += "beta formula: " + std::to_string(rep.beta) + "\n";
    out += "generator count: " + std::to_string(rep.generator_count) + "\n";
    if (!rep.count_only) {
        out += rep.external ? "generators (external):\n" : "generators:\n";
        for (const auto& g : rep.generators)
            out += "  " + binomial_text(rep.points, g, /*collapse_squares=*/true) + "\n";
    }
    out += verification_line(rep) + "\n";
    if (rep.oracle) {
        out += "oracle: columns=" + std::to_string(rep.oracle->all_pairs_columns) +
               " rank=" + std::to_string(rep.oracle->all_pairs_rank) +
               " matches=" + (rep.oracle->matches_primary ? "yes" : "NO") + "\n";
    }
    out += std::string("status: ") + (rep.passed() ? "ok" : "FAILED") + "\n";
    return out;
}

// --- latex --------------------------------------------------------------
// Generator lines carry nothing but the binomial itself, in the exact
// pattern z_{(i,j)}z_{(k,l)}-z_{(i',j')}z_{(k',l')}.

std::string render_latex(const ResultReport& rep) {
    std::string out;
    out += "% route: " + std::string(rep.route == Route::ldp ? "ldp" : "direct") + "\n";
    out += "% delta: " + std::to_string(rep.delta) + "\n";
    out += "% boundary lattice points: " + std::to_string(rep.boundary_count) + "\n";
    out += std::string("% koelman gate: ") +
           (rep.gate ? "passed" : (rep.gate_forced ? "FAILED (forced)" : "FAILED")) + "\n";
    out += "% beta formula: " + std::to_string(rep.beta) + "\n";
    out += "% generator count: " + std::to_string(rep.generator_count) + "\n";
    if (!rep.count_only)
        for (const auto& g : rep.generators)
            out += binomial_text(rep.points, g, /*collapse_squares=*/false) + "\n";
    out += "% " + verification_line(rep) + "\n";
    out += std::string("% status: ") + (rep.passed() ? "ok" : "FAILED") + "\n";
    return out;
}

// --- json ---------------------------------------------------------------

ordered_json point_json(const LatticePoint& p) { return ordered_json::array({p.x, p.y}); }

ordered_json points_json(const std::vector<LatticePoint>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) arr.push_back(point_json(p));
    return arr;
}

ordered_json render_json_doc(const ResultReport& rep) {
    ordered_json doc;
    doc["route"] = rep.route == Route::ldp ? "ldp" : "direct";
    doc["polygon"] = ordered_json{{"vertices", points_json(rep.polygon.vertices())}};
    if (rep.ldp) {
        ordered_json polar_vertices = ordered_json::array();
        for (const auto& v : rep.ldp->polar_vertices)
            polar_vertices.push_back(ordered_json::array({v.x.str(), v.y.str()}));
        doc["ldp"] = ordered_json{{"vertices", points_json(rep.ldp->ldp_vertices)},
                                  {"polar_vertices", polar_vertices},
                                  {"index", rep.ldp->index},
                                  {"dilation", rep.ldp->dilation}};
    }
    doc["delta"] = rep.delta;
    doc["boundary_count"] = rep.boundary_count;
    doc["gate"] = rep.gate;
    doc["gate_forced"] = rep.gate_forced;
    doc["beta_formula"] = rep.beta;
    doc["generator_count"] = rep.generator_count;
    doc["lattice_points"] = points_json(rep.points);
    if (!rep.count_only) {
        ordered_json gens = ordered_json::array();
        for (const auto& g : rep.generators) {
            gens.push_back(ordered_json::array(
                {point_json(rep.points[static_cast<std::size_t>(g.plus.first)]),
                 point_json(rep.points[static_cast<std::size_t>(g.plus.second)]),
                 point_json(rep.points[static_cast<std::size_t>(g.minus.first)]),
                 point_json(rep.points[static_cast<std::size_t>(g.minus.second)])}));
        }
        doc["generators"] = gens;
    }
    ordered_json verification;
    if (rep.verification_full) {
        verification["membership"] = rep.verification.membership;
        verification["independence"] = rep.verification.independence;
        verification["completeness"] = rep.verification.completeness;
        verification["generator_rank"] = rep.verification.generator_rank;
        verification["relation_rank"] = rep.verification.relation_rank;
    }
    verification["count"] = rep.verification.count_matches;
    verification["beta"] = rep.verification.beta;
    verification["generator_count"] = rep.verification.generators;
    doc["verification"] = verification;
    if (rep.oracle) {
        doc["oracle"] = ordered_json{{"all_pairs_columns", rep.oracle->all_pairs_columns},
                                     {"all_pairs_rank", rep.oracle->all_pairs_rank},
                                     {"matches_primary", rep.oracle->matches_primary},
                                     {"passed", rep.oracle->passed}};
    }
    doc["passed"] = rep.passed();
    return doc;
}

}  // namespace

std::string render(const ResultReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::plain:
            return render_plain(report);
        case OutputFormat::latex:
            return render_latex(report);
        case OutputFormat::json:
            return render_json_doc(report).dump(2) + "\n";
    }
    throw std::logic_error("unknown output format");
}

std::string render(const PolarReport& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        ordered_json doc;
        ordered_json polar_vertices = ordered_json::array();
        for (const auto& v : report.polar_vertices)
            polar_vertices.push_back(ordered_json::array({v.x.str(), v.y.str()}));
        doc["ldp"] = ordered_json{{"vertices", points_json(report.ldp_vertices)}};
        doc["polar_vertices"] = polar_vertices;
        doc["index"] = report.index;
        doc["dilated_polar"] = ordered_json{{"vertices", points_json(report.dilated_vertices)}};
        doc["delta"] = report.delta;
        doc["boundary_count"] = report.boundary_count;
        doc["gate"] = report.gate;
        return doc.dump(2) + "\n";
    }
    // latex has nothing extra to offer here; fall through to plain
    std::string out;
    out += "ldp vertices:";
    for (const auto& v : report.ldp_vertices) out += " " + point_text(v);
    out += "\npolar vertices:";
    for (const auto& v : report.polar_vertices) out += " " + rational_point_text(v);
    out += "\nindex: " + std::to_string(report.index) + "\n";
    out += "dilated polar:";
    for (const auto& v : report.dilated_vertices) out += " " + point_text(v);
    out += "\ndelta: " + std::to_string(report.delta) + "\n";
    out += "boundary lattice points: " + std::to_string(report.boundary_count) + "\n";
    out += std::string("koelman gate: ") + (report.gate ? "passed" : "FAILED") + "\n";
    return out;
}

void write_file_atomic(const std::string& path, std::string_view content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace toricgen
