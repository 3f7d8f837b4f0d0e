#ifndef CFZ_REPORT_HPP
#define CFZ_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cfz/complex_poly.hpp"

namespace cfz {

// ---- diagnostics (CFZ_LOG = error | info | debug) ----

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };
LogLevel log_level();
void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

// ---- parsing ----

/// Complex token: "a", "a+bi", "a-bi" (position-annotated DomainError on
/// malformed input).
Complex parse_complex(const std::string& token);
std::vector<Complex> parse_complex_list(const std::string& csv);

/// Inclusive "start:stop:step" (step defaults to 1 when omitted).
struct NRange {
    int start = 0;
    int stop = 0;
    int step = 1;
    std::vector<int> values() const;
    bool operator==(const NRange&) const = default;
};
NRange parse_n_range(const std::string& text);

// ---- configuration echo ----

struct RunConfig {
    std::string subcommand;
    std::vector<Complex> taus;
    std::vector<Complex> mus;
    std::optional<int> n;
    std::optional<NRange> n_range;
    std::optional<int> l;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out_path;
    std::string csv_path;

    bool operator==(const RunConfig&) const = default;
};

nlohmann::json to_json(const RunConfig& cfg);
RunConfig config_from_json(const nlohmann::json& j);

// ---- experiment records ----

struct SweepRecord {
    int n = 0;
    double E_n = 0.0;
    double gamma_abs = 0.0;
    double E_gap = 0.0;
    double sup_gap = 0.0;
    int iterations = 0;
    double wall_time = 0.0;

    bool operator==(const SweepRecord&) const = default;
};

struct GeomFit {
    double ratio = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // RMS of the log-linear fit
    int dropped = 0;       // points at or below the floor, removed with a note
};

/// Least-squares line on (n, log gap); ratio = exp(slope). Gaps at or below
/// `floor` are dropped (default: only exact zeros); fewer than 5 surviving
/// points is a DomainError.
GeomFit fit_geometric(const std::vector<std::pair<int, double>>& series, double floor = 0.0);

nlohmann::json to_json(const SweepRecord& r);
SweepRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GeomFit& f);

/// Skeleton report: {"schema":1, "config": ..., "results": ...,
/// "meta": {"version", "seed"}}.
nlohmann::json make_report(const RunConfig& cfg, nlohmann::json results);

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

// ---- emission ----

/// 17-significant-digit decimal form used in CSV output.
std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& content);

/// CSV with a header row, comma separators, LF line endings, %.17g floats.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

} // namespace cfz

#endif
