#include "cfz/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cfz/error.hpp"

namespace cfz {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("CFZ_LOG");
        if (!env)
            return LogLevel::Error;
        const std::string v(env);
        if (v == "debug")
            return LogLevel::Debug;
        if (v == "info")
            return LogLevel::Info;
        return LogLevel::Error;
    }();
    return level;
}

void log_error(const std::string& msg) { std::cerr << "[cfz:error] " << msg << "\n"; }

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info)
        std::cerr << "[cfz:info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug)
        std::cerr << "[cfz:debug] " << msg << "\n";
}

namespace {

double parse_real_part(const std::string& tok, size_t& pos) {
    size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok.substr(pos), &used);
    } catch (const std::exception&) {
        throw DomainError("parse_complex: expected number at position " + std::to_string(pos) +
                          " in '" + tok + "'");
    }
    pos += used;
    return v;
}

} // namespace

Complex parse_complex(const std::string& token) {
    std::string tok;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c)))
            tok.push_back(c);
    if (tok.empty())
        throw DomainError("parse_complex: empty token");
    size_t pos = 0;
    const double first = parse_real_part(tok, pos);
    if (pos == tok.size())
        return {first, 0.0};
    if (tok[pos] == 'i' && pos + 1 == tok.size())
        return {0.0, first}; // pure imaginary "bi"
    if (tok[pos] != '+' && tok[pos] != '-')
        throw DomainError("parse_complex: unexpected character at position " +
                          std::to_string(pos) + " in '" + token + "'");
    const double second = parse_real_part(tok, pos);
    if (pos >= tok.size() || tok[pos] != 'i' || pos + 1 != tok.size())
        throw DomainError("parse_complex: expected trailing 'i' at position " +
                          std::to_string(pos) + " in '" + token + "'");
    return {first, second};
}

std::vector<Complex> parse_complex_list(const std::string& csv) {
    std::vector<Complex> out;
    size_t start = 0;
    while (start <= csv.size()) {
        const size_t comma = csv.find(',', start);
        const std::string tok =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_complex(tok));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> NRange::values() const {
    std::vector<int> v;
    for (int n = start; step > 0 ? n <= stop : n >= stop; n += step)
        v.push_back(n);
    return v;
}

NRange parse_n_range(const std::string& text) {
    NRange r;
    const size_t c1 = text.find(':');
    if (c1 == std::string::npos)
        throw DomainError("parse_n_range: expected start:stop[:step], got '" + text + "'");
    const size_t c2 = text.find(':', c1 + 1);
    try {
        r.start = std::stoi(text.substr(0, c1));
        r.stop = std::stoi(text.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                       : c2 - c1 - 1));
        r.step = c2 == std::string::npos ? 1 : std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw DomainError("parse_n_range: malformed range '" + text + "'");
    }
    if (r.step == 0 || r.values().empty())
        throw DomainError("parse_n_range: empty range '" + text + "'");
    return r;
}

nlohmann::json complex_to_json(const Complex& z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const nlohmann::json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

namespace {

nlohmann::json complex_list_to_json(const std::vector<Complex>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Complex& z : v)
        a.push_back(complex_to_json(z));
    return a;
}

std::vector<Complex> complex_list_from_json(const nlohmann::json& a) {
    std::vector<Complex> v;
    for (const auto& j : a)
        v.push_back(complex_from_json(j));
    return v;
}

} // namespace

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json j{{"subcommand", cfg.subcommand},
                     {"taus", complex_list_to_json(cfg.taus)},
                     {"mus", complex_list_to_json(cfg.mus)},
                     {"tol", cfg.tol},
                     {"seed", cfg.seed},
                     {"jobs", cfg.jobs},
                     {"out", cfg.out_path},
                     {"csv", cfg.csv_path}};
    if (cfg.n)
        j["n"] = *cfg.n;
    if (cfg.n_range)
        j["n_range"] = {{"start", cfg.n_range->start},
                        {"stop", cfg.n_range->stop},
                        {"step", cfg.n_range->step}};
    if (cfg.l)
        j["l"] = *cfg.l;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig cfg;
    cfg.subcommand = j.at("subcommand").get<std::string>();
    cfg.taus = complex_list_from_json(j.at("taus"));
    cfg.mus = complex_list_from_json(j.at("mus"));
    cfg.tol = j.at("tol").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.jobs = j.at("jobs").get<int>();
    cfg.out_path = j.at("out").get<std::string>();
    cfg.csv_path = j.at("csv").get<std::string>();
    if (j.contains("n"))
        cfg.n = j.at("n").get<int>();
    if (j.contains("n_range")) {
        NRange r;
        r.start = j.at("n_range").at("start").get<int>();
        r.stop = j.at("n_range").at("stop").get<int>();
        r.step = j.at("n_range").at("step").get<int>();
        cfg.n_range = r;
    }
    if (j.contains("l"))
        cfg.l = j.at("l").get<int>();
    return cfg;
}

GeomFit fit_geometric(const std::vector<std::pair<int, double>>& series, double floor) {
    std::vector<std::pair<double, double>> pts;
    int dropped = 0;
    for (const auto& [n, gap] : series) {
        if (!(gap > floor) || !std::isfinite(gap)) {
            ++dropped;
            continue;
        }
        pts.push_back({static_cast<double>(n), std::log(gap)});
    }
    if (pts.size() < 5)
        throw DomainError("fit_geometric: fewer than 5 positive gaps (" +
                          std::to_string(pts.size()) + " usable, " + std::to_string(dropped) +
                          " dropped)");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(pts.size());
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / m;
    double rss = 0.0;
    for (const auto& [x, y] : pts) {
        const double e = y - (intercept + slope * x);
        rss += e * e;
    }
    GeomFit f;
    f.ratio = std::exp(slope);
    f.intercept = intercept;
    f.residual = std::sqrt(rss / m);
    f.dropped = dropped;
    if (dropped > 0)
        log_info("fit_geometric: dropped " + std::to_string(dropped) +
                 " gaps at or below the floor " + format_double(floor));
    return f;
}

nlohmann::json to_json(const SweepRecord& r) {
    return nlohmann::json{{"n", r.n},
                          {"E_n", r.E_n},
                          {"gamma_abs", r.gamma_abs},
                          {"E_gap", r.E_gap},
                          {"sup_gap", r.sup_gap},
                          {"iterations", r.iterations},
                          {"wall_time", r.wall_time}};
}

SweepRecord record_from_json(const nlohmann::json& j) {
    SweepRecord r;
    r.n = j.at("n").get<int>();
    r.E_n = j.at("E_n").get<double>();
    r.gamma_abs = j.at("gamma_abs").get<double>();
    r.E_gap = j.at("E_gap").get<double>();
    r.sup_gap = j.at("sup_gap").get<double>();
    r.iterations = j.at("iterations").get<int>();
    r.wall_time = j.at("wall_time").get<double>();
    return r;
}

nlohmann::json to_json(const GeomFit& f) {
    return nlohmann::json{{"ratio", f.ratio},
                          {"intercept", f.intercept},
                          {"residual", f.residual},
                          {"dropped", f.dropped}};
}

nlohmann::json make_report(const RunConfig& cfg, nlohmann::json results) {
    return nlohmann::json{{"schema", 1},
                          {"config", to_json(cfg)},
                          {"results", std::move(results)},
                          {"meta", {{"version", "0.1.0"}, {"seed", cfg.seed}}}};
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot open '" + path + "' for writing");
    f << content;
    if (!f)
        throw Error("write to '" + path + "' failed");
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i)
            out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace cfz
