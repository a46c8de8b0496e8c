#include "cocirc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "cocirc/parallel.hpp"

namespace cocirc {

namespace {

Json array_of(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) a.push_back(x);
    return a;
}

Json positions_of(const std::vector<std::size_t>& positions) {
    Json a = Json::array();
    for (std::size_t p : positions) a.push_back(p + 1);
    return a;
}

std::string join(std::span<const double> v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + format_double(v[i]);
    return s;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

const char* family_name(FamilyKind k) { return k == FamilyKind::two_unequal ? "two-unequal" : "two-groups"; }

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json to_json(const MinimizerResult& r) {
    Json j;
    j["theta"] = array_of(r.theta_m.values());
    j["iterations"] = r.iterations;
    j["grad_norm"] = r.grad_norm;
    j["converged"] = r.converged;
    return j;
}

Json to_json(const CertificateReport& r) {
    Json j;
    j["masses"] = array_of(r.masses.values());
    j["alpha"] = r.alpha;
    j["theta_m"] = array_of(r.theta_m.values());
    Json values = Json::object();
    for (const auto& cv : r.criterion_values) values[cv.element.key()] = cv.value;
    j["criterion_values"] = std::move(values);
    j["witness"] = r.witness ? Json(r.witness->key()) : Json(nullptr);
    j["min_value"] = r.min_value;
    j["margin"] = r.margin;
    j["moment_residual"] = r.moment_residual;
    j["grad_norm"] = r.grad_norm;
    j["iterations"] = r.iterations;
    j["verdict"] = to_string(r.verdict);
    return j;
}

Json to_json(const ScanResult& r) {
    Json j;
    Json family;
    family["kind"] = family_name(r.spec.kind);
    family["n_total"] = r.spec.n_total;
    if (r.spec.kind == FamilyKind::two_groups) {
        family["k"] = r.spec.k;
        family["value"] = r.spec.values.second;
    } else {
        family["values"] = Json::array({r.spec.values.first, r.spec.values.second});
    }
    j["family"] = std::move(family);
    j["alpha"] = r.alpha;

    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["pattern"] = row.pattern.canonical_form;
        x["antipodal"] = row.pattern.antipodal;
        x["special_positions"] = positions_of(row.positions);
        x["masses"] = array_of(row.report.masses.values());
        x["verdict"] = to_string(row.report.verdict);
        x["min_value"] = row.report.min_value;
        x["witness"] = row.report.witness ? Json(row.report.witness->key()) : Json(nullptr);
        x["moment_residual"] = row.report.moment_residual;
        x["theta_m"] = array_of(row.report.theta_m.values());
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["summary"] = {{"excluded", r.summary.excluded},
                    {"not_excluded", r.summary.not_excluded},
                    {"inconclusive", r.summary.inconclusive}};
    return j;
}

Json to_json(const InequalityReport& r) {
    Json j;
    Json suites = Json::array();
    for (const auto& s : r.suites) {
        suites.push_back({{"suite", s.name},
                          {"vertices", s.vertices},
                          {"tested", s.tested},
                          {"violations", s.violations},
                          {"worst", s.worst}});
    }
    j["suites"] = std::move(suites);
    j["total_violations"] = r.total_violations;
    return j;
}

std::string to_csv(const MinimizerResult& r, const MassVector& m) {
    std::string s = "index,mass,theta\n";
    for (std::size_t k = 0; k < m.size(); ++k)
        s += std::to_string(k + 1) + "," + format_double(m[k]) + "," + format_double(r.theta_m[k]) + "\n";
    return s;
}

std::string to_csv(const CertificateReport& r) {
    std::string s = "element,value\n";
    for (const auto& cv : r.criterion_values) s += cv.element.key() + "," + format_double(cv.value) + "\n";
    return s;
}

std::string to_csv(const ScanResult& r) {
    std::string s = "pattern,special_positions,masses,verdict,min_value,witness,moment_residual\n";
    for (const auto& row : r.rows) {
        std::string pos;
        for (std::size_t i = 0; i < row.positions.size(); ++i)
            pos += (i ? ";" : "") + std::to_string(row.positions[i] + 1);
        s += row.pattern.canonical_form + "," + pos + "," + join(row.report.masses.values(), ';') + "," +
             to_string(row.report.verdict) + "," + format_double(row.report.min_value) + "," +
             (row.report.witness ? row.report.witness->key() : "") + "," + format_double(row.report.moment_residual) +
             "\n";
    }
    return s;
}

std::string to_csv(const InequalityReport& r) {
    std::string s = "suite,vertices,tested,violations,worst\n";
    for (const auto& x : r.suites)
        s += x.name + "," + std::to_string(x.vertices) + "," + std::to_string(x.tested) + "," +
             std::to_string(x.violations) + "," + format_double(x.worst) + "\n";
    return s;
}

Json make_document(const std::string& command, Json input, Json result) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["input"] = std::move(input);
    doc["result"] = std::move(result);
    doc["metadata"] = {{"tool", "cocirc"}, {"version", "1.0.0"}, {"timestamp", utc_timestamp()},
                       {"threads", thread_count()}};
    return doc;
}

Json math_payload(const Json& document) {
    Json copy = document;
    copy.erase("metadata");
    return copy;
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

std::string render_svg(const MassVector& m, const AngleConfig& theta) {
    std::map<double, int> counts;
    for (double x : m.values()) ++counts[x];
    double modal = m[0];
    int best = 0;
    for (auto [value, c] : counts) {
        if (c > best) {
            best = c;
            modal = value;
        }
    }
    double heaviest = 0.0;
    for (double x : m.values()) heaviest = std::max(heaviest, x);

    constexpr double size = 400.0, centre = 200.0, radius = 150.0;
    std::ostringstream os;
    os.precision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    os << "  <circle cx=\"" << centre << "\" cy=\"" << centre << "\" r=\"" << radius
       << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    os << "  <circle cx=\"" << centre << "\" cy=\"" << centre << "\" r=\"2\" fill=\"#888\"/>\n";
    for (std::size_t k = 0; k < m.size(); ++k) {
        const double x = centre + radius * std::cos(theta[k]);
        const double y = centre - radius * std::sin(theta[k]);
        const double r = 4.0 + 10.0 * std::sqrt(m[k] / heaviest);
        const char* fill = m[k] == modal ? "#3b6ea5" : "#d1495b";
        os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"" << fill
           << "\"><title>m" << k + 1 << " = " << m[k] << "</title></circle>\n";
        os << "  <text x=\"" << centre + (radius + 24.0) * std::cos(theta[k]) << "\" y=\""
           << centre - (radius + 24.0) * std::sin(theta[k])
           << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << k + 1 << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move report into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace cocirc
