#include "pfq/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace pfq {
namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_residual(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string coords_string(const PointOutcome& out) {
    std::string s;
    for (const auto& [name, value] : out.coordinates) {
        if (!s.empty()) s += ';';
        s += name + "=" + format_double(value);
    }
    return s;
}

} // namespace

std::string render_text(std::span<const VerificationReport> reports) {
    std::string s;
    for (const VerificationReport& r : reports) {
        s += "== " + r.grid.identity.label() + " tolerance " + format_residual(r.grid.tolerance) +
             " seed " + std::to_string(r.grid.seed) + "\n";
        for (const PointOutcome& out : r.outcomes) {
            s += "point identity=" + r.grid.identity.label() + " " + coords_string(out) +
                 " class=" + to_string(out.classification);
            if (out.rel_residual) s += " residual=" + format_residual(*out.rel_residual);
            if (!out.detail.empty()) s += " detail=\"" + out.detail + "\"";
            s += "\n";
        }
        s += "summary identity=" + r.grid.identity.label() +
             " points=" + std::to_string(r.counts.total()) +
             " pass=" + std::to_string(r.counts.pass) +
             " fail=" + std::to_string(r.counts.fail) +
             " pole_skip=" + std::to_string(r.counts.pole_skip) +
             " slow_skip=" + std::to_string(r.counts.slow_skip) +
             " max_residual=" + format_residual(r.max_residual) +
             (r.skip_warning ? " warning=skips-above-20-percent" : "") + "\n";
    }
    return s;
}

std::string render_json(std::span<const VerificationReport> reports) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::ordered_json grid;
        grid["identity"] = r.grid.identity.label();
        grid["tolerance"] = r.grid.tolerance;
        grid["seed"] = r.grid.seed;
        nlohmann::ordered_json outcomes = nlohmann::ordered_json::array();
        for (const PointOutcome& out : r.outcomes) {
            nlohmann::ordered_json o;
            o["identity"] = r.grid.identity.label();
            nlohmann::ordered_json coords;
            for (const auto& [name, value] : out.coordinates) coords[name] = value;
            o["coords"] = std::move(coords);
            o["class"] = to_string(out.classification);
            if (out.rel_residual)
                o["residual"] = *out.rel_residual;
            else
                o["residual"] = nullptr;
            if (!out.detail.empty()) o["detail"] = out.detail;
            outcomes.push_back(std::move(o));
        }
        grid["outcomes"] = std::move(outcomes);
        grid["summary"] = {{"points", r.counts.total()},
                           {"pass", r.counts.pass},
                           {"fail", r.counts.fail},
                           {"pole_skip", r.counts.pole_skip},
                           {"slow_skip", r.counts.slow_skip},
                           {"max_residual", r.max_residual},
                           {"skip_warning", r.skip_warning}};
        doc.push_back(std::move(grid));
    }
    return doc.dump(2) + "\n";
}

std::string render_csv(std::span<const VerificationReport> reports) {
    std::string s = "identity,coords,class,residual\n";
    for (const VerificationReport& r : reports)
        for (const PointOutcome& out : r.outcomes) {
            s += r.grid.identity.label() + ",\"" + coords_string(out) + "\"," +
                 to_string(out.classification) + ",";
            if (out.rel_residual) s += format_residual(*out.rel_residual);
            s += "\n";
        }
    return s;
}

std::string render_report(std::span<const VerificationReport> reports, const std::string& format) {
    if (format == "human" || format == "text") return render_text(reports);
    if (format == "json") return render_json(reports);
    if (format == "csv") return render_csv(reports);
    throw ConfigError("unknown report format '" + format + "' (human|json|csv)");
}

} // namespace pfq
