#include "lplab/report.hpp"

#include <cmath>
#include <ctime>
#include <limits>

namespace lplab {

namespace {

// JSON has no inf/nan; clamp so every report number is a plain finite value.
double sane(double v) {
    if (std::isnan(v)) return 0.0;
    if (std::isinf(v)) {
        return std::copysign(std::numeric_limits<double>::max(), v);
    }
    return v;
}

} // namespace

ordered_json to_json(const SeriesSpec& spec) {
    return ordered_json::parse(save_series_spec(spec));
}

ordered_json to_json(const QuotientSequence& q) {
    ordered_json j;
    j["a0"] = sane(q.a0);
    j["a1"] = sane(q.a1);
    ordered_json p = ordered_json::array();
    for (double v : q.p) p.push_back(sane(v));
    ordered_json qq = ordered_json::array();
    for (double v : q.q) qq.push_back(sane(v));
    j["p"] = std::move(p);
    j["q"] = std::move(qq);
    return j;
}

ordered_json to_json(const CriterionVerdict& v) {
    ordered_json j;
    j["criterion"] = v.criterion;
    j["status"] = status_name(v.status);
    ordered_json computed;
    for (const auto& [key, val] : v.computed) computed[key] = sane(val);
    j["computed"] = std::move(computed);
    if (v.witness) j["witness"] = sane(*v.witness);
    j["note"] = v.note;
    return j;
}

ordered_json to_json(const RootReport& r) {
    ordered_json j;
    ordered_json roots = ordered_json::array();
    for (const auto& z : r.roots) {
        roots.push_back(ordered_json::array({sane(z.real()), sane(z.imag())}));
    }
    j["roots"] = std::move(roots);
    ordered_json res = ordered_json::array();
    for (double v : r.residuals) res.push_back(sane(v));
    j["residuals"] = std::move(res);
    j["verdict"] = verdict_name(r.verdict);
    j["im_tol"] = sane(r.im_tol);
    j["scale"] = sane(r.scale);
    j["simple"] = r.simple;
    j["min_separation"] = sane(r.min_separation);
    j["converged"] = r.converged;
    return j;
}

ordered_json to_json(const ThetaThresholds& t) {
    ordered_json j;
    j["n_max"] = t.n_max;
    j["tol"] = sane(t.tol);
    ordered_json c;
    for (const auto& [n, cn] : t.c) c[std::to_string(n)] = sane(cn);
    j["c"] = std::move(c);
    j["q_inf_low"] = sane(t.q_inf_low);
    j["q_inf_high"] = sane(t.q_inf_high);
    return j;
}

ordered_json to_json(const SuiteResult& s) {
    ordered_json j;
    j["name"] = s.name;
    j["trials"] = s.trials;
    j["failures"] = s.failures;
    j["skipped"] = s.skipped;
    j["worst_margin"] = sane(s.worst_margin);
    j["counterexample"] = s.counterexample;
    j["note"] = s.note;
    return j;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

ordered_json report_skeleton() {
    ordered_json j;
    j["schema_version"] = 1;
    j["spec"] = ordered_json::object();
    j["quotients"] = ordered_json::object();
    j["verdicts"] = ordered_json::array();
    j["roots"] = ordered_json::object();
    j["theta"] = ordered_json::object();
    j["suites"] = ordered_json::array();
    j["timestamp"] = "";
    j["version"] = kVersion;
    return j;
}

} // namespace lplab
