#pragma once

// JSON serialization for every result type, with stable key order so that
// identical runs produce byte-identical documents (timestamps excluded).

#include <string>
#include <vector>

#include <json.hpp>

#include "lplab/criteria.hpp"
#include "lplab/roots.hpp"
#include "lplab/series_spec.hpp"
#include "lplab/theta.hpp"

namespace lplab {

using ordered_json = nlohmann::ordered_json;

// Result of one randomized property suite.
struct SuiteResult {
    std::string name;
    int trials = 0;
    int failures = 0;
    int skipped = 0;          // domain violations, refusals: not lemma failures
    double worst_margin = 0.0; // smallest slack seen across trials
    std::string counterexample; // parameters of the first failure, if any
    std::string note;           // e.g. recorded domain violations
};

ordered_json to_json(const SeriesSpec& spec);
ordered_json to_json(const QuotientSequence& q);
ordered_json to_json(const CriterionVerdict& v);
ordered_json to_json(const RootReport& r);
ordered_json to_json(const ThetaThresholds& t);
ordered_json to_json(const SuiteResult& s);

// Current time as an ISO-8601 UTC stamp (the one nondeterministic report field).
std::string iso8601_utc_now();

// Report document skeleton: schema_version and tool version filled in.
ordered_json report_skeleton();

} // namespace lplab
