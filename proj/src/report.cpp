// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qsearch/report.hpp"

#include <cmath>
#include <cstdio>

#include "qsearch/error.hpp"

namespace qsearch {

namespace {

template <typename T> T field(const Json &doc, const char *key) {
    if (!doc.contains(key)) {
        fail(ErrorKind::InvalidConfig, std::string("spec document lacks '") + key + "'");
    }
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::InvalidConfig, std::string("spec field '") + key + "': " + e.what());
    }
}

} // namespace

Json spec_to_json(const DiffusionSpec &spec, std::optional<std::size_t> target) {
    Json doc;
    doc["N"] = spec.dim;
    doc["s"] = spec.source_index;
    doc["t"] = target.has_value() ? Json(*target) : Json(nullptr);
    doc["eigenphases"] = spec.eigenphases;
    Json basis = Json::array();
    for (Eigen::Index i = 0; i < spec.eigenbasis.rows(); ++i) {
        for (Eigen::Index j = 0; j < spec.eigenbasis.cols(); ++j) {
            basis.push_back({spec.eigenbasis(i, j).real(), spec.eigenbasis(i, j).imag()});
        }
    }
    doc["eigenbasis"] = std::move(basis);
    doc["theta_min"] = spec.theta_min;
    doc["seed"] = spec.seed;
    return doc;
}

DiffusionSpec spec_from_json(const Json &doc) {
    require(doc.is_object(), ErrorKind::InvalidConfig, "spec document must be an object");
    DiffusionSpec spec;
    spec.dim = field<std::size_t>(doc, "N");
    spec.source_index = field<std::size_t>(doc, "s");
    spec.eigenphases = field<std::vector<double>>(doc, "eigenphases");
    spec.theta_min = field<double>(doc, "theta_min");
    spec.seed = field<std::uint64_t>(doc, "seed");
    const auto entries = field<std::vector<std::vector<double>>>(doc, "eigenbasis");
    require(spec.dim >= 1 && entries.size() == spec.dim * spec.dim, ErrorKind::InvalidConfig,
            "spec eigenbasis must hold N*N entries");
    const auto n = static_cast<Eigen::Index>(spec.dim);
    spec.eigenbasis.resize(n, n);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        require(entries[k].size() == 2, ErrorKind::InvalidConfig,
                "spec eigenbasis entries must be [re, im] pairs");
        spec.eigenbasis(static_cast<Eigen::Index>(k / spec.dim),
                        static_cast<Eigen::Index>(k % spec.dim)) = Complex(entries[k][0], entries[k][1]);
    }
    spec.validate();
    return spec;
}

std::optional<std::size_t> target_from_json(const Json &doc) {
    if (!doc.contains("t") || doc.at("t").is_null()) {
        return std::nullopt;
    }
    return field<std::size_t>(doc, "t");
}

Json to_json(const QueryLedger &l) {
    return Json{{"ds_applications", l.ds_applications},
                {"oracle_queries", l.oracle_queries},
                {"controlled_s", l.controlled_s},
                {"i_zero_prime", l.i_zero_prime},
                {"hadamards_vote", l.hadamards_vote}};
}

Json to_json(const InstanceSummary &s) {
    return Json{{"id", s.id},       {"N", s.dim},         {"t", s.target},
                {"alpha", s.alpha}, {"B", s.big_b},       {"theta_min", s.theta_min}};
}

Json to_json(const InversionScheme &s) {
    return Json{{"kind", std::string(to_string(s.kind))},
                {"mu", s.mu},
                {"nu", s.nu},
                {"delta", s.delta},
                {"b", s.b},
                {"mu_offset", s.mu_offset},
                {"theta_min", s.theta_min},
                {"controlled_s_per_application", s.controlled_s_per_application()}};
}

Json to_json(const RelevantPair &p) {
    return Json{{"lambda_plus", p.lambda_plus},       {"lambda_minus", p.lambda_minus},
                {"predicted_plus", p.predicted_plus}, {"predicted_minus", p.predicted_minus},
                {"secular_plus", p.secular_plus},     {"secular_minus", p.secular_minus},
                {"eta", p.eta}};
}

Json to_json(const EpsilonReport &r) {
    Json per = Json::array();
    for (const EigenError &e : r.per_eigenstate) {
        per.push_back({{"eigenphase", e.eigenphase}, {"relevant", e.relevant}, {"error", e.error}});
    }
    return Json{{"per_eigenstate", std::move(per)},
                {"epsilon_max", r.epsilon_max},
                {"predicted_bound", r.predicted_bound},
                {"within_bound", r.within_bound()}};
}

Json to_json(const std::vector<KickbackEntry> &entries) {
    Json out = Json::array();
    for (const KickbackEntry &e : entries) {
        out.push_back({{"eigenphase", e.eigenphase},
                       {"prob_x", e.prob_x},
                       {"omega", e.omega},
                       {"beta", e.beta}});
    }
    return out;
}

Json to_json(const PipelineResult &r) {
    Json doc{{"instance", to_json(r.instance)},
             {"scheme", r.exact_inversion ? Json("exact") : to_json(r.scheme)},
             {"success_probability", r.success_probability},
             {"main_success_probability", r.main_success_probability},
             {"leakage", r.leakage},
             {"w_overlap", r.w_overlap},
             {"epsilon", r.epsilon_used},
             {"q_m", r.q_m},
             {"n_qaa", r.iterations_qaa},
             {"ledger", to_json(r.ledger)},
             {"w_stage_ledger", to_json(r.w_stage_ledger)}};
    return doc;
}

Json to_json(const BaselineResult &r) {
    return Json{{"trials", r.trials},
                {"q_m", r.q_m},
                {"p_target", r.p_target},
                {"expected_repetitions", r.p_target > 0.0 ? 1.0 / r.p_target : 0.0},
                {"mean_repetitions", r.mean_repetitions},
                {"stderr_repetitions", r.stderr_repetitions},
                {"mean_queries", r.mean_queries}};
}

Json to_json(const ScheduleResult &r) {
    return Json{{"success", r.success},
                {"rounds_used", r.rounds_used},
                {"theta_guesses", r.theta_guesses},
                {"outcomes", r.outcomes},
                {"total_ledger", to_json(r.total_ledger)},
                {"final", to_json(r.final)}};
}

Json to_json(const ComplexityReport &r) {
    Json rows = Json::array();
    for (const ComplexityRow &row : r.rows) {
        rows.push_back({{"instance", to_json(row.instance)},
                        {"scheme", row.scheme},
                        {"mu", row.mu},
                        {"nu", row.nu},
                        {"q_m", row.q_m},
                        {"n_qaa", row.n_qaa},
                        {"oracle_queries", row.oracle_queries},
                        {"controlled_s", row.controlled_s},
                        {"baseline_queries", row.baseline_queries},
                        {"success", row.success},
                        {"epsilon", row.epsilon},
                        {"baseline_ratio", row.baseline_ratio},
                        {"classical_constant", row.classical_constant},
                        {"postprocessed_constant", row.postprocessed_constant}});
    }
    return Json{{"rows", std::move(rows)},
                {"slope_q_m_vs_alpha", r.slope_q_m_vs_alpha},
                {"slope_controlled_s_vs_blnb", r.slope_controlled_s_vs_blnb},
                {"slope_ratio_vs_b", r.slope_ratio_vs_b}};
}

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_header() {
    return "instance_id,N,alpha,B,theta_min,scheme,mu,nu,q_m,n_qaa,oracle_queries,controlled_s,"
           "success,epsilon";
}

std::string csv_row(const PipelineResult &r) {
    const std::string scheme = r.exact_inversion ? "exact" : std::string(to_string(r.scheme.kind));
    const unsigned mu = r.exact_inversion ? 0 : r.scheme.mu;
    const unsigned nu = r.exact_inversion ? 0 : r.scheme.nu;
    return r.instance.id + "," + std::to_string(r.instance.dim) + "," +
           format_number(r.instance.alpha) + "," + format_number(r.instance.big_b) + "," +
           format_number(r.instance.theta_min) + "," + scheme + "," + std::to_string(mu) + "," +
           std::to_string(nu) + "," + std::to_string(r.q_m) + "," +
           std::to_string(r.iterations_qaa) + "," + std::to_string(r.ledger.oracle_queries) + "," +
           std::to_string(r.ledger.controlled_s) + "," + format_number(r.success_probability) +
           "," + format_number(r.epsilon_used);
}

std::string csv_table(const std::vector<PipelineResult> &results) {
    std::string out = csv_header() + "\n";
    for (const PipelineResult &r : results) {
        out += csv_row(r) + "\n";
    }
    return out;
}

} // namespace qsearch
