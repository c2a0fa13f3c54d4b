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
#include "qsearch/config.hpp"

#include <fstream>
#include <set>

#include "qsearch/error.hpp"

namespace qsearch {

namespace {

template <typename T> void read(const Json &doc, const char *key, T &dst) {
    if (!doc.contains(key)) {
        return;
    }
    try {
        dst = doc.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::InvalidConfig, std::string("config field '") + key + "': " + e.what());
    }
}

} // namespace

void RunConfig::validate() const {
    auto check = [](bool ok, const std::string &what) { require(ok, ErrorKind::InvalidConfig, what); };
    check(preset == "symmetric" || preset == "grover", "preset must be 'symmetric' or 'grover'");
    check(scheme == "basic" || scheme == "boosted" || scheme == "exact",
          "scheme must be 'basic', 'boosted' or 'exact'");
    check(format == "json" || format == "csv", "format must be 'json' or 'csv'");
    check(n >= 2 && n <= 4096, "n must lie in [2, 4096]");
    check(target >= -1 && (target < 0 || static_cast<std::size_t>(target) < n || !spec.empty()),
          "target out of range");
    check(b_target == 0.0 || b_target >= 1.0, "b_target must be >= 1");
    check(max_alpha_ratio > 0.0, "max_alpha_ratio must be positive");
    check(delta > 0.0 && delta < 0.5, "delta must lie in (0, 1/2)");
    check(mu <= 30, "mu must be <= 30");
    check(nu <= 20 && nu % 2 == 0, "nu must be even and <= 20");
    check(theta_min >= 0.0 && theta_min <= kPi, "theta_min must lie in [0, pi]");
    for (double p : pairs) {
        check(p > 0.0 && p <= kPi, "pair phases must lie in (0, pi]");
    }
    for (unsigned m : mu_sweep) {
        check(m >= 1 && m <= 30, "mu_sweep entries must lie in [1, 30]");
    }
    for (unsigned v : nu_sweep) {
        check(v >= 2 && v <= 20 && v % 2 == 0, "nu_sweep entries must be even and in [2, 20]");
    }
    for (double bb : b_list) {
        check(bb >= 1.0, "b_list entries must be >= 1");
    }
    check(dense_cap >= 1, "dense_cap must be positive");
}

Json to_json(const RunConfig &c) {
    return Json{{"command", c.command},
                {"preset", c.preset},
                {"spec", c.spec},
                {"n", c.n},
                {"pairs", c.pairs},
                {"b_target", c.b_target},
                {"target", c.target},
                {"seed", c.seed},
                {"max_alpha_ratio", c.max_alpha_ratio},
                {"scheme", c.scheme},
                {"mu", c.mu},
                {"nu", c.nu},
                {"delta", c.delta},
                {"b", c.b},
                {"mu_offset", c.mu_offset},
                {"theta_min", c.theta_min},
                {"mu_sweep", c.mu_sweep},
                {"nu_sweep", c.nu_sweep},
                {"b_list", c.b_list},
                {"trials", c.trials},
                {"max_rounds", c.max_rounds},
                {"dense_cap", c.dense_cap},
                {"out", c.out},
                {"format", c.format}};
}

RunConfig merge_config(RunConfig base, const Json &doc) {
    require(doc.is_object(), ErrorKind::InvalidConfig, "config document must be a JSON object");
    static const std::set<std::string> known = {
        "command", "preset", "spec",     "n",        "pairs",      "b_target",   "target",
        "seed",    "max_alpha_ratio",    "scheme",   "mu",         "nu",         "delta",
        "b",       "mu_offset",          "theta_min", "mu_sweep",  "nu_sweep",   "b_list",
        "trials",  "max_rounds",         "dense_cap", "out",       "format"};
    for (const auto &item : doc.items()) {
        require(known.count(item.key()) == 1, ErrorKind::InvalidConfig,
                "unknown config key '" + item.key() + "'");
    }
    read(doc, "command", base.command);
    read(doc, "preset", base.preset);
    read(doc, "spec", base.spec);
    read(doc, "n", base.n);
    read(doc, "pairs", base.pairs);
    read(doc, "b_target", base.b_target);
    read(doc, "target", base.target);
    read(doc, "seed", base.seed);
    read(doc, "max_alpha_ratio", base.max_alpha_ratio);
    read(doc, "scheme", base.scheme);
    read(doc, "mu", base.mu);
    read(doc, "nu", base.nu);
    read(doc, "delta", base.delta);
    read(doc, "b", base.b);
    read(doc, "mu_offset", base.mu_offset);
    read(doc, "theta_min", base.theta_min);
    read(doc, "mu_sweep", base.mu_sweep);
    read(doc, "nu_sweep", base.nu_sweep);
    read(doc, "b_list", base.b_list);
    read(doc, "trials", base.trials);
    read(doc, "max_rounds", base.max_rounds);
    read(doc, "dense_cap", base.dense_cap);
    read(doc, "out", base.out);
    read(doc, "format", base.format);
    return base;
}

std::vector<double> resolved_pairs(const RunConfig &c) {
    if (!c.pairs.empty()) {
        return c.pairs;
    }
    if (c.b_target > 0.0) {
        return {pair_phase_for_b(c.b_target)};
    }
    return {kPi / 3};
}

DiffusionSpec spec_from_config(const RunConfig &c) {
    if (!c.spec.empty()) {
        std::ifstream in(c.spec);
        require(in.good(), ErrorKind::InvalidConfig, "cannot open spec file '" + c.spec + "'");
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            fail(ErrorKind::InvalidConfig, std::string("spec file: ") + e.what());
        }
        return spec_from_json(doc);
    }
    if (c.preset == "grover") {
        return build_grover_spec(c.n);
    }
    return build_symmetric_spec(c.n, resolved_pairs(c), c.seed);
}

SearchInstance instance_from_config(const RunConfig &c) {
    if (c.target >= 0) {
        return make_instance(spec_from_config(c), static_cast<std::size_t>(c.target));
    }
    if (!c.spec.empty() || c.preset == "grover") {
        return make_instance(spec_from_config(c), 0);
    }
    InstanceQuery q;
    q.dim = c.n;
    q.pair_phases = resolved_pairs(c);
    q.seed = c.seed;
    q.max_alpha_ratio = c.max_alpha_ratio;
    return find_instance(q);
}

InversionScheme scheme_from_config(const RunConfig &c, const SearchInstance &inst) {
    const double theta = c.theta_min > 0.0 ? c.theta_min : inst.theta_min();
    InversionScheme s = c.scheme == "basic"
                            ? basic_scheme(inst.big_b, theta, c.b, c.delta)
                            : boosted_scheme(inst.big_b, theta, c.mu_offset, c.delta);
    if (c.mu != 0) {
        s.mu = c.mu;
    }
    if (c.nu != 0 && s.kind == SchemeKind::Boosted) {
        s.nu = c.nu;
    }
    s.validate();
    return s;
}

} // namespace qsearch
