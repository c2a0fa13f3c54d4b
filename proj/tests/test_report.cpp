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
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "qsearch/config.hpp"
#include "qsearch/error.hpp"
#include "qsearch/report.hpp"

using namespace qsearch;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

} // namespace

TEST_CASE("spec JSON round-trips bit-exactly") {
    for (std::uint64_t seed : {1u, 7u, 123u}) {
        const DiffusionSpec spec = build_symmetric_spec(9, {0.3141592653589793, 2.2}, seed);
        const Json doc = spec_to_json(spec, 4);
        const DiffusionSpec back = spec_from_json(Json::parse(doc.dump()));
        CHECK(target_from_json(doc) == std::optional<std::size_t>{4});
        REQUIRE(back.dim == spec.dim);
        CHECK(back.source_index == spec.source_index);
        CHECK(back.seed == spec.seed);
        CHECK(bit_equal(back.theta_min, spec.theta_min));
        for (std::size_t l = 0; l < spec.dim; ++l) {
            CHECK(bit_equal(back.eigenphases[l], spec.eigenphases[l]));
        }
        for (Eigen::Index i = 0; i < spec.eigenbasis.rows(); ++i) {
            for (Eigen::Index j = 0; j < spec.eigenbasis.cols(); ++j) {
                CHECK(bit_equal(back.eigenbasis(i, j).real(), spec.eigenbasis(i, j).real()));
                CHECK(bit_equal(back.eigenbasis(i, j).imag(), spec.eigenbasis(i, j).imag()));
            }
        }
        CHECK(doc.contains("N"));
        CHECK(doc.contains("s"));
        CHECK(doc.contains("t"));
    }
}

TEST_CASE("spec JSON rejects malformed documents") {
    Json doc = spec_to_json(build_grover_spec(4));
    doc.erase("eigenphases");
    try {
        (void)spec_from_json(doc);
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvalidConfig);
    }
    Json bad = spec_to_json(build_grover_spec(4));
    bad["eigenphases"][1] = 0.0;
    CHECK_THROWS_AS(spec_from_json(bad), Error);
}

TEST_CASE("format_number") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(2.0) == "2");
}

TEST_CASE("CSV header and rows") {
    CHECK(csv_header() == "instance_id,N,alpha,B,theta_min,scheme,mu,nu,q_m,n_qaa,oracle_queries,controlled_s,success,epsilon");
    const PipelineResult r = run_full_exact(make_instance(build_grover_spec(64), 2));
    const std::string row = csv_row(r);
    CHECK(row.rfind("N64-t2-seed0,64,", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == 13);
    const std::string table = csv_table({r, r});
    CHECK(table == csv_header() + "\n" + row + "\n" + row + "\n");
}

TEST_CASE("report JSON carries the ledger and scheme") {
    const SearchInstance inst = make_instance(build_grover_spec(64), 2);
    const PipelineResult r = run_full(inst, boosted_scheme(inst.big_b, inst.theta_min(), 8));
    const Json j = to_json(r);
    CHECK(j["ledger"]["oracle_queries"] == 6);
    CHECK(j["ledger"]["controlled_s"] == 0);
    CHECK(j["scheme"]["kind"] == "boosted");
    CHECK(j.dump() == to_json(r).dump());
}

TEST_CASE("config: defaults validate, JSON overlay, unknown keys rejected") {
    RunConfig c;
    c.command = "pipeline";
    CHECK_NOTHROW(c.validate());
    const RunConfig m = merge_config(c, Json::parse(R"({"n": 8, "pairs": [0.5, 1.0], "seed": 9, "scheme": "basic"})"));
    CHECK(m.n == 8);
    CHECK(m.pairs == std::vector<double>{0.5, 1.0});
    CHECK(m.seed == 9);
    CHECK(m.scheme == "basic");
    CHECK(m.mu_offset == 16);
    CHECK_THROWS_AS(merge_config(c, Json::parse(R"({"bogus": 1})")), Error);
    CHECK_THROWS_AS(merge_config(c, Json::parse(R"({"n": "eight"})")), Error);
    const RunConfig round = merge_config(RunConfig{}, to_json(m));
    CHECK(to_json(round).dump() == to_json(m).dump());
}

TEST_CASE("config: invalid values") {
    RunConfig c;
    c.command = "search";
    c.n = 1;
    CHECK_THROWS_AS(c.validate(), Error);
    c = RunConfig{};
    c.scheme = "fancy";
    CHECK_THROWS_AS(c.validate(), Error);
    c = RunConfig{};
    c.delta = 0.7;
    CHECK_THROWS_AS(c.validate(), Error);
    c = RunConfig{};
    c.format = "xml";
    try {
        c.validate();
        FAIL("expected an error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvalidConfig);
    }
}

TEST_CASE("config: pair resolution and instance construction") {
    RunConfig c;
    CHECK(resolved_pairs(c) == std::vector<double>{kPi / 3});
    c.b_target = 3.0;
    CHECK(resolved_pairs(c) == std::vector<double>{pair_phase_for_b(3.0)});
    c.pairs = {0.7};
    CHECK(resolved_pairs(c) == std::vector<double>{0.7});

    RunConfig g;
    g.preset = "grover";
    g.n = 64;
    const SearchInstance gi = instance_from_config(g);
    CHECK(gi.big_b == 1.0);
    CHECK(gi.target == 0);

    RunConfig s;
    s.n = 16;
    s.pairs = {0.68};
    s.max_alpha_ratio = 0.02;
    const SearchInstance si = instance_from_config(s);
    CHECK(si.alpha / si.theta_min() <= 0.02);
    s.mu_offset = 8;
    const InversionScheme sc = scheme_from_config(s, si);
    CHECK(sc.kind == SchemeKind::Boosted);
    CHECK(sc.mu == boosted_scheme(si.big_b, si.theta_min(), 8).mu);
    s.mu = 7;
    s.nu = 4;
    const InversionScheme over = scheme_from_config(s, si);
    CHECK(over.mu == 7);
    CHECK(over.nu == 4);
}
