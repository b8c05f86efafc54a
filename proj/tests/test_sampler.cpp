#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "nilp/sampler.hpp"

using namespace nilp;

TEST_CASE("initial state is valid and minimal") {
    for (auto a : {std::vector<long>{0, 1}, {0, 2}, {0, 2, 4}, {0, 2, 3, 6, 10, 12, 15}}) {
        StartSequence s(a);
        ChainState st = init_minimal(s);
        CHECK(st.valid());
    }
    // the lowest configuration of a=(0,2) is the one the enumerator lists
    StartSequence s02({0, 2});
    ChainState st = init_minimal(s02);
    bool found = false;
    for (const auto& cfg : brute_force_enumerate(s02))
        found = found || cfg.key() == st.config.key();
    CHECK(found);
}

TEST_CASE("single-state chain rejects every proposal") {
    StartSequence s({0, 1});
    ChainState st = init_minimal(s, 1);
    for (int k = 0; k < 200; ++k)
        CHECK(!flip_step(st));
    CHECK(st.accepted == 0);
    CHECK(st.valid());
}

TEST_CASE("two-state chain alternates") {
    StartSequence s({0, 2});
    ChainState st = init_minimal(s, 2);
    std::map<std::string, long> freq;
    for (int k = 0; k < 20000; ++k) {
        flip_step(st);
        ++freq[st.config.key()];
        CHECK(st.valid());
    }
    REQUIRE(freq.size() == 2);
    for (const auto& [k, c] : freq)
        CHECK(std::abs(c - 10000.0) < 600);
}

TEST_CASE("acceptance rate positive on (0,2,4)") {
    StartSequence s({0, 2, 4});
    ChainState st = init_minimal(s, 3);
    for (int k = 0; k < 5000; ++k)
        flip_step(st);
    CHECK(st.accepted > 0);
    CHECK(st.proposals == 5000);
}

TEST_CASE("deterministic resampling") {
    StartSequence s({0, 2, 4});
    auto a = sample_ensemble(s, 50, 7);
    auto b = sample_ensemble(s, 50, 7);
    auto c = sample_ensemble(s, 50, 8);
    REQUIRE(a.size() == 50);
    bool same = true, differ = false;
    for (std::size_t i = 0; i < 50; ++i) {
        same = same && a[i].key() == b[i].key();
        differ = differ || a[i].key() != c[i].key();
    }
    CHECK(same);
    CHECK(differ);
    for (const auto& cfg : a)
        CHECK(is_valid_configuration(s, cfg));
}

TEST_CASE("incomplete gamma and chi-square") {
    CHECK(gamma_p(1.0, 0.0) == doctest::Approx(0.0));
    CHECK(gamma_p(1.0, 1.0) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
    CHECK(gamma_p(0.5, 100.0) == doctest::Approx(1.0).epsilon(1e-12));
    // chi-square with 2 dof: p = exp(-x/2)
    CHECK(chi_square_pvalue(3.0, 2) == doctest::Approx(std::exp(-1.5)).epsilon(1e-10));
    CHECK_THROWS(gamma_p(-1.0, 1.0));
}

TEST_CASE("uniformity on small instances") {
    CHECK(uniformity_pvalue(StartSequence({0, 2}),
                            sample_ensemble(StartSequence({0, 2}), 20000, 11)) > 0.01);
    CHECK(uniformity_pvalue(StartSequence({0, 2, 4}),
                            sample_ensemble(StartSequence({0, 2, 4}), 20000, 12)) > 0.01);
}

TEST_CASE("sample dump format") {
    StartSequence s({0, 2});
    auto samples = sample_ensemble(s, 2, 5);
    std::string text = samples_to_text(samples);
    CHECK(text.rfind("# sample 0", 0) == 0);
    CHECK(text.find("# sample 1") != std::string::npos);
    // each record: one line per path; path 0 of a=(0,2) is empty => "-"
    CHECK(text.find("-\n") != std::string::npos);
}
