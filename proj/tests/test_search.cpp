#include <catch_amalgamated.hpp>

#include <set>

#include "kfam/search.hpp"
#include "oracles.hpp"

using namespace kfam;

TEST_CASE("enumeration matches frozen class counts") {
    CHECK(enumerate_families({3, 2, true, std::nullopt, 2}).size() == 2);
    CHECK(enumerate_families({4, 2, true, std::nullopt, 2}).size() == 6);
    CHECK(enumerate_families({4, 3, true, std::nullopt, 2}).size() == 3);
}

TEST_CASE("enumeration matches the orbit-sweep oracle") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{
             {3, 2}, {4, 2}, {4, 3}, {5, 4}}) {
        for (bool conn : {false, true}) {
            INFO("n=" << n << " k=" << k << " connected=" << conn);
            const auto classes = enumerate_families({n, k, conn, std::nullopt, 2});
            CHECK(static_cast<long long>(classes.size()) ==
                  oracle::iso_class_count(n, k, conn));
        }
    }
}

TEST_CASE("enumeration output is canonical and duplicate-free") {
    const auto classes = enumerate_families({5, 3, false, std::nullopt, 2});
    std::set<std::string> digests;
    for (const auto& s : classes) {
        CHECK(s.n == 5);
        CHECK(s.k == 3);
        CHECK(static_cast<int>(support(s).size()) == 5);   // spans the universe
        // one representative per class: canonical digests never repeat
        CHECK(digests.insert(canonical_digest(s)).second);
    }
}

TEST_CASE("enumeration is independent of the worker count") {
    const auto one = enumerate_families({4, 3, false, std::nullopt, 1});
    const auto four = enumerate_families({4, 3, false, std::nullopt, 4});
    CHECK(one == four);
}

TEST_CASE("max_facets filter") {
    const auto all = enumerate_families({4, 2, false, std::nullopt, 2});
    const auto few = enumerate_families({4, 2, false, 3, 2});
    CHECK(few.size() < all.size());
    for (const auto& s : few) CHECK(s.facet_count() <= 3);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate_families({9, 2, false, std::nullopt, 1}), SizeError);
    CHECK_THROWS_AS(enumerate_families({2, 3, false, std::nullopt, 1}), RangeError);
}

TEST_CASE("scan finds no brouwer counterexamples on small scopes") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {5, 4}}) {
        const auto report = scan({n, k, false, std::nullopt, 2}, ScanChecker::Brouwer);
        INFO("n=" << n << " k=" << k);
        CHECK(report.pass());
        CHECK(report.families_scanned > 0);
        CHECK(report.masks_examined ==
              (1ull << binom_u64(static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(k))) - 1);
    }
}

TEST_CASE("scan records tightness leaders") {
    const auto report = scan({4, 2, true, std::nullopt, 2}, ScanChecker::Brouwer, {3});
    REQUIRE(report.tightness_leaders.count(3) == 1);
    const auto& lead = report.tightness_leaders.at(3);
    REQUIRE(!lead.empty());
    CHECK(lead.size() <= 3);
    // K4 attains equality at t = n - 1 = 3
    CHECK_THAT(lead.front().slack, Catch::Matchers::WithinAbs(0.0, 1e-8));
    CHECK(canonical_form(lead.front().family) == canonical_form(complete_family(4, 2)));
    for (std::size_t i = 1; i < lead.size(); ++i) {
        CHECK(lead[i - 1].slack <= lead[i].slack + 1e-12);
    }
}

TEST_CASE("scan is deterministic across worker counts") {
    const auto a = scan({4, 3, false, std::nullopt, 1}, ScanChecker::Brouwer);
    const auto b = scan({4, 3, false, std::nullopt, 4}, ScanChecker::Brouwer);
    CHECK(a.families_scanned == b.families_scanned);
    CHECK(a.counterexamples.size() == b.counterexamples.size());
    REQUIRE(a.tightness_leaders.size() == b.tightness_leaders.size());
    for (const auto& [t, lead] : a.tightness_leaders) {
        const auto& other = b.tightness_leaders.at(t);
        REQUIRE(lead.size() == other.size());
        for (std::size_t i = 0; i < lead.size(); ++i) {
            CHECK(lead[i].family == other[i].family);
            CHECK_THAT(lead[i].slack, Catch::Matchers::WithinAbs(other[i].slack, 1e-12));
        }
    }
}

TEST_CASE("forbidden scan flags families above the disqualifier") {
    // K4 at t = 2 exceeds (k-1) f, so the scan reports it as a finding
    const auto report = scan({4, 2, false, std::nullopt, 2}, ScanChecker::Forbidden, {2});
    CHECK_FALSE(report.pass());
    bool found_k4 = false;
    for (const auto& c : report.counterexamples) {
        CHECK(c.checker == "forbidden");
        if (c.family == canonical_form(complete_family(4, 2))) found_k4 = true;
    }
    CHECK(found_k4);
}

TEST_CASE("majorization scan on graphs passes") {
    const auto report = scan({4, 2, false, std::nullopt, 2}, ScanChecker::Majorization);
    CHECK(report.pass());
}

TEST_CASE("checker ids") {
    CHECK(scan_checker_from_id("brouwer") == ScanChecker::Brouwer);
    CHECK(scan_checker_from_id("majorization") == ScanChecker::Majorization);
    CHECK(scan_checker_from_id("forbidden") == ScanChecker::Forbidden);
    CHECK_THROWS_AS(scan_checker_from_id("nope"), RangeError);
}
