#include <catch2/catch_amalgamated.hpp>

#include <regex>
#include <string>

#include "json.hpp"

#include "snchar/verify.hpp"

using namespace snchar;

namespace {

const BoundRecord& record_for(const BoundReport& rep, int k) {
    for (const auto& rec : rep.records)
        if (rec.k == k) return rec;
    FAIL("no record for k=" << k);
    return rep.records.front();
}

bool has_maximizer(const std::vector<Maximizer>& ms, const std::string& lam,
                   const std::string& mu, long long value) {
    for (const auto& m : ms)
        if (m.lambda.to_string() == lam && m.mu.to_string() == mu && m.value == value)
            return true;
    return false;
}

}  // namespace

TEST_CASE("main sweep of S3 and S4", "[verify]") {
    BoundReport rep = verify_main(3);
    CHECK(rep.ok());
    const BoundRecord& k1 = record_for(rep, 1);
    CHECK(k1.bound == 1);
    CHECK(k1.max_abs == 1);
    CHECK(k1.attained);
    CHECK(k1.margin == 0);
    REQUIRE(k1.maximizers.size() == 3);
    CHECK(has_maximizer(k1.maximizers, "[1,1,1]", "[3]", 1));
    CHECK(has_maximizer(k1.maximizers, "[2,1]", "[3]", -1));
    CHECK(has_maximizer(k1.maximizers, "[3]", "[3]", 1));

    rep = verify_main(4);
    CHECK(rep.ok());
    const BoundRecord& k2 = record_for(rep, 2);
    CHECK(k2.bound == 2);
    CHECK(k2.max_abs == 2);
    CHECK(k2.attained);
    REQUIRE(k2.maximizers.size() == 1);
    CHECK(has_maximizer(k2.maximizers, "[2,2]", "[2,2]", 2));
}

TEST_CASE("the staircase pair shows up as a maximizer at n=10", "[verify]") {
    auto ms = find_maximizers(10, 2);
    CHECK(has_maximizer(ms, "[4,3,2,1]", "[5,5]", -2));
    for (const auto& m : ms) CHECK(abs(m.value) == 2);

    ms = find_maximizers(3, 1);
    CHECK(ms.size() == 3);

    ms = find_maximizers(2, 2);
    REQUIRE_FALSE(ms.empty());
    for (const auto& m : ms) {
        CHECK(m.mu.to_string() == "[1,1]");
        CHECK(m.value == 1);
    }

    CHECK_THROWS_AS(find_maximizers(3, 4), std::invalid_argument);
}

TEST_CASE("fixed-point sweep", "[verify]") {
    BoundReport rep = verify_fixed(4);
    CHECK(rep.ok());
    CHECK(rep.fixed_point_only);
    const BoundRecord& k2 = record_for(rep, 2);
    CHECK(k2.bound == 1);
    CHECK(k2.max_abs == 1);
    const BoundRecord& k3 = record_for(rep, 3);
    CHECK(k3.bound == 2);
    CHECK(k3.max_abs <= 2);

    // only classes with a 1-part are swept: for n=4 there is no k=1 record
    for (const auto& rec : rep.records) CHECK(rec.k >= 2);

    rep = verify_fixed(11, {12, 1});
    CHECK(rep.ok());
    const BoundRecord& r3 = record_for(rep, 3);
    CHECK(r3.bound == 2);
    CHECK(r3.max_abs == 2);
    CHECK(r3.attained);
    CHECK(has_maximizer(r3.maximizers, "[4,3,3,1]", "[5,5,1]", -2));
}

TEST_CASE("sweeps enforce the budget", "[verify]") {
    CHECK_THROWS_AS(verify_main(13), std::invalid_argument);
    CHECK_THROWS_AS(verify_main(0), std::invalid_argument);
    CHECK_NOTHROW(verify_main(5, {5, 1}));
}

TEST_CASE("bounds dominate the maxima and margins measure the slack", "[verify]") {
    for (int n = 1; n <= 8; ++n) {
        BoundReport rep = verify_main(n);
        REQUIRE(rep.ok());
        for (const auto& rec : rep.records) {
            CHECK(rec.max_abs <= rec.bound);
            CHECK(rec.bound <= pow2(rec.k - 1) * factorial(rec.k));
            CHECK(rec.margin == pow2(rec.k - 1) * factorial(rec.k) - rec.max_abs);
            CHECK(rec.attained == (rec.max_abs == rec.bound));
        }
    }
}

TEST_CASE("hook-count sweep reports the equality cases", "[verify]") {
    KeyIneqReport rep = verify_key_ineq(12);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
    bool found = false;
    for (const auto& e : rep.equalities)
        found = found || (e.lambda == Partition::parse("4,3,2,1") && e.r == 5 && e.t == 2);
    CHECK(found);

    // single-row diagrams have one hook of each length; only r=n is equality
    for (const auto& e : rep.equalities)
        if (e.lambda.rows() == 1) CHECK(e.r == e.lambda.n());

    CHECK_THROWS_AS(verify_key_ineq(0), std::invalid_argument);
}

TEST_CASE("reports are identical for any worker count", "[verify]") {
    BoundReport seq = verify_main(7, {12, 1});
    BoundReport par = verify_main(7, {12, 4});
    CHECK(to_json(seq) == to_json(par));
    CHECK(to_csv(seq) == to_csv(par));

    BoundReport f_seq = verify_fixed(7, {12, 1});
    BoundReport f_par = verify_fixed(7, {12, 3});
    CHECK(to_json(f_seq) == to_json(f_par));
}

TEST_CASE("JSON report matches the published schema", "[verify]") {
    BoundReport rep = verify_main(4);
    nlohmann::json j = nlohmann::json::parse(to_json(rep));

    REQUIRE(j.is_object());
    REQUIRE(j.size() == 3);
    REQUIRE(j.contains("n"));
    REQUIRE(j.contains("records"));
    REQUIRE(j.contains("violations"));
    CHECK(j["n"] == 4);
    CHECK(j["violations"].is_array());
    CHECK(j["violations"].empty());

    const std::regex decimal("^-?[0-9]+$");
    for (const auto& r : j["records"]) {
        REQUIRE(r.size() == 6);
        CHECK(r["k"].is_number_integer());
        CHECK(r["attained"].is_boolean());
        for (const char* field : {"bound", "max", "margin"}) {
            REQUIRE(r[field].is_string());
            CHECK(std::regex_match(r[field].get<std::string>(), decimal));
        }
        for (const auto& m : r["maximizers"]) {
            REQUIRE(m.size() == 3);
            CHECK(m["lambda"].is_string());
            CHECK(m["mu"].is_string());
            REQUIRE(m["value"].is_string());
            CHECK(std::regex_match(m["value"].get<std::string>(), decimal));
        }
    }

    // maximizers are ordered by text form
    for (const auto& r : j["records"]) {
        std::string prev;
        for (const auto& m : r["maximizers"]) {
            std::string cur = m["lambda"].get<std::string>() + " " + m["mu"].get<std::string>();
            CHECK(prev <= cur);
            prev = cur;
        }
    }
}

TEST_CASE("CSV report round-trips its values", "[verify]") {
    BoundReport rep = verify_main(4);
    std::string csv = to_csv(rep);
    CHECK(csv.rfind("n,k,bound,max,attained,margin,lambda,mu,value\n", 0) == 0);
    CHECK(csv.find("\"[2,2]\",\"[2,2]\",2") != std::string::npos);

    KeyIneqReport krep = verify_key_ineq(10);
    std::string kcsv = to_csv(krep);
    CHECK(kcsv.rfind("n,lambda,r,t\n", 0) == 0);
    CHECK(kcsv.find("10,\"[4,3,2,1]\",5,2") != std::string::npos);
}

TEST_CASE("a violation flips ok()", "[verify]") {
    BoundReport rep;
    CHECK(rep.ok());
    rep.violations.push_back("synthetic");
    CHECK_FALSE(rep.ok());
    nlohmann::json j = nlohmann::json::parse(to_json(rep));
    CHECK(j["violations"].size() == 1);
}
