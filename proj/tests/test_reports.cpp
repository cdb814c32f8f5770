#include <doctest.h>

#include "descent3/group_spec.hpp"
#include "descent3/report.hpp"

using namespace descent3;

TEST_CASE("report payloads are byte-stable and carry the contract fields") {
    auto q8 = make_group("quaternion:8");
    auto rep = verify_main_theorem(q8, 2);
    auto js = to_json(rep);
    CHECK(js == to_json(verify_main_theorem(q8, 2)));
    for (const char* field : {"\"group_spec\"", "\"p\"", "\"grt\"", "\"series\"", "\"delta\"",
                              "\"distinguished\"", "\"verdicts\"", "\"witnesses\"",
                              "\"quotient_name\""}) {
        CAPTURE(field);
        CHECK(js.find(field) != std::string::npos);
    }
    CHECK(js.find("fail-expected") != std::string::npos);
}

TEST_CASE("grt and series payloads") {
    auto g = make_group("cyclic:9");
    auto grt = grt_check(g, 3);
    auto js = to_json(grt);
    CHECK(js.find("\"condition_i\"") != std::string::npos);
    CHECK(js.find("\"xi_witness\"") != std::string::npos);

    auto s = q_central_series(g, 3);
    auto sj = to_json(s);
    CHECK(sj.find("\"terms\"") != std::string::npos);
    CHECK(sj == to_json(q_central_series(g, 3)));
}

TEST_CASE("embedding and lift payloads") {
    auto g = make_group("cyclic:4");
    Subgroup m = subgroup_closure(g, {2});
    auto quo = quotient(g, m);
    auto w2 = omega_catalog(2, 2);
    auto iso = is_isomorphic(quo.group, w2.base);
    REQUIRE(iso.has_value());
    auto rep = embedding_solutions(g, m, quo, twist(w2, *iso));
    auto js = to_json(rep);
    CHECK(js.find("\"solutions\":2") != std::string::npos);
    CHECK(js.find("\"correspondence\":true") != std::string::npos);

    auto lift = epi_lifting_check(make_group("cyclic:9"), 3);
    auto lj = to_json(lift);
    CHECK(lj.find("\"all_factor\":true") != std::string::npos);
}
