#include <doctest.h>

#include <json.hpp>

#include "cyc/asymptotics.hpp"
#include "cyc/output.hpp"

using namespace cyc;

TEST_CASE("json records: content, key order, round-trip") {
    OutputRecord rec = make_record(GroupSpec::dihedral(3), Integer(5), Integer(6), "formula");
    std::string text = to_json(rec);

    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["family"] == "dihedral");
    CHECK(j["params"] == nlohmann::json::array({"3"}));
    CHECK(j["num_cyclic"] == "5");
    CHECK(j["num_subgroups"] == "6");
    CHECK(j["cdeg"]["num"] == "5");
    CHECK(j["cdeg"]["den"] == "6");
    CHECK(j["cdeg_decimal"] == "0.833333");
    CHECK(j["provenance"] == "formula");
    CHECK(!j.contains("ndeg"));
    CHECK(!j.contains("sd"));

    // parse then re-serialize is identity (keys already alphabetical)
    CHECK(j.dump(2) + "\n" == text);

    rec.ndeg = make_ratio(Integer(1), Integer(2));
    rec.sd = Rational(1);
    nlohmann::json augmented = nlohmann::json::parse(to_json(rec));
    CHECK(augmented["ndeg"]["den"] == "2");
    CHECK(augmented["ndeg_decimal"] == "0.500000");
    CHECK(augmented["sd_decimal"] == "1.000000");
}

TEST_CASE("csv and human renderings") {
    OutputRecord rec = make_record(GroupSpec::dihedral(3), Integer(5), Integer(6), "formula");
    CHECK(to_csv(rec) ==
          "family,params,num_cyclic,num_subgroups,cdeg_num,cdeg_den,cdeg_decimal,provenance\n"
          "dihedral,3,5,6,5,6,0.833333,formula\n");

    std::string human = to_human(rec);
    CHECK(human.find("cdeg: 5/6 = 0.833333") != std::string::npos);
    CHECK(human.find("provenance: formula") != std::string::npos);

    OutputRecord prod =
        make_record(GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}),
                    Integer(5), Integer(8), "oracle");
    CHECK(to_csv(prod).find("product,D6 Z2,5,8,5,8,0.625000,oracle") != std::string::npos);
}

TEST_CASE("extremal table rendering") {
    CHECK(to_csv(scan_rank2(2, 4)) ==
          "alpha1,alpha2,num_cyclic,num_subgroups,cdeg_num,cdeg_den\n"
          "1,3,8,11,8,11\n"
          "2,2,10,15,2,3\n");
}

TEST_CASE("profile table rendering") {
    MeanValue mv = mean_value(1000);
    std::string csv = to_csv(error_profile({1, 10}, mv));
    CHECK(csv.starts_with("x,partial_sum,residual,residual_over_log3\n"));
    CHECK(csv.find("1,1.000000,") != std::string::npos);
    CHECK(csv.find(",inf\n") != std::string::npos); // log^3 undefined at x = 1
    // the x = 10 row has all four columns numeric
    std::size_t second = csv.find("\n10,");
    REQUIRE(second != std::string::npos);
    CHECK(csv.find("inf", second) == std::string::npos);
}

TEST_CASE("fixed-point float rendering") {
    CHECK(fixed6(mpf_class(0.5, kFloatPrecision)) == "0.500000");
    CHECK(fixed6(mpf_class("-0.03355", kFloatPrecision)) == "-0.033550");
    CHECK(fixed6(mpf_class("743.116612", kFloatPrecision)) == "743.116612");
}
