#include <doctest.h>

#include <sstream>

#include "frobper/json_io.hpp"

using namespace frobper;

TEST_CASE("rational strings") {
    CHECK(rational_string(Rational(13)) == "13");
    CHECK(rational_string(Rational(28, 9)) == "28/9");
    CHECK(rational_string(Rational(-5, 4)) == "-5/4");
}

TEST_CASE("graded elements list nonzero terms in basis order") {
    const CurveRing ring(Prime(2), 3);
    const SyzygySpace s = syzygy_basis(GeneratorList::monomial_powers(ring, 2, 2, 2), 3);
    const Json j = to_json(s);
    CHECK(j["m"] == 3);
    CHECK(j["dim"] == 1);
    CHECK(j["basis"][0][0] == Json::parse(R"({"degree":1,"terms":[[1,0,0,1]]})"));
    CHECK(j["basis"][0][2] == Json::parse(R"({"degree":1,"terms":[[0,0,1,1]]})"));

    const SyzygySpace empty = syzygy_basis(GeneratorList::monomial_powers(ring, 2, 2, 2), -1);
    CHECK(to_json(empty).dump() == R"({"basis":[],"dim":0,"m":-1})");
}

TEST_CASE("hk tables") {
    const HKSummary s = strong_semistability_verdict(CurveRing(Prime(5), 3), 2);
    const std::string csv = hk_csv(s);
    std::istringstream in(csv);
    std::string header, r1, r2;
    std::getline(in, header);
    std::getline(in, r1);
    std::getline(in, r2);
    CHECK(header.rfind("e,q,phi,closed_formula,match", 0) == 0);
    CHECK(r1.rfind("1,5,55,55,true,", 0) == 0);
    CHECK(r2.rfind("2,25,1405,1405,true,", 0) == 0);

    const HKSummary dev = strong_semistability_verdict(CurveRing(Prime(3), 4), 1);
    CHECK(hk_csv(dev).find("\n1,3,27,,,3,deviates\n") != std::string::npos);

    const Json j = to_json(s);
    CHECK(j["verdict"] == "matches-closed-formula");
    CHECK(j["records"][1]["phi"] == 1405);
    CHECK(j["records"][0]["profile"].size() == s.records[0].profile.size());
}

TEST_CASE("periodicity report schema and determinism") {
    const Json a = to_json(verify_theorem(2, 3));
    for (const char* key : {"params", "step1", "step2", "step3", "window", "hk", "overall"}) CHECK(a.contains(key));
    CHECK(a["params"] == Json::parse(R"({"d":2,"k":1,"p":3,"shift":3,"t":1})"));
    CHECK(a["step2"]["gcd_ok"] == true);
    CHECK(a["step3"]["mode"] == "paper-reduction");
    CHECK(a["step3"]["verdict"] == "verified");
    CHECK(a["hk"]["phi"] == 13);
    CHECK(a["hk"]["formula"] == "13");
    CHECK(a["overall"] == true);
    CHECK(a["window"][5] == Json::parse(R"({"lhs":4,"m":5,"rhs":4})"));
    CHECK(a.dump() == to_json(verify_theorem(2, 3)).dump());

    VerifyOptions ex;
    ex.exploratory = true;
    const Json e = to_json(verify_theorem(3, 7, ex));
    CHECK(e["overall"].is_null());
    CHECK(e["step3"].is_null());
    CHECK(e["mode"] == "exploratory");
}
