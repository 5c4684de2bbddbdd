#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sumdiff/certificate.hpp"

using namespace sumdiff;
using nlohmann::json;

TEST_SUITE_BEGIN("certificate");

TEST_CASE("sha256 known answer") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("Example-1 certificate carries exact decimal strings") {
    const Certificate cert = make_certificate({4, 8, 3});
    const json j = json::parse(certificate_json(cert));

    CHECK(j["params"]["m"] == 4);
    CHECK(j["params"]["L"] == 8);
    CHECK(j["params"]["B"] == 3);
    CHECK(j["counts"]["u"] == "221");
    CHECK(j["counts"]["s"] == "2075");
    CHECK(j["counts"]["d"] == "2307");
    CHECK(j["counts"]["q"] == "2381");
    CHECK(j["theta"]["lower"] == 1.013631);
    CHECK(j["theta"].contains("ln_ratio"));
    CHECK(j["theta"].contains("ln_q"));
    CHECK(j["tool_version"] == "sumdiff 1.0.0");
    CHECK(j["elapsed_seconds"].is_number());
}

TEST_CASE("field order is stable") {
    const std::string text = certificate_json(make_certificate({4, 8, 3}));
    const auto pos = [&text](const char* key) { return text.find(key); };
    CHECK(pos("\"params\"") < pos("\"counts\""));
    CHECK(pos("\"counts\"") < pos("\"theta\""));
    CHECK(pos("\"theta\"") < pos("\"tool_version\""));
    CHECK(pos("\"tool_version\"") < pos("\"elapsed_seconds\""));
    CHECK(pos("\"u\"") < pos("\"s\""));
    CHECK(pos("\"s\"") < pos("\"d\""));
    CHECK(pos("\"d\"") < pos("\"q\""));
}

TEST_CASE("counts payload is reproducible bit-exactly") {
    const json a = json::parse(certificate_json(make_certificate({6, 20, 4})));
    const json b = json::parse(certificate_json(make_certificate({6, 20, 4})));
    CHECK(a["counts"].dump() == b["counts"].dump());
    CHECK(a["theta"].dump() == b["theta"].dump());
    CHECK(a["params"].dump() == b["params"].dump());
}

TEST_CASE("degenerate parameters keep their counts and drop theta") {
    const Certificate cert = make_certificate({1, 0, 1});
    CHECK_FALSE(cert.theta.has_value());
    const json j = json::parse(certificate_json(cert));
    CHECK(j["theta"].is_null());
    CHECK(j["counts"]["u"] == "1");
    CHECK(j["counts"]["q"] == "1");
}

TEST_CASE("big counts switch to sci + digest at the digit threshold") {
    Certificate cert;
    cert.params = {1, 1, 1};
    cert.counts.u = pow_int(10, 4000);  // 4001 digits: over the limit
    cert.counts.s = pow_int(10, 3999);  // exactly 4000: inline
    cert.counts.d = BigCount(3);
    cert.counts.q = BigCount(3);
    cert.tool_version = "sumdiff test";

    const json j = json::parse(certificate_json(cert));
    CHECK(j["counts"]["s"].is_string());
    REQUIRE(j["counts"]["u"].is_object());
    CHECK(j["counts"]["u"]["sci"] == "1.000000000e4000");
    CHECK(j["counts"]["u"]["digits10"] == 4001);
    CHECK(j["counts"]["u"]["sha256_of_decimal"] ==
          sha256_hex(pow_int(10, 4000).to_decimal()));
    CHECK(j["counts"]["u"]["sha256_of_decimal"].get<std::string>().size() == 64);
}

TEST_SUITE_END();
