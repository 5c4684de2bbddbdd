#include "sumdiff/certificate.hpp"

#include <openssl/evp.h>

#include <chrono>

#include "json.hpp"
#include "sumdiff/bigcomb.hpp"
#include "sumdiff/version.hpp"

namespace sumdiff {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json count_field(const BigCount& v) {
    std::string dec = v.to_decimal();
    if (dec.size() <= kInlineDecimalDigitLimit) return dec;
    ordered_json big;
    big["sci"] = sci_round(v, 10).str();
    big["digits10"] = dec.size();
    big["sha256_of_decimal"] = sha256_hex(dec);
    return big;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

Certificate make_certificate(Params p) {
    const auto t0 = std::chrono::steady_clock::now();
    Certificate cert;
    cert.params = canonicalize(p);
    cert.counts = set_counts(cert.params);
    try {
        cert.theta = theta_from(cert.counts);
    } catch (const DegenerateParams&) {
        cert.theta.reset();
    }
    cert.tool_version = std::string(kToolName) + " " + kVersion;
    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

std::string certificate_json(const Certificate& c) {
    ordered_json j;
    j["params"] = {{"m", c.params.m}, {"L", c.params.L}, {"B", c.params.B}};
    j["counts"] = {{"u", count_field(c.counts.u)},
                   {"s", count_field(c.counts.s)},
                   {"d", count_field(c.counts.d)},
                   {"q", count_field(c.counts.q)}};
    if (c.theta) {
        // parse the fixed 6-decimal rendering so the JSON number is stable
        j["theta"] = {{"lower", std::stod(c.theta->lower_str())},
                      {"ln_ratio", c.theta->ln_ratio},
                      {"ln_q", c.theta->ln_q}};
    } else {
        j["theta"] = nullptr;
    }
    j["tool_version"] = c.tool_version;
    j["elapsed_seconds"] = c.elapsed_seconds;
    return j.dump(2) + "\n";
}

}  // namespace sumdiff
