// sumdiff - exact cardinalities and certified theta lower bounds for the
// bounded-coordinate construction W(m, L, B).
//
// Subcommands:
//   compute   counts + theta for one triple, certificate JSON to stdout/file
//   search    grid sweep over (m, L, B), ranked JSON report
//   oracle    brute-force enumeration vs closed forms, PASS/FAIL report
//   certify   like compute, always to a file; meant for long runs
//
// Exit codes: 0 success, 2 degenerate theta, 3 oracle cap exceeded or
// mismatch, 4 I/O error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumdiff/certificate.hpp"
#include "sumdiff/oracle.hpp"
#include "sumdiff/search.hpp"
#include "sumdiff/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDegenerate = 2;
constexpr int kExitOracle = 3;
constexpr int kExitIo = 4;

using ordered_json = nlohmann::ordered_json;
using sumdiff::Params;

std::uint64_t parse_u64(const std::string& s) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos, 10);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in \"" + s + "\"");
    return v;
}

// "lo:hi" or a single value, both bounds inclusive
sumdiff::search::IntRange parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        const std::uint64_t v = parse_u64(s);
        return {v, v};
    }
    return {parse_u64(s.substr(0, colon)), parse_u64(s.substr(colon + 1))};
}

// comma-separated values; each item may itself be a lo:hi range
std::vector<std::uint64_t> parse_value_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = s.find(',', start);
        const std::string item =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        const auto r = parse_range(item);
        for (std::uint64_t v = r.lo; v <= r.hi; ++v) {
            out.push_back(v);
            if (v == r.hi) break;  // hi may be UINT64_MAX
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value) return flag_value;
    if (const char* env = std::getenv("SUMDIFF_THREADS")) {
        try {
            const auto v = parse_u64(env);
            if (v >= 1) return static_cast<unsigned>(std::min<std::uint64_t>(v, 1024));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed SUMDIFF_THREADS=\"" << env << "\"\n";
        }
    }
    return 0;  // library default: hardware concurrency
}

void note_canonicalized(const Params& given) {
    const Params c = sumdiff::canonicalize(given);
    if (c != given)
        std::cerr << "note: L reduced to " << c.L << " (L <= m*B makes larger caps inert)\n";
}

int write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int emit_certificate(const Params& p, const std::optional<std::string>& out_path) {
    note_canonicalized(p);
    const sumdiff::Certificate cert = sumdiff::make_certificate(p);
    const std::string text = sumdiff::certificate_json(cert);
    if (out_path) {
        const int rc = write_text(*out_path, text);
        if (rc != kExitOk) return rc;
    } else {
        std::cout << text;
    }
    if (!cert.theta) {
        std::cerr << "error: degenerate parameters, theta undefined (counts still emitted)\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

ordered_json params_json(const Params& p) {
    return {{"m", p.m}, {"L", p.L}, {"B", p.B}};
}

ordered_json candidate_json(const sumdiff::search::Candidate& c) {
    ordered_json j;
    j["params"] = params_json(c.params);
    j["theta_est"] = c.theta_est;
    j["near_grid_point"] = c.near_grid_point;
    if (c.theta_exact) {
        j["theta"] = {{"lower", std::stod(c.theta_exact->lower_str())},
                      {"ln_ratio", c.theta_exact->ln_ratio},
                      {"ln_q", c.theta_exact->ln_q}};
    } else {
        j["theta"] = nullptr;
    }
    return j;
}

int run_search(const std::string& m_arg, const std::string& L_arg, const std::string& B_arg,
               std::size_t top_n, bool confirm, unsigned threads,
               const std::optional<std::string>& out_path) {
    sumdiff::search::SearchSpec spec;
    spec.m_range = parse_range(m_arg);
    spec.L_values = parse_value_list(L_arg);
    spec.B_range = parse_range(B_arg);
    spec.top_n = top_n;
    spec.confirm = confirm;

    const auto t0 = std::chrono::steady_clock::now();
    const auto result = sumdiff::search::sweep(spec, resolve_threads(threads));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ordered_json j;
    j["spec"] = {{"m", {spec.m_range.lo, spec.m_range.hi}},
                 {"L", spec.L_values},
                 {"B", {spec.B_range.lo, spec.B_range.hi}},
                 {"top", spec.top_n},
                 {"confirm", spec.confirm}};
    j["best"] = result.has_best() ? candidate_json(result.best()) : ordered_json(nullptr);
    j["ranked"] = ordered_json::array();
    for (const auto& c : result.ranked) j["ranked"].push_back(candidate_json(c));
    j["skipped"] = ordered_json::array();
    for (const auto& s : result.skipped)
        j["skipped"].push_back({{"params", params_json(s.params)}, {"reason", s.reason}});
    j["tool_version"] = std::string(sumdiff::kToolName) + " " + sumdiff::kVersion;
    j["elapsed_seconds"] = elapsed;

    const std::string text = j.dump(2) + "\n";
    if (out_path) return write_text(*out_path, text);
    std::cout << text;
    return kExitOk;
}

int run_oracle(const Params& given, std::uint64_t cap, std::uint64_t pair_cap) {
    note_canonicalized(given);
    const Params p = sumdiff::canonicalize(given);
    std::cout << "params (canonical): m=" << p.m << " L=" << p.L << " B=" << p.B << "\n";

    const sumdiff::SetCounts closed = sumdiff::set_counts(p);
    bool ok = true;
    try {
        const auto es = sumdiff::oracle::build_u(p, cap);
        const sumdiff::BigCount u(static_cast<unsigned long>(es.integers.size()));
        const sumdiff::BigCount s = sumdiff::oracle::sumset_size(es, pair_cap);
        const sumdiff::BigCount d = sumdiff::oracle::diffset_size(es, pair_cap);
        sumdiff::BigCount q(mpz_class(2 * es.max_u().raw() + 1));
        const bool inj = sumdiff::oracle::check_injective(p, cap, pair_cap);

        const auto report = [&ok](const char* name, const sumdiff::BigCount& closed_v,
                                  const sumdiff::BigCount& enum_v) {
            const bool match = closed_v == enum_v;
            ok = ok && match;
            std::cout << name << ": closed-form " << closed_v << "  enumerated " << enum_v
                      << "  " << (match ? "OK" : "MISMATCH") << "\n";
        };
        report("u", closed.u, u);
        report("s", closed.s, s);
        report("d", closed.d, d);
        report("q", closed.q, q);
        std::cout << "injective (g on W+W and W-W): " << (inj ? "yes" : "NO") << "\n";
        ok = ok && inj;
    } catch (const sumdiff::oracle::ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOracle;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counts and certified theta lower bounds for bounded sum/difference sets"};
    app.set_version_flag("--version", std::string(sumdiff::kToolName) + " " + sumdiff::kVersion);
    app.require_subcommand(1);

    std::uint64_t m = 0, L = 0, B = 0;
    std::uint64_t cap = sumdiff::oracle::kDefaultVectorCap;
    std::uint64_t pair_cap = sumdiff::oracle::kDefaultPairCap;
    std::string m_range, L_list, B_range, out_path;
    std::size_t top_n = 1;
    bool confirm = false;
    unsigned threads = 0;

    auto* compute = app.add_subcommand("compute", "counts and theta for one (m, L, B)");
    compute->add_option("--m", m, "number of coordinates")->required();
    compute->add_option("--L", L, "cap on the coordinate sum")->required();
    compute->add_option("--B", B, "cap on each coordinate")->required();
    compute->add_option("--out", out_path, "write the certificate here instead of stdout");

    auto* search = app.add_subcommand("search", "sweep a (m, L, B) grid and rank by theta");
    search->add_option("--m", m_range, "m range as lo:hi or a single value")->required();
    search->add_option("--L", L_list, "L values, comma separated; items may be lo:hi")->required();
    search->add_option("--B", B_range, "B range as lo:hi or a single value")->required();
    search->add_option("--top", top_n, "number of ranked candidates to keep")
        ->default_val(std::size_t{5});
    search->add_flag("--confirm", confirm, "re-derive the certified bound for ranked candidates");
    search->add_option("--threads", threads,
                       "worker threads (default: SUMDIFF_THREADS or all cores)");
    search->add_option("--out", out_path, "write the report here instead of stdout");

    auto* oracle = app.add_subcommand("oracle", "validate closed forms by brute-force enumeration");
    oracle->add_option("--m", m, "number of coordinates")->required();
    oracle->add_option("--L", L, "cap on the coordinate sum")->required();
    oracle->add_option("--B", B, "cap on each coordinate")->required();
    oracle->add_option("--cap", cap, "maximum |W| to enumerate");
    oracle->add_option("--pair-cap", pair_cap, "maximum pairwise operations");

    auto* certify = app.add_subcommand("certify", "compute and write a certificate file");
    certify->add_option("--m", m, "number of coordinates")->required();
    certify->add_option("--L", L, "cap on the coordinate sum")->required();
    certify->add_option("--B", B, "cap on each coordinate")->required();
    certify->add_option("--out", out_path, "certificate file path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return emit_certificate({m, L, B}, out_path.empty()
                                                   ? std::nullopt
                                                   : std::optional<std::string>(out_path));
        if (search->parsed())
            return run_search(m_range, L_list, B_range, top_n, confirm, threads,
                              out_path.empty() ? std::nullopt
                                               : std::optional<std::string>(out_path));
        if (oracle->parsed()) return run_oracle({m, L, B}, cap, pair_cap);
        if (certify->parsed()) return emit_certificate({m, L, B}, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
