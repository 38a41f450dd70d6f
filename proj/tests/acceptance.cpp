// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [path-to-unit-test-binary]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "isogate/claims.hpp"
#include "isogate/error.hpp"

using namespace isogate;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits in milliseconds, per criterion.
const std::map<int, long long> kLimitMs = {
    {1, 5'000},   {2, 5'000},  {3, 600'000}, {4, 900'000}, {5, 5'000},   {6, 5'000},   {7, 5'000},
    {8, 1'000},   {9, 1'000},  {10, 5'000},  {11, 10'000}, {12, 300'000}, {13, 30'000}, {14, 600'000},
};

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;
};

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Keys of `expected` whose computed value differs, one level deep.
std::string first_mismatch(const ClaimReport& r) {
    if (r.computed.contains("error")) return r.computed["error"].dump();
    if (!r.expected.is_object()) return "expected " + r.expected.dump() + ", computed " + r.computed.dump();
    for (const auto& [k, v] : r.expected.items()) {
        const json c = r.computed.contains(k) ? r.computed.at(k) : json(nullptr);
        if (v.is_object() && c.is_object()) {
            bool same = true;
            for (const auto& [k2, v2] : v.items()) same = same && c.contains(k2) && c.at(k2) == v2;
            if (same) continue;
        } else if (v == c) {
            continue;
        }
        return k + ": expected " + v.dump() + ", computed " + c.dump();
    }
    return "mismatch";
}

void run_claims(int criterion, Verdict& v) {
    for (const auto& id : criterion_claims().at(criterion)) {
        try {
            const ClaimReport r = run_claim(id);
            if (r.status != ClaimStatus::pass) {
                v.ok = false;
                v.notes.push_back(id + " " + std::string(to_string(r.status)) + " (" + first_mismatch(r) + ")");
            }
        } catch (const Error& e) {
            v.ok = false;
            v.notes.push_back(id + " error: " + e.what());
        }
    }
}

void run_properties(const char* unit_binary, Verdict& v) {
    if (unit_binary) {
        const std::string cmd = std::string(unit_binary) + " --minimal";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) {
            v.ok = false;
            v.notes.push_back("unit/property suite exited with status " + std::to_string(rc));
        }
    } else {
        v.notes.push_back("unit/property suite not run (no binary path given)");
        v.ok = false;
    }
    // run_all twice; reports must agree except for timing.
    auto strip = [](const std::vector<ClaimReport>& rs) {
        json a = json::array();
        for (const auto& r : rs) {
            json j = r.to_json();
            j.erase("elapsed_ms");
            a.push_back(j);
        }
        return a;
    };
    if (strip(run_all()) != strip(run_all())) {
        v.ok = false;
        v.notes.push_back("run_all is not deterministic");
    }
}

}  // namespace

int main(int argc, char** argv) {
    const char* unit_binary = argc > 1 ? argv[1] : nullptr;
    int failures = 0;
    for (int c = 1; c <= 14; ++c) {
        Verdict v;
        const auto t0 = Clock::now();
        run_claims(c, v);
        if (c == 14) run_properties(unit_binary, v);
        const long long ms = ms_since(t0);
        if (ms > kLimitMs.at(c)) {
            v.ok = false;
            v.notes.push_back("time limit " + std::to_string(kLimitMs.at(c)) + " ms exceeded");
        }
        std::string claims;
        for (const auto& id : criterion_claims().at(c)) claims += (claims.empty() ? "" : ",") + id;
        std::printf("criterion %2d: %s  %7lld ms  [%s]\n", c, v.ok ? "PASS" : "FAIL", ms, claims.c_str());
        for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        failures += !v.ok;
    }
    std::printf("%d of 14 criteria passed\n", 14 - failures);
    return failures ? 1 : 0;
}
