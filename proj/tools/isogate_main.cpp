#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isogate/claims.hpp"
#include "isogate/error.hpp"
#include "isogate/gatefinder.hpp"
#include "isogate/modcurve.hpp"
#include "isogate/ratcurves.hpp"

using namespace isogate;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

void print_table(const std::vector<ClaimReport>& reports) {
    std::printf("%-24s %-13s %10s\n", "claim", "status", "ms");
    for (const auto& r : reports)
        std::printf("%-24s %-13s %10lld\n", r.claim_id.c_str(), std::string(to_string(r.status)).c_str(),
                    static_cast<long long>(r.elapsed_ms));
}

std::string matrix_list(const std::vector<ModularMatrix>& gens) {
    std::string s;
    for (const auto& g : gens) s += (s.empty() ? "" : " ") + g.to_string();
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite group and elliptic curve computations behind mod-r isogeny questions"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON file overriding sample/height bounds and prime lists")
        ->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Run registered claims");
    std::string claim_id, json_path;
    std::vector<int> r_list;
    bool all = false, list = false;
    auto* claim_opt = verify->add_option("--claim", claim_id, "Claim id");
    auto* all_opt = verify->add_flag("--all", all, "Run every registered claim");
    verify->add_flag("--list", list, "List claim ids");
    verify->add_option("--r", r_list, "Comma-separated r values")->delimiter(',');
    verify->add_option("--json", json_path, "Write reports as a JSON array");
    claim_opt->excludes(all_opt);

    auto* search = app.add_subcommand("search", "Structured searches");
    auto* gates = search->add_subcommand("gate-groups", "Gate groups up to conjugacy");
    int gate_r = 0;
    std::string gate_json_path;
    gates->add_option("--r", gate_r, "Prime 5 <= r <= 13")->required();
    auto* gate_json = gates->add_option("--json", gate_json_path, "JSON output, to the given file or stdout")
                          ->expected(0, 1);
    search->require_subcommand(1);

    auto* curves = app.add_subcommand("curves", "Curve invariants");
    auto* disc = curves->add_subcommand("disc-class", "Square class of the discriminant for a j-invariant");
    std::string j_text;
    disc->add_option("--j", j_text, "j-invariant, e.g. \"-17*373^3/2^17\"")->required();
    curves->require_subcommand(1);

    auto* torsion = app.add_subcommand("torsion-bound", "Torsion upper bound over Q(zeta_r)");
    std::string label;
    int torsion_r = 0;
    std::vector<std::uint32_t> primes;
    std::string torsion_json;
    torsion->add_option("--curve", label, "X0(11), X0(14) or X0(20)")->required();
    torsion->add_option("--r", torsion_r, "Prime r")->required();
    torsion->add_option("--primes", primes, "Comma-separated primes q = 1 mod r")->delimiter(',');
    torsion->add_option("--json", torsion_json, "Write the report as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        ClaimConfig cfg = config_path.empty() ? ClaimConfig{} : ClaimConfig::load(config_path);

        if (verify->parsed()) {
            if (list) {
                for (const auto& c : claim_registry()) std::printf("%-24s %s\n", c.id.c_str(), c.description.c_str());
                return 0;
            }
            if (!all && claim_id.empty()) throw Error(ErrorKind::InvalidArgument, "give --claim <id> or --all");
            if (!r_list.empty()) cfg.r_list = r_list;
            std::vector<ClaimReport> reports = all ? run_all(cfg) : std::vector<ClaimReport>{run_claim(claim_id, cfg)};
            if (!json_path.empty()) write_file(json_path, reports_to_json(reports));
            if (all) {
                print_table(reports);
            } else {
                const auto& r = reports.front();
                std::printf("%s: %s (%lld ms)\n", r.claim_id.c_str(), std::string(to_string(r.status)).c_str(),
                            static_cast<long long>(r.elapsed_ms));
                std::printf("expected: %s\ncomputed: %s\n", r.expected.dump().c_str(), r.computed.dump().c_str());
            }
            bool ok = true;
            for (const auto& r : reports) ok = ok && (all ? r.status != ClaimStatus::fail : r.status == ClaimStatus::pass);
            return ok ? 0 : 1;
        }

        if (gates->parsed()) {
            const GateGroupResult res = find_gate_groups(PrimeModulus(gate_r));
            if (gate_json->count() > 0) {
                json arr = json::array();
                for (std::size_t i = 0; i < res.groups.size(); ++i) {
                    std::vector<std::string> gens;
                    for (const auto& g : res.groups[i].generators()) gens.push_back(g.to_string());
                    arr.push_back({{"order", res.groups[i].order()}, {"index", res.indices[i]}, {"generators", gens}});
                }
                json out = {{"schema", kReportSchema}, {"r", gate_r}, {"classes", arr}, {"plus_minus_pairs", res.plus_minus_pairs}};
                if (gate_json_path.empty()) std::cout << out.dump(2) << "\n";
                else write_file(gate_json_path, out.dump(2) + "\n");
            } else {
                std::printf("r = %d: %zu class(es)\n", gate_r, res.groups.size());
                for (std::size_t i = 0; i < res.groups.size(); ++i)
                    std::printf("  order %zu, index %zu, generators %s\n", res.groups[i].order(), res.indices[i],
                                matrix_list(res.groups[i].generators()).c_str());
                for (const auto& [a, b] : res.plus_minus_pairs)
                    std::printf("  class %zu = <-I, class %zu>\n", a, b);
            }
            return 0;
        }

        if (disc->parsed()) {
            const ExactRational j = ExactRational::parse(j_text);
            std::printf("j = %s\n", j.to_string().c_str());
            std::printf("disc square class: %s\n", disc_square_class_of_j(j).to_string().c_str());
            const CubicFactorType c = two_division_cubic(j);
            std::printf("2-division cubic: %s", std::string(to_string(c.shape)).c_str());
            if (c.witness_prime) std::printf(" (no root mod %u)", *c.witness_prime);
            std::printf("\n");
            return 0;
        }

        if (torsion->parsed()) {
            const NamedCurve& c = named_curve(label);
            if (primes.empty()) {
                const auto it = cfg.torsion_primes.find(label);
                if (it != cfg.torsion_primes.end()) primes = it->second;
            }
            const TorsionBoundReport rep =
                primes.empty() ? torsion_bound_cyclotomic(c, PrimeModulus(torsion_r), cfg.height_bound)
                               : torsion_bound_cyclotomic(c, PrimeModulus(torsion_r), primes, cfg.height_bound);
            std::printf("%s over Q(zeta_%d)\n", rep.label.c_str(), rep.r);
            for (std::size_t i = 0; i < rep.primes.size(); ++i)
                std::printf("  #E(F_%u) = %lld\n", rep.primes[i], rep.counts[i]);
            std::printf("torsion divides %lld (%s)\n", rep.gcd_bound, rep.flag.c_str());
            std::printf("rational points found: %d\n", rep.rational_points_found);
            if (!torsion_json.empty()) {
                json out = {{"schema", kReportSchema}, {"curve", rep.label}, {"r", rep.r},
                            {"primes", rep.primes},    {"counts", rep.counts}, {"gcd_bound", rep.gcd_bound},
                            {"rational_points_found", rep.rational_points_found}, {"flag", rep.flag}};
                write_file(torsion_json, out.dump(2) + "\n");
            }
            return 0;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
