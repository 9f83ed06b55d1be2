// Command-line front end: topology queries, routing, verification, and the
// survey/ABT/latency reports, with CSV table output for reproduction runs.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpillar/metrics.hpp"
#include "dpillar/oracle.hpp"
#include "dpillar/symmetry.hpp"

using json = nlohmann::json;
using namespace dpillar;

namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

long rounded_pct(double value) {
    return std::lround(value);
}

json route_to_json(const RouteResult& route, const TopologyParams& params,
                   const std::string& alg) {
    json hops = json::array();
    for (const RouteHop& hop : route.hops) {
        hops.push_back({{"move", std::string(1, move_letter(hop.move))},
                        {"via", format_switch(hop.via)},
                        {"to", format_server(hop.to)}});
    }
    return json{{"n", params.n},
                {"k", params.k},
                {"src", format_server(route.src)},
                {"dst", format_server(route.dst())},
                {"alg", alg},
                {"length", route.length()},
                {"moves", format_moves(route.moves())},
                {"hops", hops}};
}

json survey_to_json(const SurveyReport& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"alg", algorithm_name(r.algorithm)},
                {"destinations", r.destinations},
                {"avg_path_length", r.avg_path_length},
                {"non_minimal_pct", r.non_minimal_pct},
                {"histogram", r.histogram},
                {"cumulative_pct", r.cumulative_pct}};
}

std::string survey_to_csv(const SurveyReport& r) {
    std::string head = "n,k,alg,destinations,avg_path_length,non_minimal_pct";
    std::string row = std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                      algorithm_name(r.algorithm) + "," + std::to_string(r.destinations) + "," +
                      fixed(r.avg_path_length, 4) + "," + fixed(r.non_minimal_pct, 2);
    for (std::size_t l = 0; l < r.cumulative_pct.size(); ++l) {
        head += ",cum_len" + std::to_string(l);
        row += "," + fixed(r.cumulative_pct[l], 1);
    }
    return head + "\n" + row + "\n";
}

json abt_to_json(const AbtReport& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"alg", algorithm_name(r.algorithm)},
                {"servers", r.servers},
                {"flows", r.flows},
                {"max_load", r.max_load},
                {"total_load", r.total_load},
                {"abt", r.abt}};
}

std::string abt_to_csv(const AbtReport& r) {
    return "n,k,alg,servers,flows,max_load,abt\n" + std::to_string(r.n) + "," +
           std::to_string(r.k) + "," + algorithm_name(r.algorithm) + "," +
           std::to_string(r.servers) + "," + std::to_string(r.flows) + "," +
           std::to_string(r.max_load) + "," + fixed(r.abt, 2) + "\n";
}

void emit(const json& body, const std::string& csv, const std::string& format,
          const std::string& out_path) {
    const std::string text = format == "csv" ? csv : body.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
        if (!out) throw std::runtime_error("cannot write " + out_path);
    }
}

// Average routing latencies measured on the reference testbed, used as the
// L_r inputs of the latency model and of the `repro` latency tables.
struct RoutingLatencyRow {
    int n, k;
    double lr_min_us, lr_sp_us;
};
constexpr RoutingLatencyRow kRoutingLatencies[] = {
    {16, 4, 5.964, 1.349},
    {32, 3, 3.325, 0.960},
    {48, 3, 3.328, 0.859},
};

constexpr std::pair<int, int> kSurveyRows[] = {
    {16, 3}, {16, 4}, {16, 5}, {32, 3}, {32, 4},
    {48, 3}, {64, 3}, {80, 3}, {128, 3},
};
constexpr std::pair<int, int> kCumulativeRows[] = {
    {16, 3}, {16, 5}, {32, 4}, {80, 3}, {128, 3},
};
// Not desk scale beyond 1e5 servers; the flow budget prunes further.
constexpr std::pair<int, int> kAbtRows[] = {
    {16, 3}, {32, 3}, {16, 4}, {48, 3},
};

struct LatencyPresetRow {
    const char* name;
    const char* csv;      // output file stem
    int hop_decimals;
};
constexpr LatencyPresetRow kLatencyTables[] = {
    {"1g-std", "table6", 1},
    {"10g-std", "tableA1", 2},
    {"1g-jumbo", "tableA2", 2},
    {"10g-jumbo", "tableA3", 2},
};

int run_repro(const std::string& out_dir, std::uint64_t flow_budget, int workers) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::map<std::pair<std::pair<int, int>, Algorithm>, SurveyReport> surveys;
    auto survey_of = [&](int n, int k, Algorithm alg) -> const SurveyReport& {
        const auto key = std::make_pair(std::make_pair(n, k), alg);
        auto it = surveys.find(key);
        if (it == surveys.end()) {
            std::cerr << "survey " << n << "," << k << " " << algorithm_name(alg) << "...\n";
            it = surveys.emplace(key, path_length_survey(make_params(n, k), alg, workers)).first;
        }
        return it->second;
    };

    {
        std::ofstream out(fs::path(out_dir) / "table2.csv");
        out << "n,k,servers,avg_path_len_min,avg_path_len_sp,avg_len_improvement_pct,"
               "non_min_paths_pct\n";
        for (const auto [n, k] : kSurveyRows) {
            const SurveyReport& min_r = survey_of(n, k, Algorithm::Min);
            const SurveyReport& sp_r = survey_of(n, k, Algorithm::SpClockwise);
            const double improve =
                100.0 * (1.0 - min_r.avg_path_length / sp_r.avg_path_length);
            // improvement is floored, the non-minimal share rounded
            out << n << "," << k << "," << min_r.destinations << ","
                << fixed(min_r.avg_path_length, 2) << "," << fixed(sp_r.avg_path_length, 2)
                << "," << static_cast<long>(improve) << ","
                << rounded_pct(sp_r.non_minimal_pct) << "\n";
        }
    }
    {
        std::ofstream out(fs::path(out_dir) / "table3.csv");
        out << "n,k,alg";
        for (int l = 0; l <= 9; ++l) out << ",len" << l;
        out << "\n";
        for (const auto [n, k] : kCumulativeRows) {
            for (const Algorithm alg : {Algorithm::SpClockwise, Algorithm::Min}) {
                const SurveyReport& r = survey_of(n, k, alg);
                out << n << "," << k << "," << (alg == Algorithm::Min ? "Min" : "SP");
                for (int l = 0; l <= 9; ++l) {
                    if (l < static_cast<int>(r.cumulative_pct.size())) {
                        out << "," << fixed(r.cumulative_pct[l], 1);
                    } else {
                        out << ",";
                    }
                }
                out << "\n";
            }
        }
    }
    {
        std::ofstream out(fs::path(out_dir) / "table4.csv");
        out << "n,k,servers,abt_min,abt_sp,abt_improvement_pct\n";
        for (const auto [n, k] : kAbtRows) {
            const TopologyParams params = make_params(n, k);
            const std::uint64_t servers = params.server_count();
            const std::uint64_t flows = servers * (servers - 1);
            if (servers >= 100'000 || flows > flow_budget) {
                std::cerr << "abt " << n << "," << k << ": skipped (" << flows
                          << " flows over budget)\n";
                continue;
            }
            std::cerr << "abt " << n << "," << k << " (" << flows << " flows)...\n";
            const AbtReport min_r = abt(params, Algorithm::Min, flow_budget, workers);
            const AbtReport sp_r = abt(params, Algorithm::SpClockwise, flow_budget, workers);
            out << n << "," << k << "," << servers << "," << fixed(min_r.abt, 2) << ","
                << fixed(sp_r.abt, 2) << ","
                << rounded_pct(100.0 * (min_r.abt - sp_r.abt) / sp_r.abt) << "\n";
        }
    }
    {
        std::ofstream out(fs::path(out_dir) / "table5.csv");
        out << "n,k,servers,lr_min_us,lr_sp_us,lr_ratio_pct\n";
        for (const RoutingLatencyRow& row : kRoutingLatencies) {
            out << row.n << "," << row.k << "," << make_params(row.n, row.k).server_count()
                << "," << fixed(row.lr_min_us, 3) << "," << fixed(row.lr_sp_us, 3) << ","
                << rounded_pct(100.0 * row.lr_min_us / row.lr_sp_us) << "\n";
        }
    }
    for (const LatencyPresetRow& table : kLatencyTables) {
        std::ofstream out(fs::path(out_dir) / (std::string(table.csv) + ".csv"));
        out << "n,k,lhop_min,lhop_sp,lhop_decline_pct,ltotal_min,ltotal_sp,"
               "ltotal_improvement_pct\n";
        for (const RoutingLatencyRow& row : kRoutingLatencies) {
            const double dbar_min = survey_of(row.n, row.k, Algorithm::Min).avg_path_length;
            const double dbar_sp =
                survey_of(row.n, row.k, Algorithm::SpClockwise).avg_path_length;
            const LatencyReport min_r =
                latency(latency_preset(table.name, row.lr_min_us), dbar_min);
            const LatencyReport sp_r =
                latency(latency_preset(table.name, row.lr_sp_us), dbar_sp);
            out << row.n << "," << row.k << "," << fixed(min_r.hop_us, table.hop_decimals)
                << "," << fixed(sp_r.hop_us, table.hop_decimals) << ","
                << rounded_pct(100.0 * (min_r.hop_us - sp_r.hop_us) / sp_r.hop_us) << ","
                << fixed(min_r.total_us, 1) << "," << fixed(sp_r.total_us, 1) << ","
                << rounded_pct(100.0 * (sp_r.total_us - min_r.total_us) / sp_r.total_us)
                << "\n";
        }
    }
    std::cerr << "tables written to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DPillar network toolkit: topology, routing, verification and metrics"};
    app.require_subcommand(1);

    int n = 6, k = 3;
    std::string alg = "min", format = "json", out_path;
    int workers = 0;
    auto add_nk = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "switch port count (even, >= 2)")->required();
        cmd->add_option("--k", k, "number of columns (>= 2)")->required();
    };

    auto* topo = app.add_subcommand("topo", "instance summary");
    add_nk(topo);
    topo->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    topo->add_option("--out", out_path, "write to a file instead of stdout");

    auto* route = app.add_subcommand("route", "route one source-destination pair");
    std::string src_text, dst_text;
    add_nk(route);
    route->add_option("--src", src_text, "source, e.g. 0:0.0.0")->required();
    route->add_option("--dst", dst_text, "destination")->required();
    route->add_option("--alg", alg)->check(CLI::IsMember({"min", "sp-cw", "sp-acw", "sp-best"}));

    auto* survey = app.add_subcommand("survey", "fixed-source path length survey");
    std::uint64_t dest_budget = 100'000'000;
    add_nk(survey);
    survey->add_option("--alg", alg)->check(CLI::IsMember({"min", "sp-cw", "sp-acw", "sp-best"}));
    survey->add_option("--workers", workers, "worker threads (default: DPILLAR_WORKERS or cores)");
    survey->add_option("--dest-budget", dest_budget);
    survey->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    survey->add_option("--out", out_path);

    auto* abt_cmd = app.add_subcommand("abt", "all-to-all aggregate bottleneck throughput");
    std::uint64_t flow_budget = 300'000'000;
    add_nk(abt_cmd);
    abt_cmd->add_option("--alg", alg)->check(CLI::IsMember({"min", "sp-cw", "sp-acw", "sp-best"}));
    abt_cmd->add_option("--flow-budget", flow_budget);
    abt_cmd->add_option("--workers", workers);
    abt_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    abt_cmd->add_option("--out", out_path);

    auto* lat = app.add_subcommand("latency", "per-hop and end-to-end latency model");
    std::string preset = "1g-std";
    double lr = 0.0, dbar = 0.0;
    lat->add_option("--preset", preset)
        ->check(CLI::IsMember({"1g-std", "1g-jumbo", "10g-std", "10g-jumbo"}));
    lat->add_option("--lr", lr, "average routing latency in microseconds")->required();
    lat->add_option("--dbar", dbar, "average path length in hops")->required();
    lat->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    lat->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check shortest paths against BFS ground truth");
    bool all_sources = false;
    std::uint64_t node_budget = 1'000'000;
    add_nk(verify);
    verify->add_flag("--all-sources", all_sources, "BFS from every server, not just 0:0...0");
    verify->add_option("--node-budget", node_budget);

    auto* cayley = app.add_subcommand("cayley", "check the generator/edge correspondence");
    add_nk(cayley);

    auto* repro = app.add_subcommand("repro", "regenerate all desk-scale result tables as CSV");
    std::string repro_dir = "repro_out";
    repro->add_option("--out", repro_dir, "output directory");
    repro->add_option("--flow-budget", flow_budget);
    repro->add_option("--workers", workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (topo->parsed()) {
            const TopologyParams params = make_params(n, k);
            const json body{{"n", params.n},
                            {"k", params.k},
                            {"servers", params.server_count()},
                            {"switches", params.switch_count()},
                            {"links", params.link_count()}};
            const std::string csv = "n,k,servers,switches,links\n" + std::to_string(params.n) +
                                    "," + std::to_string(params.k) + "," +
                                    std::to_string(params.server_count()) + "," +
                                    std::to_string(params.switch_count()) + "," +
                                    std::to_string(params.link_count()) + "\n";
            emit(body, csv, format, out_path);
        } else if (route->parsed()) {
            const TopologyParams params = make_params(n, k);
            const ServerId src = parse_server(src_text, params);
            const ServerId dst = parse_server(dst_text, params);
            RouteResult result;
            switch (algorithm_from_name(alg)) {
                case Algorithm::Min:
                    result = dpillar_min_path(src, dst, params);
                    break;
                case Algorithm::SpClockwise:
                    result = dpillar_sp_path(src, dst, SpDirection::Clockwise, params);
                    break;
                case Algorithm::SpAntiClockwise:
                    result = dpillar_sp_path(src, dst, SpDirection::AntiClockwise, params);
                    break;
                case Algorithm::SpBest: {
                    const int cw = dpillar_sp_length(src, dst, SpDirection::Clockwise, params);
                    const int acw =
                        dpillar_sp_length(src, dst, SpDirection::AntiClockwise, params);
                    result = dpillar_sp_path(
                        src, dst, cw <= acw ? SpDirection::Clockwise : SpDirection::AntiClockwise,
                        params);
                    break;
                }
            }
            std::cout << route_to_json(result, params, alg).dump(2) << "\n";
        } else if (survey->parsed()) {
            const SurveyReport report = path_length_survey(
                make_params(n, k), algorithm_from_name(alg), workers, dest_budget);
            emit(survey_to_json(report), survey_to_csv(report), format, out_path);
        } else if (abt_cmd->parsed()) {
            const AbtReport report =
                abt(make_params(n, k), algorithm_from_name(alg), flow_budget, workers);
            emit(abt_to_json(report), abt_to_csv(report), format, out_path);
        } else if (lat->parsed()) {
            const LatencyReport report = latency(latency_preset(preset, lr), dbar);
            const json body{{"preset", preset},     {"lr_us", lr},
                            {"dbar", dbar},         {"data_us", report.data_us},
                            {"hop_us", report.hop_us}, {"total_us", report.total_us}};
            const std::string csv = "preset,lr_us,dbar,data_us,hop_us,total_us\n" + preset + "," +
                                    fixed(lr, 3) + "," + fixed(dbar, 4) + "," +
                                    fixed(report.data_us, 3) + "," + fixed(report.hop_us, 2) +
                                    "," + fixed(report.total_us, 1) + "\n";
            emit(body, csv, format, out_path);
        } else if (verify->parsed()) {
            const VerifyReport report =
                verify_instance(make_params(n, k), all_sources, node_budget);
            std::cout << "sources checked:    " << report.sources_checked << "\n"
                      << "pairs checked:      " << report.pairs_checked << "\n"
                      << "min mismatches:     " << report.min_mismatches << "\n"
                      << "sp bound breaches:  " << report.sp_bound_violations << "\n"
                      << "eccentricity:       " << report.eccentricity << " (expected "
                      << report.expected_diameter << ")\n";
            for (const std::string& line : report.examples) std::cout << "  " << line << "\n";
            std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
            return report.pass() ? 0 : 1;
        } else if (cayley->parsed()) {
            const CayleyReport report = check_cayley(make_params(n, k));
            std::cout << "nodes checked: " << report.nodes_checked << "\n"
                      << "edges checked: " << report.edges_checked << "\n";
            for (const std::string& line : report.counterexamples) {
                std::cout << "  " << line << "\n";
            }
            std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
            return report.pass ? 0 : 1;
        } else if (repro->parsed()) {
            return run_repro(repro_dir, flow_budget, workers);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
