#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

std::string cli() {
    const char* c = std::getenv("MESHWAVE_CLI");
    REQUIRE(c != nullptr);
    return std::string(c);
}

std::string data_dir() {
    const char* d = std::getenv("MESHWAVE_DATA");
    REQUIRE(d != nullptr);
    return std::string(d);
}

fs::path work_dir() {
    fs::path p = fs::temp_directory_path() / "meshwave_cli_test";
    fs::create_directories(p);
    return p;
}

int run_cmd(const std::string& cmd) {
    int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string capture(const std::string& cmd) {
    fs::path out = work_dir() / "stdout.txt";
    int rc = std::system((cmd + " > " + out.string() + " 2>/dev/null").c_str());
    REQUIRE(rc != -1);
    std::ifstream in(out);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string scenario(const std::string& name) {
    return data_dir() + "/scenarios/" + name + ".json";
}

}  // namespace

TEST_CASE("validate accepts the bundled fixtures") {
    CHECK(run_cmd(cli() + " validate " + scenario("urban_proposed")) == 0);
    std::string out = capture(cli() + " validate " + scenario("single_queue"));
    CHECK(out.find(": ok (") != std::string::npos);
}

TEST_CASE("missing input file exits with the I/O code") {
    CHECK(run_cmd(cli() + " validate /nonexistent/file.json") == 3);
    CHECK(run_cmd(cli() + " simulate /nonexistent/file.json") == 3);
    CHECK(run_cmd(cli() + " policy /nonexistent/file.json") == 3);
}

TEST_CASE("malformed and invalid files exit with the validation code") {
    fs::path bad = work_dir() / "bad.json";
    std::ofstream(bad) << "{this is not json";
    CHECK(run_cmd(cli() + " validate " + bad.string()) == 2);

    fs::path invalid = work_dir() / "invalid.json";
    std::ofstream(invalid) << R"({
      "name": "x", "mode": "baseline", "duration_s": 10,
      "topology": {"nodes": [], "links": []},
      "traffic": {"user_rate": [[0,0]], "video_rate": [[0,0]],
                  "mean_session_duration_s": 60.0,
                  "per_session_bandwidth_mbps": 2.0,
                  "total_capacity_mbps": 100.0},
      "spectrum": {"s_total_mhz": 100.0}
    })";
    CHECK(run_cmd(cli() + " validate " + invalid.string()) == 2);
    CHECK(run_cmd(cli() + " simulate " + invalid.string()) == 2);
}

TEST_CASE("unknown arguments exit with the validation code") {
    CHECK(run_cmd(cli() + " frobnicate") == 2);
    CHECK(run_cmd(cli() + " simulate") == 2);  // missing required argument
}

TEST_CASE("simulate writes its outputs and is reproducible") {
    fs::path out1 = work_dir() / "sim1";
    fs::path out2 = work_dir() / "sim2";
    std::string base = cli() + " simulate " + scenario("single_queue") +
                       " --replications 2 --out ";
    CHECK(run_cmd(base + out1.string()) == 0);
    CHECK(run_cmd(base + out2.string()) == 0);
    for (const fs::path& d : {out1, out2}) {
        CHECK(fs::exists(d / "run.json"));
        CHECK(fs::exists(d / "samples.csv"));
        CHECK(fs::exists(d / "replications.json"));
    }
    CHECK(slurp(out1 / "run.json") == slurp(out2 / "run.json"));
    CHECK(slurp(out1 / "samples.csv") == slurp(out2 / "samples.csv"));

    // outputs re-parse as JSON
    nlohmann::json j = nlohmann::json::parse(slurp(out1 / "run.json"));
    CHECK(j.contains("kpis"));
    CHECK(j["seed"].get<std::uint64_t>() == 7);  // seed from the file

    std::string csv_head = slurp(out1 / "samples.csv").substr(0, 64);
    CHECK(csv_head.rfind("t,lambda_mbps,rho,latency_ms,throughput_mbps,loss,beff,"
                         "alpha_s",
                         0) == 0);
}

TEST_CASE("seed priority: flag beats file beats environment") {
    fs::path out = work_dir() / "seeds";
    std::string sim = cli() + " simulate ";

    // --seed wins over the file seed
    CHECK(run_cmd(sim + scenario("single_queue") + " --seed 77 --replications 2 --out " +
                  (out / "flag").string()) == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(out / "flag" / "run.json"));
    CHECK(j["seed"].get<std::uint64_t>() == 77);

    // file seed wins over the environment
    CHECK(run_cmd("MESHWAVE_SEED=123 " + sim + scenario("single_queue") +
                  " --replications 2 --out " + (out / "file").string()) == 0);
    j = nlohmann::json::parse(slurp(out / "file" / "run.json"));
    CHECK(j["seed"].get<std::uint64_t>() == 7);

    // environment applies when the file has no seed entry
    nlohmann::json cfg = nlohmann::json::parse(slurp(scenario("single_queue")));
    cfg.erase("seed");
    fs::path unseeded = work_dir() / "unseeded.json";
    std::ofstream(unseeded) << cfg.dump(2) << "\n";
    CHECK(run_cmd("MESHWAVE_SEED=123 " + sim + unseeded.string() +
                  " --replications 2 --out " + (out / "env").string()) == 0);
    j = nlohmann::json::parse(slurp(out / "env" / "run.json"));
    CHECK(j["seed"].get<std::uint64_t>() == 123);

    // garbage in the environment variable is rejected
    CHECK(run_cmd("MESHWAVE_SEED=banana " + sim + unseeded.string() +
                  " --replications 2 --out " + (out / "bad").string()) == 2);
}

TEST_CASE("compare rejects mismatched inputs with the domain code") {
    CHECK(run_cmd(cli() + " compare " + scenario("urban_baseline") + " " +
                  scenario("urban_baseline") + " --replications 2 --out " +
                  (work_dir() / "cmp_same").string()) == 4);
    CHECK(run_cmd(cli() + " compare " + scenario("urban_baseline") + " " +
                  scenario("rural_proposed") + " --replications 2 --out " +
                  (work_dir() / "cmp_mismatch").string()) == 4);
}

TEST_CASE("compare on a matched pair writes the report") {
    fs::path out = work_dir() / "cmp_ok";
    std::string cmd = cli() + " compare " + scenario("rural_baseline") + " " +
                      scenario("rural_proposed") + " --replications 2 --out " +
                      out.string();
    CHECK(run_cmd(cmd) == 0);
    nlohmann::json j = nlohmann::json::parse(slurp(out / "comparison.json"));
    CHECK(j.contains("metrics"));
    CHECK(j["metrics"].size() >= 8);
}

TEST_CASE("policy sweep prints CSV with an argmax row") {
    std::string out = capture(cli() + " policy " + data_dir() +
                              "/policy_inputs.json --beta-grid 0.05 0.10 0.20 "
                              "--alpha-grid 0.12");
    std::istringstream in(out);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "beta,alpha_s,rcg_pct,e_gov_eur,seb_eur,nsb_eur,roi,b_eff,ps,"
          "nsb_argmax,beff_optimal");
    int rows = 0;
    bool argmax_at_010 = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        if (line.rfind("0.1000,", 0) == 0 &&
            line.find(",1,") != std::string::npos)
            argmax_at_010 = true;
    }
    CHECK(rows == 3);
    CHECK(argmax_at_010);

    fs::path csv = work_dir() / "sweep.csv";
    CHECK(run_cmd(cli() + " policy " + data_dir() + "/policy_inputs.json --out " +
                  csv.string()) == 0);
    CHECK(fs::exists(csv));
}
