#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grasswt/json_io.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + " " + std::string(GRASSWT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int st = pclose(p);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

ordered_json parse_out(const RunResult& r) {
    ordered_json j = ordered_json::parse(r.out, nullptr, false);
    REQUIRE_FALSE(j.is_discarded());
    return j;
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("grasswt-cli-" + std::to_string(++counter) + "-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string str() const { return path.string(); }
    std::string sub(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("weights subcommand computes the simplex hierarchy") {
    TempDir tmp;
    RunResult r = run_cli("code weights --l 1 --m 3 --q 2 --r 1..3 --cache-dir " + tmp.sub("c"));
    CHECK(r.exit_code == 0);
    ordered_json j = parse_out(r);
    CHECK(j["report"] == "weights");
    REQUIRE(j["rows"].size() == 3);
    const int expected[] = {4, 6, 7};
    for (int i = 0; i < 3; ++i) {
        CHECK(j["rows"][i]["computed"] == expected[i]);
        CHECK(j["rows"][i]["closed_form"] == expected[i]);
        CHECK(j["rows"][i]["status"] == "pass");
    }
    CHECK(j["provenance"]["version"].is_string());
    CHECK(j["provenance"]["config"]["command"] == "weights");
    CHECK(j["provenance"]["budgets"]["subspaces"].is_number());
    CHECK(j["summary"]["failed"] == 0);

    RunResult csv =
        run_cli("code weights --l 1 --m 3 --q 2 --r 1..3 --format csv --cache-dir " +
                tmp.sub("c"));
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("r,computed,closed_form", 0) == 0);
    CHECK(csv.out.find("1,4,4") != std::string::npos);
}

TEST_CASE("verify subcommand exits zero on a clean run and records the seed") {
    TempDir tmp;
    RunResult r =
        run_cli("verify --l 2 --m 4 --q 2 --seed 7 --cache-dir " + tmp.sub("c"));
    CHECK(r.exit_code == 0);
    ordered_json j = parse_out(r);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["skipped"] == 0);
    CHECK(j["summary"]["passed"].get<int>() >= 12);
    CHECK(j["provenance"]["seed"] == 7);
    bool saw_d1 = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "d_1") {
            saw_d1 = true;
            CHECK(c["computed"] == 16);
            CHECK(c["status"] == "pass");
        }
    CHECK(saw_d1);
}

TEST_CASE("same config gives identical reports modulo runtime") {
    TempDir tmp;
    std::string base = "verify --l 1 --m 3 --q 2 --seed 3 --cache-dir ";
    RunResult a = run_cli(base + tmp.sub("cold-a"));
    RunResult b = run_cli(base + tmp.sub("cold-b"));
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    ordered_json ja = parse_out(a);
    ordered_json jb = parse_out(b);
    grasswt::strip_runtime(ja);
    grasswt::strip_runtime(jb);
    CHECK(ja.dump() == jb.dump());
}

TEST_CASE("cache hits replay the cold report byte for byte") {
    TempDir tmp;
    std::string cdir = tmp.sub("cache");
    std::string base = "verify --l 2 --m 4 --q 2 --cache-dir " + cdir + " --out ";
    CHECK(run_cli(base + tmp.sub("cold.json")).exit_code == 0);
    CHECK(run_cli(base + tmp.sub("warm.json")).exit_code == 0);
    std::string cold = slurp(tmp.sub("cold.json")), warm = slurp(tmp.sub("warm.json"));
    CHECK(cold != "");
    CHECK(cold == warm);

    RunResult ls = run_cli("cache list --cache-dir " + cdir);
    ordered_json entries = parse_out(ls)["entries"];
    CHECK(entries.size() > 1); // per-search entries plus the report entry
    bool saw_report = false;
    for (const auto& e : entries)
        saw_report = saw_report || e["key"].get<std::string>().rfind("report verify", 0) == 0;
    CHECK(saw_report);

    RunResult purge = run_cli("cache purge --cache-dir " + cdir);
    CHECK(parse_out(purge)["removed"].get<int>() == int(entries.size()));
    RunResult after = run_cli("cache list --cache-dir " + cdir);
    CHECK(parse_out(after)["entries"].empty());
}

TEST_CASE("environment variable sets the cache directory, flag wins over it") {
    TempDir tmp;
    std::string env_dir = tmp.sub("env-cache"), flag_dir = tmp.sub("flag-cache");
    std::string env_prefix = "GRASSWT_CACHE=" + env_dir;
    CHECK(run_cli("verify --l 1 --m 3 --q 2", env_prefix).exit_code == 0);
    CHECK(fs::exists(env_dir));
    CHECK(run_cli("verify --l 1 --m 3 --q 3 --cache-dir " + flag_dir, env_prefix).exit_code ==
          0);
    ordered_json ls = parse_out(run_cli("cache list --cache-dir " + flag_dir));
    bool saw_q3 = false;
    for (const auto& e : ls["entries"])
        saw_q3 = saw_q3 || e["key"].get<std::string>().find("q=3") != std::string::npos;
    CHECK(saw_q3);
}

TEST_CASE("conjecture subcommand labels and exit codes") {
    TempDir tmp;
    RunResult empty = run_cli("conjecture --m 5 --q 2 --cache-dir " + tmp.sub("c"));
    CHECK(empty.exit_code == 0);
    ordered_json je = parse_out(empty);
    CHECK(je["rows"].empty());
    CHECK(je["params"]["r_lo"].get<int>() > je["params"]["r_hi"].get<int>());

    RunResult scan = run_cli("conjecture --m 6 --q 2 --r 6..7 --cache-dir " + tmp.sub("c"));
    CHECK(scan.exit_code == 2); // r = 7 rests on witness evidence, a partial result
    ordered_json js = parse_out(scan);
    REQUIRE(js["rows"].size() == 2);
    CHECK(js["rows"][0]["label"] == "CONFIRMED");
    CHECK(js["rows"][0]["primal_value"] == 560);
    CHECK(js["rows"][1]["label"] == "UPPER-BOUND-MATCH");
    CHECK(js["rows"][1]["primal_value"] == 592);
    CHECK(js["rows"][1]["dual_value"] == 608);
    CHECK(js["note"].get<std::string>().find("desk hardware") != std::string::npos);
}

TEST_CASE("budget shortfalls produce partial reports with exit 2") {
    TempDir tmp;
    RunResult r = run_cli("verify --l 2 --m 5 --q 2 --budget-subspaces 2000000 --cache-dir " +
                          tmp.sub("c"));
    CHECK(r.exit_code == 2);
    ordered_json j = parse_out(r);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["skipped"].get<int>() > 0);
    for (const auto& c : j["checks"])
        if (c["name"] == "d_5") {
            CHECK(c["status"] == "skipped");
            CHECK(c["computed"].is_null());
        }

    // over-budget enumeration: no report, no partial file, exit 2
    std::string out_path = tmp.sub("never.gm");
    RunResult b = run_cli("code build --l 2 --m 5 --q 2 --budget-codewords 10 --out " + out_path);
    CHECK(b.exit_code == 2);
    CHECK_FALSE(fs::exists(out_path));
}

TEST_CASE("classify reads rows from a file or stdin") {
    TempDir tmp;
    std::string rows = tmp.sub("rows.txt");
    {
        std::ofstream f(rows);
        f << "1 0 0 0 0 0\n0 1 0 0 0 0\n";
    }
    RunResult r = run_cli("classify --l 2 --m 4 --q 2 --in " + rows);
    CHECK(r.exit_code == 0);
    ordered_json j = parse_out(r);
    CHECK(j["all_decomposable"] == true);
    CHECK(j["witness"]["label"] == "type-1");
    CHECK(j["params"]["dim"] == 2);

    std::string bad = tmp.sub("bad.txt");
    {
        std::ofstream f(bad);
        f << "1 0 0 0 0 1\n"; // rank-4 form
    }
    RunResult nr = run_cli("classify --l 2 --m 4 --q 2 --in " + bad);
    CHECK(nr.exit_code == 0);
    ordered_json nj = parse_out(nr);
    CHECK(nj["all_decomposable"] == false);
    CHECK(nj["witness"]["kind"] == "not-decomposable");

    RunResult viastdin = run_cli("classify --l 2 --m 4 --q 2 < " + rows);
    CHECK(viastdin.exit_code == 0);
    CHECK(parse_out(viastdin)["all_decomposable"] == true);
}

TEST_CASE("build writes the generator text format") {
    TempDir tmp;
    std::string out = tmp.sub("code.gm");
    RunResult r = run_cli("code build --l 2 --m 4 --q 2 --out " + out);
    CHECK(r.exit_code == 0);
    std::string text = slurp(out);
    CHECK(text.rfind("35 6 2\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7); // header + six rows
}

TEST_CASE("usage errors exit 64 and write nothing") {
    TempDir tmp;
    CHECK(run_cli("no-such-command").exit_code == 64);
    CHECK(run_cli("verify --l 2 --m 4 --q 2 --format yaml").exit_code == 64);
    CHECK(run_cli("verify --l 2 --m 4 --q 6").exit_code == 64); // 6 is not a prime power
    CHECK(run_cli("code").exit_code == 64);                     // missing nested subcommand
    CHECK(run_cli("code weights --l 2 --m 4 --q 2 --r 9..4").exit_code == 64);

    std::string out_path = tmp.sub("untouched.json");
    CHECK(run_cli("verify --l 9 --m 4 --q 2 --out " + out_path).exit_code == 64);
    CHECK_FALSE(fs::exists(out_path));

    std::string short_row = tmp.sub("short.txt");
    {
        std::ofstream f(short_row);
        f << "1 0 0\n";
    }
    CHECK(run_cli("classify --l 2 --m 4 --q 2 --in " + short_row).exit_code == 64);

    RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("classify") != std::string::npos);
}

TEST_SUITE_END();
