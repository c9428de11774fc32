#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rainbow/cache.hpp"
#include "rainbow/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run rwlab(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = rainbow::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "rwlab-cli-test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

json read_json(const fs::path& p)
{
    std::ifstream in(p);
    return json::parse(in);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("analyze prints the pattern profile")
{
    const Run r = rwlab({"analyze", "--pattern", "Bw"});
    CHECK(r.status == 0);
    CHECK(r.out.find("delta_prime: 2") != std::string::npos);
    CHECK(r.out.find("f.value: 2") != std::string::npos);
    CHECK(r.out.find("pendant_edge: false") != std::string::npos);
    const Run c5 = rwlab({"analyze", "--pattern", "Dhc"});
    CHECK(c5.status == 0);
    CHECK(c5.out.find("family_F_witness: ") != std::string::npos);
    CHECK(c5.out.find("family_F_witness: -") == std::string::npos);
}

TEST_CASE("rwsat writes JSON whose numbers match the table")
{
    const fs::path out = scratch("rwsat5.json");
    const Run r = rwlab({"rwsat", "--n", "5", "--pattern", "Bw", "--json", out.string()});
    REQUIRE(r.status == 0);
    const json doc = read_json(out);
    const json& res = doc.at("result");
    CHECK(doc.at("command") == "rwsat");
    CHECK(res.at("exact") == true);
    const int value = res.at("value");
    CHECK(value >= 5);
    CHECK(value <= 7);
    CHECK(r.out.find("value: " + std::to_string(value) + "\n") != std::string::npos);
    CHECK(r.out.find("bound_upper.value: " + res.at("bound_upper").at("value").dump()) != std::string::npos);
    for (const auto& w : res.at("witnesses")) CHECK(r.out.find(w.get<std::string>()) != std::string::npos);
}

TEST_CASE("cache hits reproduce the cold payload byte for byte")
{
    const fs::path cache = scratch("cache.jsonl");
    const fs::path cold = scratch("cold.json");
    const fs::path warm = scratch("warm.json");
    REQUIRE(rwlab({"rwsat", "--n", "5", "--pattern", "Bw", "--cache", cache.string(), "--json", cold.string()}).status == 0);
    const Run second = rwlab({"rwsat", "--n", "5", "--pattern", "Bw", "--cache", cache.string(), "--json", warm.string(),
                              "--jobs", "2"});
    REQUIRE(second.status == 0);
    CHECK(second.out.find("(cached)") != std::string::npos);
    const json a = read_json(cold);
    const json b = read_json(warm);
    CHECK(a.at("result").dump() == b.at("result").dump());
    CHECK(a.at("cached") == false);
    CHECK(b.at("cached") == true);

    // one line per cold run; a different n is a different key
    REQUIRE(rwlab({"rwsat", "--n", "4", "--pattern", "Bw", "--cache", cache.string()}).status == 0);
    std::ifstream in(cache);
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        const json rec = json::parse(line);
        CHECK(rec.contains("version"));
        CHECK(rec.contains("timestamp"));
        ++lines;
    }
    CHECK(lines == 2);

    rainbow::ResultCache rc(cache.string());
    CHECK(rc.lookup("rwsat", json{{"n", 4}, {"pattern", "Bw"}, {"budget", 0}, {"bound", 12}}).has_value());
    CHECK_FALSE(rc.lookup("rwsat", json{{"n", 4}, {"pattern", "Bw"}, {"budget", 0}, {"bound", 12}}, "0.0.0").has_value());
}

TEST_CASE("construct, verify and check a certificate")
{
    const fs::path colors = scratch("kr.colors");
    const fs::path cert = scratch("kr.cert");
    const fs::path info = scratch("kr.json");
    const Run c = rwlab({"construct", "--kind", "kr", "--n", "6", "--r", "3", "--colors-out", colors.string(), "--json",
                         info.string(), "--closure"});
    REQUIRE(c.status == 0);
    const json built = read_json(info).at("result");
    CHECK(built.at("edges") == 9);
    CHECK(built.at("closed_form") == 9);
    CHECK(built.at("saturated") == true);
    const std::string g6 = built.at("graph");

    const Run v = rwlab({"verify", "--graph", g6, "--pattern", "Bw", "--colors", colors.string(), "--certificate",
                         cert.string()});
    REQUIRE(v.status == 0);
    CHECK(v.out.find("verdict: saturated") != std::string::npos);
    CHECK(v.out.find("certificate: " + cert.string()) != std::string::npos);
    CHECK(slurp(cert).starts_with(g6 + "\nBw\n"));

    const Run chk = rwlab({"verify", "--graph", g6, "--pattern", "Bw", "--colors", colors.string(), "--check",
                           cert.string()});
    REQUIRE(chk.status == 0);
    CHECK(chk.out.find("verdict: accepted") != std::string::npos);

    const Run no = rwlab({"verify", "--graph", "C?", "--pattern", "Bw"});
    REQUIRE(no.status == 0);
    CHECK(no.out.find("verdict: not saturated") != std::string::npos);
}

TEST_CASE("other constructions through the CLI")
{
    CHECK(rwlab({"construct", "--kind", "c4", "--n", "7"}).out.find("edges: 9\n") != std::string::npos);
    const Run ff = rwlab({"construct", "--kind", "family-f", "--n", "9", "--pattern", "Dhc"});
    CHECK(ff.status == 0);
    CHECK(ff.out.find("edges: 24\n") != std::string::npos);
    const Run ci = rwlab({"construct", "--kind", "clique-isolated", "--n", "5", "--pattern", "Bg"});
    CHECK(ci.status == 0);
    CHECK(ci.out.find("edges: 3\n") != std::string::npos);
    const Run tb = rwlab({"construct", "--kind", "three-block", "--n", "6", "--pattern", "Bw"});
    CHECK(tb.out.find("closed_form: 10\n") != std::string::npos);
    // K_3 + 2K_1 twice
    const Run j = rwlab({"construct", "--kind", "join", "--graph", "Dw?", "--graph2", "Dw?", "--t", "2", "--a-size", "1",
                         "--b-threshold", "1"});
    CHECK(j.status == 0);
    CHECK(j.out.find("edges: 22\n") != std::string::npos);
    CHECK(j.out.find("closed_form: 22\n") != std::string::npos);
}

TEST_CASE("turan, f-of-h and bench")
{
    const Run t = rwlab({"turan", "--n", "5", "--family", "Bw"});
    CHECK(t.status == 0);
    CHECK(t.out.find("ex: 6\n") != std::string::npos);
    const Run none = rwlab({"turan", "--n", "3", "--pattern", "Bw"});
    CHECK(none.out.find("ex: no free graph") != std::string::npos);
    const Run f = rwlab({"f-of-h", "--pattern", "Cr"});
    CHECK(f.status == 0);
    CHECK(f.out.find("f.value: 7\n") != std::string::npos);
    const fs::path b = scratch("bench.json");
    const Run bench = rwlab({"bench", "--pattern", "Bw", "--n-min", "4", "--n-max", "6", "--json", b.string()});
    REQUIRE(bench.status == 0);
    for (const auto& row : read_json(b).at("result").at("rows")) CHECK(row.at("within") == true);
}

TEST_CASE("exit statuses")
{
    CHECK(rwlab({}).status == 2);
    CHECK(rwlab({"frobnicate"}).status == 2);
    const Run missing = rwlab({"rwsat", "--pattern", "Bw"});
    CHECK(missing.status == 2);
    CHECK(missing.err.find("--n") != std::string::npos);
    CHECK(rwlab({"construct", "--kind", "hexagon", "--n", "5"}).status == 2);
    CHECK(rwlab({"analyze", "--pattern", "not graph6"}).status == 2);
    CHECK(rwlab({"rwsat", "--n", "five", "--pattern", "Bw"}).status == 2);
    // domain errors
    CHECK(rwlab({"analyze", "--pattern", "B?"}).status == 1);
    const Run small = rwlab({"construct", "--kind", "clique-isolated", "--n", "3", "--pattern", "Bg"});
    CHECK(small.status == 1);
    CHECK(small.err.find("n > f(H)+1") != std::string::npos);
    CHECK(rwlab({"rwsat", "--n", "13", "--pattern", "Bw"}).status == 1);
    CHECK(rwlab({"verify", "--graph", "Bw", "--pattern", "Bw", "--check", "/nonexistent/cert"}).status == 1);
    CHECK(rwlab({"--help"}).status == 0);
}
