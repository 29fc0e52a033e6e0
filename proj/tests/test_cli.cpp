#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "horn/cli.hpp"
#include "horn/render.hpp"
#include "horn/report_io.hpp"
#include "horn/sweep.hpp"

using namespace horn;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("horn_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("lr") {
    auto r = run({"lr", "[5,2]", "[3,0]", "[8,2]", "--method=both"});
    CHECK(r.code == 0);
    CHECK(r.out == "classical 1\ndomino 1\nagree\n");
    CHECK(run({"lr", "[1]", "[]", "[1]"}).out == "classical 1\ndomino 1\nagree\n");
    CHECK(run({"lr", "[1]", "[1]", "[3]", "--method", "classical"}).out == "classical 0\n");
    CHECK(run({"lr", "[2,1]", "[2,1]", "[3,2,1]", "--method", "domino"}).out == "domino 2\n");

    r = run({"lr", "[1,x]", "[1]", "[2]"});
    CHECK(r.code == 2);
    CHECK(r.err.find("position 3") != std::string::npos);
    CHECK(run({"lr", "[1]"}).code == 2);
    CHECK(run({"lr", "[1]", "[1]", "[2]", "--method", "other"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumerate") {
    auto r = run({"enumerate", "[10,6,4,0]", "[5,5]", "--yamanouchi"});
    CHECK(r.code == 0);
    CHECK(r.out.find("reading word 1112212212") != std::string::npos);
    CHECK(r.out.find("count 1\n") != std::string::npos);
    CHECK(run({"enumerate", "[2]", "[1]"}).out == "# tableau 1 reading word 1\n1< 1>\ncount 1\n");

    const auto big = run({"enumerate", "[14,14,12,12,8,8,6,6]", "[10,10,8,8,2,2]", "--yamanouchi"});
    const auto small = run({"enumerate", "[14,12,8,6]", "[10,8,2]", "--yamanouchi"});
    CHECK(big.out.find("count 17\n") != std::string::npos);
    CHECK(small.out.find("count 3\n") != std::string::npos);

    const auto dir = scratch("enumerate");
    r = run({"enumerate", "[4,2]", "[2,1]", "--render", "svg", "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "tableau_1.svg"));
    r = run({"enumerate", "[4,2]", "[2,1]", "--render=ascii"});
    CHECK(r.out.find("+-------+") != std::string::npos);
    CHECK(run({"enumerate", "[4,2]", "[2,1]", "--render", "png"}).code == 2);
}

TEST_CASE("verify exit codes and reports") {
    const auto dir = scratch("verify");
    const auto json_path = (dir / "report.json").string();
    auto r = run({"verify", "--suite", "implication", "--max-part", "4", "--p", "2", "--json", json_path});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(slurp(json_path));
    CHECK(j["suite"] == "implication");
    CHECK(j["complete"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["records"].size() > 0);

    CHECK(run({"verify", "--suite", "p1p2", "--max-part", "0"}).code == 0);
    CHECK(run({"verify", "--suite", "prop2", "--max-part", "6", "--budget", "0.000001"}).code == 3);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
    CHECK(run({"verify", "--max-part", "-1"}).code == 2);
}

TEST_CASE("config file supplies defaults that flags override") {
    const auto dir = scratch("config");
    {
        std::ofstream f(dir / "horn.toml");
        f << "[verify]\nsuite = \"p1p2\"\nmax-part = 2\n";
    }
    const auto cfg = (dir / "horn.toml").string();
    auto r = run({"--config", cfg, "verify", "--all"});
    CHECK(r.code == 0);
    CHECK(r.out.find("suite=p1p2") != std::string::npos);
    r = run({"--config", cfg, "verify", "--suite", "implication"});
    CHECK(r.out.find("suite=implication") != std::string::npos);
}

TEST_CASE("spectra") {
    const auto dir = scratch("spectra");
    const auto prefix = (dir / "run").string();
    auto r = run({"spectra", "[5,3,2,0]", "--samples", "2000", "--seed", "1", "--mode", "block", "--out", prefix});
    CHECK(r.code == 0);
    CHECK(r.out.find("hull pass rate 2000/2000") != std::string::npos);
    const auto j = nlohmann::json::parse(slurp(prefix + ".json"));
    CHECK(j["samples"].size() == 2000);
    for (const auto& s : j["samples"]) CHECK(s["block_discrepancy"].get<double>() < 1e-9);
    CHECK(slurp(prefix + ".tsv").rfind("seed index raw_1", 0) == 0);

    r = run({"spectra", "[5,3,2,0]", "--samples", "0", "--out", prefix});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(slurp(prefix + ".json"))["samples"].empty());

    CHECK(run({"spectra", "[2.5,1,0.5,0]", "--samples", "50"}).code == 0);
    CHECK(run({"spectra", "[1,2]"}).code == 2);
    CHECK(run({"spectra", "[1,0,0]"}).code == 2);
    CHECK(run({"spectra", "[1,a]"}).code == 2);

    // byte-identical reruns, independent of thread count
    const auto a = run({"spectra", "[5,3,2,0]", "--samples", "300", "--seed", "4", "--out", prefix + "a"});
    const auto b = run({"--threads", "1", "spectra", "[5,3,2,0]", "--samples", "300", "--seed", "4", "--out",
                        prefix + "b"});
    CHECK(a.out == b.out);
    CHECK(slurp(prefix + "a.tsv") == slurp(prefix + "b.tsv"));
}

TEST_CASE("figures") {
    const auto dir = scratch("figures");
    auto r = run({"figures", "--out", dir.string()});
    CHECK(r.code == 0);
    for (int i = 1; i <= 4; ++i) {
        CHECK(fs::exists(dir / ("figure1_" + std::to_string(i) + ".svg")));
        CHECK(fs::exists(dir / ("figure2_" + std::to_string(i) + ".svg")));
    }
    CHECK(fs::exists(dir / "figure3_1.svg"));
    CHECK_FALSE(fs::exists(dir / "figure1_5.svg"));
    const auto index = slurp(dir / "index.txt");
    CHECK(index.find("figure1_1 shape [10,6,4,0] weight [5,5] word 1112212212") != std::string::npos);
    CHECK(index.find("figure1_4 shape [10,6,4,0] weight [8,2] word 1111112112") != std::string::npos);

    const auto first = slurp(dir / "figure3_1.svg");
    run({"figures", "--out", dir.string()});
    CHECK(slurp(dir / "figure3_1.svg") == first);
}

TEST_CASE("rendering") {
    using O = Orientation;
    const DominoTableau t(Partition{2, 1, 1}, {{1, 1, O::horizontal, 1}, {2, 1, O::vertical, 2}});
    CHECK(render_ascii(t) ==
          "+-------+\n"
          "|   1   |\n"
          "+---+---+\n"
          "|   |\n"
          "| 2 |\n"
          "|   |\n"
          "+---+\n");
    const auto svg = render_svg(t);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("<rect x=\"2\" y=\"2\" width=\"80\" height=\"40\"/>") != std::string::npos);
    CHECK(svg.find("<rect x=\"2\" y=\"42\" width=\"40\" height=\"80\"/>") != std::string::npos);
    CHECK(svg.find("<text x=\"42\" y=\"22\">1</text>") != std::string::npos);
    CHECK(svg.find("<text x=\"22\" y=\"82\">2</text>") != std::string::npos);
    CHECK(svg.find("stroke-width=\"2\"") != std::string::npos);
}

TEST_CASE("report JSON round trip") {
    SweepConfig c;
    c.p = 2;
    c.max_part = 3;
    const auto report = sweep_lpp(c);
    const auto back = report_from_json(nlohmann::json::parse(report_to_json(report).dump()));
    REQUIRE(back.records.size() == report.records.size());
    for (std::size_t i = 0; i < back.records.size(); ++i) {
        CHECK(back.records[i].sigma == report.records[i].sigma);
        CHECK(back.records[i].split == report.records[i].split);
        CHECK(back.records[i].lhs == report.records[i].lhs);
        CHECK(back.records[i].rhs == report.records[i].rhs);
    }
    std::ostringstream text;
    write_report_text(text, Report{"x", {}, false});
    CHECK(text.str() == "suite=x records=0 failures=0 complete=no\n");
}
