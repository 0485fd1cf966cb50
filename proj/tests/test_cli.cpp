#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "weylinc/harness.hpp"
#include "weylinc/io.hpp"

using namespace weylinc;

namespace {

int cli(const std::vector<std::string>& args, std::string* captured = nullptr) {
    std::vector<std::string> argv_storage = args;
    argv_storage.insert(argv_storage.begin(), "weylinc");
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    std::ostringstream sink;
    std::streambuf* old = std::cout.rdbuf(sink.rdbuf());
    int rc = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    if (captured)
        *captured = sink.str();
    return rc;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempFile {
    explicit TempFile(std::string name) : path(std::move(name)) {}
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

}  // namespace

TEST_CASE("gen writes the documented file format") {
    TempFile pts("cli_gen_test.txt");
    CHECK(cli({"gen", "--family", "iid", "--dim", "2", "--n", "32", "--seed", "7", "--out",
               pts.path}) == 0);
    std::string content = slurp(pts.path);
    CHECK(content.rfind("# dim=2 family=iid seed=7 n=32\n", 0) == 0);
    PointSequence seq = read_sequence_file(pts.path);
    CHECK(seq.size() == 32);
}

TEST_CASE("gamma emits a JSON fit on stdout") {
    TempFile pts("cli_gamma_test.txt");
    REQUIRE(cli({"gen", "--family", "iid", "--dim", "2", "--n", "1024", "--seed", "3",
                 "--out", pts.path}) == 0);
    std::string out;
    CHECK(cli({"gamma", "--in", pts.path, "--kmax", "6", "--checkpoints", "256,512,1024"},
              &out) == 0);
    CHECK(out.find("\"gamma_hat\":") != std::string::npos);
    CHECK(out.find("\"checkpoints\":[256,512,1024]") != std::string::npos);
}

TEST_CASE("unknown subcommands and bad flags exit 2") {
    CHECK(cli({"frobnicate"}) == 2);
    CHECK(cli({"gen"}) == 2);                               // missing --n
    CHECK(cli({"gen", "--n", "8", "--family", "bogus"}) == 2);
    CHECK(cli({"incidence", "--in", "no_such_file.txt"}) == 2);
    CHECK(cli({"scaling", "--region", "annulus:0.4:0.6", "--checkpoints", "128,256,512",
               "--seeds", "2"}) == 2);  // b >= 1/2
}

TEST_CASE("degenerate numeric inputs exit 3") {
    TempFile pts("cli_const_test.txt");
    {
        std::vector<double> same(64, 0.25);
        PointSequence seq(2, std::move(same), Provenance{"manual", "", 0});
        write_sequence_file(pts.path, seq);
    }
    CHECK(cli({"energy", "--in", pts.path, "--s", "1.0"}) == 3);
}

TEST_CASE("config file drives a sweep and flags override it") {
    TempFile cfg("cli_config_test.json");
    TempFile csv_a("cli_sweep_a.csv");
    TempFile csv_b("cli_sweep_b.csv");
    {
        std::ofstream out(cfg.path);
        out << R"({"generator":{"family":"iid","dim":2},
                   "region":"annulus:0.25:0.30",
                   "checkpoints":[128,256,512],
                   "seeds":[1,2,3],
                   "gamma":0.5,
                   "threads":2})";
    }
    std::string fit_a;
    CHECK(cli({"scaling", "--config", cfg.path, "--out", csv_a.path}, &fit_a) == 0);
    CHECK(fit_a.find("\"checkpoints\":[128,256,512]") != std::string::npos);
    std::string rows_a = slurp(csv_a.path);
    CHECK(rows_a.rfind("seed,N,count", 0) == 0);
    CHECK(rows_a.find("\n3,512,") != std::string::npos);

    // --checkpoints overrides the file's list
    std::string fit_b;
    CHECK(cli({"scaling", "--config", cfg.path, "--checkpoints", "64,128,256", "--out",
               csv_b.path}, &fit_b) == 0);
    CHECK(fit_b.find("\"checkpoints\":[64,128,256]") != std::string::npos);
}

TEST_CASE("sweep needs at least three surviving checkpoints") {
    std::string out;
    CHECK(cli({"scaling", "--family", "iid", "--dim", "2", "--region", "annulus:0.25:0.30",
               "--checkpoints", "128,256", "--seeds", "2", "--gamma", "0.5"},
              &out) == 3);
}
