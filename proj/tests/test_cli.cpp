#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FROBPER_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("hk subcommand") {
    const Run csv = run("hk --d 3 --p 5 --e-max 2 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("\n1,5,55,55,true,") != std::string::npos);
    CHECK(csv.out.find("\n2,25,1405,1405,true,") != std::string::npos);

    const Run singular = run("hk --d 3 --p 3");
    CHECK(singular.code == 2);

    const Run dev = run("hk --d 4 --p 3 --e-max 2 --format csv");
    CHECK(dev.code == 0);
    CHECK(dev.out.find("deviates") != std::string::npos);
    CHECK(dev.out.find("28/9") != std::string::npos);

    const Run json = run("hk --d 2 --p 3 --e-max 1");
    CHECK(json.code == 0);
    CHECK(json.out.find("\"identity_crosscheck\": true") != std::string::npos);
}

TEST_CASE("syzygy subcommand") {
    const Run a = run("syzygy --d 3 --p 2 --gens 2,2,2 --twist 3");
    CHECK(a.code == 0);
    CHECK(a.out.find("\"dim\": 1") != std::string::npos);
    CHECK(run("syzygy --d 3 --p 2 --gens 2,2,2 --twist -1").out.find("\"dim\": 0") != std::string::npos);
    CHECK(run("syzygy --d 4 --p 3 --gens 3,3,3 --twist 4").out.find("\"dim\": 1") != std::string::npos);
    CHECK(run("syzygy --d 4 --p 3 --gens 0,3,3 --twist 4").code == 2);
    CHECK(run("syzygy --d 4 --p 3 --gens 3,3 --twist 4").code == 2);
    CHECK(run("syzygy --d 4 --p 3 --gens 3,3,3 --twist 4 --format csv").code == 2);
}

TEST_CASE("verify subcommand") {
    const Run ok = run("verify --d 2 --p 3");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"overall\": true") != std::string::npos);
    CHECK(run("verify --d 3 --p 7").code == 2);
    const Run ex = run("verify --d 3 --p 7 --exploratory");
    CHECK(ex.code == 0);
    CHECK(ex.out.find("\"overall\": null") != std::string::npos);
    CHECK(run("verify --d 2 --p 3 --exhaustive").code == 0);
    CHECK(run("verify --d 2 --p 9").code == 2);
    CHECK(run("verify --d 2 --p 3 --window 5,1").code == 2);
}

TEST_CASE("remaining subcommands") {
    const Run w = run("witness --d 4 --p 3 --gens 3,3,3 --window 0,6");
    CHECK(w.code == 0);
    CHECK(w.out.find("\"m\": 4") != std::string::npos);
    CHECK(run("witness --d 3 --p 5 --gens 5,5,5 --window 0,9 --format text").out == "no witness found\n");
    CHECK(run("splitting --p 3 --forms \"0,0,1;1,0,0;1,1\" --format text").out == "O(-2) + O(-3)\n");
    CHECK(run("splitting --p 3 --forms \"0,0,1;0,1,0;0,1\"").code == 2);
    CHECK(run("double-cover --d 2 --p 3").code == 0);
    CHECK(run("char2-suite").code == 0);
    CHECK(run("nonsense").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("output is reproducible and can go to a file") {
    CHECK(run("verify --d 3 --p 5").out == run("verify --d 3 --p 5").out);
    const std::string path = "frobper_cli_test_out.json";
    CHECK(run("syzygy --d 3 --p 2 --gens 2,2,2 --twist 3 --out " + path).code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == run("syzygy --d 3 --p 2 --gens 2,2,2 --twist 3").out);
    std::remove(path.c_str());
}
