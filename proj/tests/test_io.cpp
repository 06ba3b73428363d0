#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "specsim/io.hpp"

using namespace specsim;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/specsim_io_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

// Exit code of the CLI binary; stdout/stderr discarded.
int run_cli(const std::string& args) {
    std::string cmd = std::string(SPECSIM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("pmf CSV round trip with header, comments and tail mass") {
    std::istringstream in(
        "label,prob\n"
        "# tail_mass=0.1\n"
        "a,0.5\n"
        "b , 0.4 \n");
    Pmf p = io::parse_pmf(in);
    REQUIRE(p.size() == 2);
    CHECK(p.labels[1] == "b");
    CHECK(p.probs[1] == 0.4);
    CHECK(p.tail_mass == 0.1);

    std::ostringstream out;
    io::save_pmf_csv(p, out);
    std::istringstream back(out.str());
    Pmf q = io::parse_pmf(back);
    CHECK(q.labels == p.labels);
    CHECK(q.probs == p.probs);
    CHECK(q.tail_mass == p.tail_mass);
}

TEST_CASE("pmf JSON autodetection") {
    std::istringstream in(R"({"labels": ["x", "y"], "probs": [0.25, 0.75]})");
    Pmf p = io::parse_pmf(in);
    REQUIRE(p.size() == 2);
    CHECK(p.probs[0] == 0.25);

    std::istringstream missing(R"({"labels": ["x"]})");
    CHECK_THROWS_AS(io::parse_pmf(missing), ParseError);
    std::istringstream broken("{not json");
    CHECK_THROWS_AS(io::parse_pmf(broken), ParseError);
}

TEST_CASE("malformed pmf lines carry line numbers") {
    std::istringstream in("a,0.5\nb;0.5\n");
    try {
        io::parse_pmf(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    std::istringstream badprob("a,0.5\nb,zebra\n");
    CHECK_THROWS_AS(io::parse_pmf(badprob), ParseError);
    std::istringstream badmass("a,0.5\nb,0.2\n");
    CHECK_THROWS_AS(io::parse_pmf(badmass), ParseError);
}

TEST_CASE("map CSV round trip") {
    DeterministicMap m;
    m.domain_labels = {"a", "b"};
    m.codomain_labels = {"u"};
    m.assignment = {{"a", "u"}, {"b", "u"}};
    std::ostringstream out;
    io::write_map_csv(m, out);
    std::string path = write_temp("map.csv", out.str());
    DeterministicMap back = io::load_map_csv(path);
    CHECK(back.domain_labels == m.domain_labels);
    CHECK(back.apply("a") == "u");
    CHECK(back.apply("b") == "u");
}

TEST_CASE("channel CSV preserves first-seen alphabet order") {
    std::string path = write_temp("chan.csv",
                                  "x_label,y_label,prob\n"
                                  "1,heads,0.7\n"
                                  "1,tails,0.3\n"
                                  "0,tails,0.6\n"
                                  "0,heads,0.4\n");
    Channel c = io::load_channel(path);
    REQUIRE(c.input_labels.size() == 2);
    CHECK(c.input_labels[0] == "1");
    CHECK(c.output_labels[0] == "heads");
    CHECK(c.row("0").probs[0] == 0.4);

    std::ostringstream out;
    io::write_channel_csv(c, out);
    std::string path2 = write_temp("chan2.csv", out.str());
    Channel back = io::load_channel(path2);
    CHECK(back.input_labels == c.input_labels);
    CHECK(back.row("1").probs == c.row("1").probs);

    std::string badpath = write_temp("chanbad.csv", "x,y\n");
    CHECK_THROWS_AS(io::load_channel(badpath), ParseError);
    std::string shortpath = write_temp("chanshort.csv", "0,heads,0.5\n");
    CHECK_THROWS_AS(io::load_channel(shortpath), AlphabetError);  // row sums to 0.5
}

TEST_CASE("file digests are stable and content-sensitive") {
    std::string a = write_temp("dig_a", "hello\n");
    std::string b = write_temp("dig_b", "hello\n");
    std::string c = write_temp("dig_c", "hellp\n");
    CHECK(io::file_digest(a) == io::file_digest(b));
    CHECK(io::file_digest(a) != io::file_digest(c));
    CHECK(io::file_digest(a).rfind("fnv1a64:", 0) == 0);
    CHECK_THROWS_AS(io::file_digest("/nonexistent/file"), ParseError);
}

TEST_CASE("cli exit codes follow the error taxonomy") {
    std::string u2 = write_temp("u2.csv", "label,prob\na,0.5\nb,0.5\n");
    std::string u4 = write_temp("u4.csv", "label,prob\na,0.25\nb,0.25\nc,0.25\nd,0.25\n");
    std::string bad = write_temp("bad.csv", "a,zebra\n");

    CHECK(run_cli("spectrum " + u2) == 0);
    CHECK(run_cli("spectrum " + bad) == 2);
    CHECK(run_cli("simulate " + u4 + " " + u2 + " --eps 0.3 --gamma 1.21") == 0);
    // unmet hypothesis: e^-0.5 > 0.1
    CHECK(run_cli("simulate " + u4 + " " + u2 + " --eps 0.1 --gamma 0.5") == 3);
    CHECK(run_cli("check " + u2 + " " + u4 + " --mode sufficient --gamma 0 --gamma 1") == 0);

    std::string shortchan = write_temp("short.csv", "x_label,y_label,prob\n0,heads,0.5\n");
    std::string input = write_temp("in.csv", "label,prob\n0,1.0\n");
    CHECK(run_cli("channel " + input + " " + shortchan + " " + shortchan + " --eps 0.3") == 4);

    std::string badex = write_temp(
        "badex.json", R"({"example":1,"n":100,"q1":0.2,"p1":0.11,"q2":0.2,"p2":0.3,)"
                      R"("alpha":0.2,"beta":0.4})");
    CHECK(run_cli("example " + badex) == 5);

    std::string goodex = write_temp(
        "goodex.json", R"({"example":4,"n":256,"x_size":4})");
    CHECK(run_cli("--out /tmp/specsim_io_ex4.json example " + goodex) == 0);

    CHECK(run_cli("oracle grid " + u4 + " " + u2 + " --gamma 0.8 --grid 1000") == 0);
}

TEST_CASE("cli reports are reproducible modulo the clock") {
    std::string u2 = write_temp("r_u2.csv", "label,prob\na,0.5\nb,0.5\n");
    std::string u4 = write_temp("r_u4.csv", "label,prob\na,0.25\nb,0.25\nc,0.25\nd,0.25\n");
    REQUIRE(run_cli("--out /tmp/specsim_io_r1.json simulate " + u4 + " " + u2) == 0);
    REQUIRE(run_cli("--out /tmp/specsim_io_r2.json simulate " + u4 + " " + u2) == 0);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p);
        std::ostringstream s;
        std::string line;
        while (std::getline(f, line))
            if (line.find("wall_clock") == std::string::npos) s << line << "\n";
        return s.str();
    };
    CHECK(slurp("/tmp/specsim_io_r1.json") == slurp("/tmp/specsim_io_r2.json"));
}
