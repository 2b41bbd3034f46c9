// End-to-end checks of the command line tool, driven through the shell.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli_path() {
    const char* p = std::getenv("EDIST_CLI");
    return p ? p : "";
}

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string tmp = "/tmp/edist_cli_out.txt";
    const std::string cmd = cli_path() + " " + args + " > " + tmp + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {status, ss.str()};
}

void write(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

TEST_CASE("cli end to end") {
    if (cli_path().empty()) {
        MESSAGE("EDIST_CLI not set; skipping CLI tests");
        return;
    }

    write("/tmp/edist_x.txt", "kitten");
    write("/tmp/edist_y.txt", "sitting");
    write("/tmp/edist_same.txt", "kitten");
    write("/tmp/edist_empty.txt", "");

    SUBCASE("exact distances") {
        auto r = run("exact /tmp/edist_x.txt /tmp/edist_y.txt --metric ed");
        CHECK(r.status == 0);
        CHECK(r.out.find("ed=3") != std::string::npos);

        auto r2 = run("exact /tmp/edist_x.txt /tmp/edist_same.txt");
        CHECK(r2.out.find("ed=0") != std::string::npos);

        auto r3 = run("exact /tmp/edist_empty.txt /tmp/edist_y.txt");
        CHECK(r3.out.find("ed=7") != std::string::npos);

        auto r4 = run("exact /tmp/edist_x.txt /tmp/edist_y.txt --metric lcs");
        CHECK(r4.out.find("lcs=4") != std::string::npos);
    }

    SUBCASE("errors exit nonzero with a diagnostic") {
        auto r = run("exact /tmp/no_such_file_x /tmp/edist_y.txt");
        CHECK(r.status != 0);
        CHECK(r.out.find("error") != std::string::npos);
    }

    SUBCASE("tree distance") {
        auto r = run("edist /tmp/edist_x.txt /tmp/edist_same.txt --b 2");
        CHECK(r.status == 0);
        CHECK(r.out.find("edist=0") != std::string::npos);
    }

    SUBCASE("approx and dtep") {
        auto r = run("approx /tmp/edist_x.txt /tmp/edist_same.txt --b 4 --seed 7");
        CHECK(r.status == 0);
        CHECK(r.out.find("estimate=") != std::string::npos);
        CHECK(r.out.find("queries=") != std::string::npos);

        auto r2 = run(
            "approx /tmp/edist_x.txt /tmp/edist_y.txt --b 4 --seed 7 --beta 2");
        CHECK(r2.status == 0);
        CHECK(r2.out.find("decision=") != std::string::npos);

        auto r3 =
            run("dtep /tmp/edist_x.txt /tmp/edist_same.txt --b 4 --beta 2 --seed 9");
        CHECK(r3.status == 0);
        CHECK(r3.out.find("close") != std::string::npos);
    }

    SUBCASE("sample tree dump") {
        auto r = run("sample --n 64 --b 4 --beta 4 --seed 3 --out /tmp/edist_tree.txt");
        CHECK(r.status == 0);
        CHECK(r.out.find("queries=") != std::string::npos);
        std::ifstream in("/tmp/edist_tree.txt");
        std::string header;
        std::getline(in, header);
        CHECK(header == "#edist-sample v1");
    }

    SUBCASE("hard pair generation is deterministic") {
        const std::string args =
            "gen-hard --sigma 4 --block-len 16 --shift-mag 2 --levels 2 "
            "--bin-len 4 --seed 5 --which cross --out-x /tmp/edist_hx "
            "--out-y /tmp/edist_hy --manifest /tmp/edist_hm";
        CHECK(run(args).status == 0);
        std::ifstream m("/tmp/edist_hm");
        std::stringstream ms;
        ms << m.rdbuf();
        CHECK(ms.str().find("#edist-hard v1") != std::string::npos);
        CHECK(ms.str().find("digest_x=") != std::string::npos);

        auto again = run(
            "gen-hard --sigma 4 --block-len 16 --shift-mag 2 --levels 2 "
            "--bin-len 4 --seed 5 --which cross --out-x /tmp/edist_hx2 "
            "--out-y /tmp/edist_hy2 --manifest /tmp/edist_hm2");
        CHECK(again.status == 0);
        std::ifstream f1("/tmp/edist_hx", std::ios::binary),
            f2("/tmp/edist_hx2", std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        CHECK(s1.str() == s2.str());
        CHECK(!s1.str().empty());
    }

    SUBCASE("similarity lab") {
        write("/tmp/edist_d0.txt", "0.5 ab\n0.5 ba\n");
        write("/tmp/edist_d1.txt", "0.5 ab\n0.5 ba\n");
        auto r = run("similarity /tmp/edist_d0.txt /tmp/edist_d1.txt");
        CHECK(r.status == 0);
        CHECK(r.out.find("alpha=0") != std::string::npos);
        CHECK(r.out.find("uniform_alpha=0") != std::string::npos);
    }

    SUBCASE("bench: header-only with zero trials, deterministic rows") {
        auto r = run(
            "bench --sizes 64 --b 4 --betas 2 --trials 0 --seed 1 "
            "--family random --out /tmp/edist_bench0.tsv");
        CHECK(r.status == 0);
        std::ifstream in("/tmp/edist_bench0.tsv");
        std::string l1, l2, l3;
        std::getline(in, l1);
        std::getline(in, l2);
        const bool more = static_cast<bool>(std::getline(in, l3));
        CHECK(l1 == "#edist-approx v1");
        CHECK(!more);

        CHECK(run("bench --sizes 64,128 --b 4 --betas 2,4 --trials 2 --seed 5 "
                  "--family random-edits --out /tmp/edist_bench1.tsv")
                  .status == 0);
        CHECK(run("bench --sizes 64,128 --b 4 --betas 2,4 --trials 2 --seed 5 "
                  "--family random-edits --out /tmp/edist_bench2.tsv")
                  .status == 0);
        // identical up to the wall-time measurement in the last column
        auto strip_millis = [](const std::string& path) {
            std::ifstream in(path);
            std::string line, out;
            while (std::getline(in, line)) {
                const auto cut = line.rfind('\t');
                out += (cut == std::string::npos ? line : line.substr(0, cut));
                out += '\n';
            }
            return out;
        };
        const std::string c1 = strip_millis("/tmp/edist_bench1.tsv");
        CHECK(c1 == strip_millis("/tmp/edist_bench2.tsv"));
        CHECK(c1.find("median-ratio") != std::string::npos);
    }
}
