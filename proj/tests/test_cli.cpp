#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " '" CUBIC4_BIN "' " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

std::string last_line(const std::string& s) {
    std::string t = s;
    while (!t.empty() && t.back() == '\n') t.pop_back();
    return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_SUITE("atlas") {
    TEST_CASE("build dot and json") {
        const Run dot = run("atlas build --graph k4 --format dot");
        CHECK(dot.code == 0);
        CHECK(count(dot.out, "[label=\"C^{") == 75);
        const Run js = run("atlas build --graph k3 --format json");
        CHECK(js.code == 0);
        const auto j = nlohmann::json::parse(js.out);
        CHECK(j["kind"] == "k3");
        CHECK(j["vertices"].size() == 75);
        bool annotated = false;
        for (const auto& v : j["vertices"]) annotated |= v.contains("real_locus");
        CHECK(annotated);
    }
    TEST_CASE("format from the environment") {
        const Run r = run("atlas build --graph k4", "CUBIC4_FORMAT=dot");
        CHECK(r.code == 0);
        CHECK(r.out.rfind("digraph", 0) == 0);
    }
    TEST_CASE("unknown graph is a usage error") {
        CHECK(run("atlas build --graph k5").code == 2);
        CHECK(run("atlas frobnicate").code == 2);
        CHECK(run("").code == 2);
    }
    TEST_CASE("verify") {
        const Run r = run("atlas verify");
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["passed"] == true);
        CHECK(j["failures"].empty());
        CHECK(j["warnings"].size() == 1);
    }
}

TEST_SUITE("lattice") {
    TEST_CASE("info") {
        const Run r = run("lattice info 'U+E8(2)'");
        CHECK(r.code == 0);
        CHECK(r.out.find("rank: 10") != std::string::npos);
        CHECK(r.out.find("signature: (9,1)") != std::string::npos);
        CHECK(r.out.find("(Z/2)^8") != std::string::npos);
        CHECK(r.out.find("two-part integer: yes") != std::string::npos);
        const Run s = run("lattice info '<6>'");
        CHECK(s.out.find("discriminant group: Z/6") != std::string::npos);
        CHECK(s.out.find("two-part integer: no") != std::string::npos);
        const auto j = nlohmann::json::parse(run("lattice info 'A2+U' --format json").out);
        CHECK(j["rank"] == 4);
    }
    TEST_CASE("roots") {
        const Run r = run("lattice roots E8 --norm 2 --format json");
        CHECK(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["count"] == 240);
        CHECK(run("lattice roots U --norm 2").code == 3);
    }
    TEST_CASE("parse errors") {
        CHECK(run("lattice info D3").code == 2);
        CHECK(run("lattice info 'A2+'").code == 2);
    }
}

TEST_SUITE("cusp") {
    TEST_CASE("verdicts") {
        const auto yes = nlohmann::json::parse(run("cusp check --edge C0,0:C0,1").out);
        CHECK(yes["verdict"] == "yes");
        const Run no = run("cusp check --edge C2,0:C2,1_I");
        CHECK(no.code == 0);
        CHECK(nlohmann::json::parse(no.out)["verdict"] == "no");
        CHECK(run("cusp check --edge C0,0:C5,5").code == 2);
        CHECK(run("cusp check --edge nonsense").code == 2);
    }
}

TEST_SUITE("report") {
    TEST_CASE("main theorem") {
        const Run r = run("report main-theorem");
        CHECK(r.code == 0);
        CHECK(count(r.out, "\n| C") == 75);
        CHECK(r.out.find("| C5_4_I | (10,2) | I | RP4 # 5(S2xS2) # 4(S1xS3) |") != std::string::npos);
    }
    TEST_CASE("spiral") {
        const Run r = run("report spiral");
        CHECK(r.code == 0);
        CHECK(last_line(r.out) == "H1 = Z/2 + Z/2 (two routes agree)");
    }
    TEST_CASE("topology table json") {
        const auto j = nlohmann::json::parse(run("topology table --format json").out);
        CHECK(j.size() == 75);
    }
}

TEST_SUITE("misc") {
    TEST_CASE("surgery and ramified") {
        const Run h = run("surgery h1 --matrix '[[-4,2],[2,-2]]'");
        CHECK(h.code == 0);
        CHECK(h.out.find("Z/2 + Z/2") != std::string::npos);
        CHECK(run("surgery h1 --matrix '[[1,2],[3,4]]'").code == 1);
        CHECK(run("surgery h1 --matrix '[[1,'").code == 2);
        const Run e = run("ramified euler --chiP 1 --chiPplus 1 --chiL 0");
        CHECK(e.code == 0);
        CHECK(e.out.find('3') != std::string::npos);
    }
    TEST_CASE("deterministic output") {
        for (const char* args : {"atlas build --graph k4 --format json", "report main-theorem", "atlas verify"})
            CHECK(run(args).out == run(args).out);
    }
}
