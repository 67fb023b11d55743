#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include <json.hpp>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = c2::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json last_error(const std::string& err) {
    std::istringstream in(err);
    std::string line, last;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '{') last = line;
    }
    return nlohmann::json::parse(last);
}

}  // namespace

TEST_CASE("search golden CSV") {
    const auto r = run({"search", "--k", "2", "--m-max", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "k,M,w,x,p1,p2,d,symbol_ok,h,two_part,cyclic\n"
          "2,1,2,3,5,11,55,true,4,4,true\n"
          "2,1,2,5,13,3,39,true,4,4,true\n");
    CHECK(r.err.rfind("# search", 0) == 0);
}

TEST_CASE("search JSON mirrors the CSV fields") {
    const auto r = run({"search", "--k", "1", "--m-max", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["p1"] == 5);
    CHECK(j[0]["p2"] == 3);
    CHECK(j[0]["d"] == 15);
    CHECK(j[0]["two_part"] == 2);
    CHECK(j[0]["cyclic"] == true);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"k", "M", "w", "x", "p1", "p2", "d", "symbol_ok", "h",
                                           "two_part", "cyclic"});
}

TEST_CASE("singular reports vanishing for odd m") {
    const auto r = run({"singular", "--m", "15"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("S2,15,product,0,0,odd\n") != std::string::npos);
    CHECK(r.out.rfind("series,m,mode,truncation_Q,value,vanishing_reason\n", 0) == 0);
    const auto r16 = run({"singular", "--m", "16"});
    CHECK(r16.out.find("S2,16,product,0,0.660161815847,none\n") != std::string::npos);
}

TEST_CASE("verify") {
    const auto by_d = run({"verify", "--d", "39"});
    CHECK(by_d.code == 0);
    CHECK(by_d.out == "d,h,two_part,cyclic,ambiguous_count\n39,4,4,true,2\n");

    const auto cert = run({"verify", "--k", "2", "--m", "1", "--p1", "13", "--p2", "3"});
    CHECK(cert.code == 0);
    CHECK(cert.out.find("2,1,2,5,13,3,39,true,4,4,true") != std::string::npos);

    const auto bad = run({"verify", "--k", "2", "--m", "1", "--p1", "13", "--p2", "5"});
    CHECK(bad.code == 2);
    CHECK(last_error(bad.err)["detail"] == "sum-mismatch");
}

TEST_CASE("classgroup with forms") {
    const auto r = run({"classgroup", "--d", "39", "--forms"});
    CHECK(r.code == 0);
    CHECK(r.out == "d,h,two_part,cyclic,ambiguous_count,forms\n39,4,4,true,2,\"1,1,10;2,-1,5;2,1,5;3,3,4\"\n");
    const auto j = run({"classgroup", "--d", "39", "--forms", "--format", "json"});
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed[0]["forms"].size() == 4);
    CHECK(parsed[0]["forms"][3] == "3,3,4");
    const auto plain = run({"classgroup", "--d", "39", "--format", "json"});
    CHECK_FALSE(nlohmann::json::parse(plain.out)[0].contains("forms"));
}

TEST_CASE("compare rows and vanishing rejection") {
    const auto r = run({"compare", "--n-lo", "1000", "--n-hi", "1016", "--step", "2", "--skip-vanishing"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,R2,main_term,ratio");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 7);  // 1000..1016 even, minus 1004 and 1012
    CHECK(r.out.find("\n1000,688.051760369,") != std::string::npos);

    const auto v = run({"compare", "--n-lo", "100", "--n-hi", "120", "--step", "2"});
    CHECK(v.code == 2);
    CHECK(last_error(v.err)["detail"] == "vanishing-singular-series");
}

TEST_CASE("exit codes for invalid input") {
    CHECK(run({"search", "--k", "2", "--m-max", "1", "--bogus"}).code == 2);
    CHECK(run({"search", "--k", "0", "--m-max", "1"}).code == 2);
    CHECK(run({"search", "--k", "2", "--m-max", "0"}).code == 2);
    CHECK(run({"classgroup", "--d", "5"}).code == 2);
    CHECK(run({"search", "--k", "2", "--m-max", "1", "--format", "xml"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({}).code == 2);

    const auto overflow = run({"search", "--k", "5", "--m-min", "2", "--m-max", "2"});
    CHECK(overflow.code == 2);
    const auto e = last_error(overflow.err);
    CHECK(e["error"] == "overflow");
    CHECK(e["detail"] == "k=5,M=2");
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("search") != std::string::npos);
}

TEST_CASE("negative mode emits examination rows") {
    const auto r = run({"search", "--k", "3", "--m-max", "1", "--negative"});
    CHECK(r.code == 0);
    CHECK(r.out.find(",17,47,799,false,") != std::string::npos);
}

TEST_CASE("output file and sieve cache") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto out = dir / "c2_cli_out.csv";
    const auto cache = dir / "c2_cli_cache.bin";
    std::filesystem::remove(cache);
    const auto r = run({"search", "--k", "3", "--m-max", "1", "-o", out.string(), "--cache", cache.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(file.str() == run({"search", "--k", "3", "--m-max", "1"}).out);
    CHECK(std::filesystem::exists(cache));
    CHECK(run({"search", "--k", "3", "--m-max", "1", "--cache", cache.string()}).out == file.str());
    std::filesystem::remove(out);
    std::filesystem::remove(cache);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> search{"search", "--k", "2", "--m-max", "4", "--threads", "3"};
    const std::vector<std::string> compare{"compare", "--n-lo", "3000", "--n-hi", "3200", "--step", "2",
                                           "--skip-vanishing"};
    CHECK(run(search).out == run(search).out);
    CHECK(run(compare).out == run(compare).out);
    auto single = search;
    single.back() = "1";
    CHECK(run(single).out == run(search).out);
}
