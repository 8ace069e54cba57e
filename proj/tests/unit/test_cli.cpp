#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using besselquad::cplx;
namespace cli = besselquad::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const char* env_nmax = nullptr) {
    args.insert(args.begin(), "besselquad");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, env_nmax);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("parse_complex") {
    CHECK(cli::parse_complex("2") == cplx{2, 0});
    CHECK(cli::parse_complex("-2.5") == cplx{-2.5, 0});
    CHECK(cli::parse_complex("2+1i") == cplx{2, 1});
    CHECK(cli::parse_complex("-0.5+0.3i") == cplx{-0.5, 0.3});
    CHECK(cli::parse_complex("1-1i") == cplx{1, -1});
    CHECK(cli::parse_complex("1e-3-2e-4i") == cplx{1e-3, -2e-4});
    CHECK(cli::parse_complex("3i") == cplx{0, 3});
    CHECK(cli::parse_complex("-2.5i") == cplx{0, -2.5});
    CHECK(cli::parse_complex("i") == cplx{0, 1});
    CHECK(cli::parse_complex("-i") == cplx{0, -1});
    CHECK(cli::parse_complex("2-i") == cplx{2, -1});
    for (const char* bad : {"", "abc", "2+", "2+1j", "1i2", "nan", "inf", "2+infi", "0x10", "1+2i+3i", "--1"})
        CHECK_FALSE(cli::parse_complex(bad).has_value());
}

TEST_CASE("format_number") {
    CHECK(cli::format_number(0.1) == "0.10000000000000001");
    CHECK(cli::format_number(1.0) == "1");
    CHECK(cli::format_number(std::nan("")) == "null");
}

TEST_CASE("eval output schema") {
    const Result r = run({"eval", "--fn", "J", "--mu", "1", "--z", "1"});
    CHECK(r.code == cli::exit_ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 5);
    CHECK(j.at("value_re").get<double>() == doctest::Approx(0.4400505857).epsilon(1e-10));
    CHECK(j.at("value_im").is_number());
    CHECK(j.at("err_est").is_number());
    CHECK(j.at("nodes").is_number_integer());
    CHECK(j.at("warnings").is_array());
}

TEST_CASE("global flags before or after the subcommand") {
    const Result a = run({"--format", "csv", "eval", "--z", "2"});
    const Result b = run({"eval", "--z", "2", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("value_re,value_im,err_est,nodes,warnings\n", 0) == 0);
}

TEST_CASE("node cap from flag and environment") {
    const Result env = run({"eval", "--z", "3", "--mu", "2"}, "16");
    CHECK(env.code == cli::exit_warnings);
    CHECK(nlohmann::json::parse(env.out).at("nodes") == 16);
    const Result flag = run({"eval", "--z", "3", "--mu", "2", "--nmax", "8192"}, "16");
    CHECK(flag.code == cli::exit_ok);
    CHECK(run({"eval", "--z", "3"}, "abc").code == cli::exit_usage);
    CHECK(run({"eval", "--z", "3", "--nmax", "100"}).code == cli::exit_usage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"eval"}).code == cli::exit_usage);
    CHECK(run({"eval", "--z", "x"}).code == cli::exit_usage);
    CHECK(run({"eval", "--z", "1", "--fn", "Y"}).code == cli::exit_usage);
    CHECK(run({"eval", "--z", "1", "--format", "xml"}).code == cli::exit_usage);
    CHECK(run({"eval", "--fn", "Jderiv", "--k", "-1", "--z", "1"}).code == cli::exit_usage);
    CHECK(run({"eval", "--fn", "kappa", "--n", "1.5", "--z", "1"}).code == cli::exit_usage);
    CHECK(run({"converge", "--z", "1", "--n-list", "16,24"}).code == cli::exit_usage);
    CHECK(run({"converge", "--z", "1", "--n-list", "32,16"}).code == cli::exit_usage);
    CHECK(run({"selftest", "--only", "no_such_identity"}).code == cli::exit_usage);
    const Result r = run({"eval", "--z", "x"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("evaluation errors exit 1") {
    const Result r = run({"eval", "--mu", "-0.5", "--z", "0"});
    CHECK(r.code == cli::exit_failure);
    CHECK(r.err.find("BranchError") != std::string::npos);
    CHECK(run({"eval", "--fn", "I", "--repr", "sin_kernel", "--z", "1"}).code == cli::exit_failure);
}

TEST_CASE("table rows, order and errors") {
    const Result r = run({"table", "--mu-grid", "0,-0.5", "--z-grid", "0,1", "--format", "csv"});
    CHECK(r.code == cli::exit_failure); // (mu=-0.5, z=0) is a BranchError row
    std::istringstream in(r.out);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "mu_re,mu_im,z_re,z_im,value_re,value_im,err_est,nodes,warnings");
    CHECK(lines[1].rfind("0,0,0,0,1,0,0,0,", 0) == 0);
    CHECK(lines[3].find("error:BranchError") != std::string::npos);
}

TEST_CASE("table warns on the branch cut") {
    const Result r = run({"table", "--mu-grid", "-0.5", "--z-grid", "-1"});
    CHECK(r.code == cli::exit_warnings);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("warnings")[0] == "BranchCutProximity");
}

TEST_CASE("converge rows") {
    const Result r = run({"converge", "--mu", "0", "--z", "0", "--n-list", "16,32"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("value_re") == 1.0);
        CHECK(j.at("delta") == 0.0);
    }
}

TEST_CASE("selftest subset") {
    const Result r = run({"selftest", "--only", "vanishing_moments", "--verbose"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("pass") == true);
    REQUIRE(j.at("identities").size() == 1);
    CHECK(j.at("identities")[0].at("identity_id") == "vanishing_moments");
    CHECK(r.err.find("PASS") != std::string::npos);
}

}
