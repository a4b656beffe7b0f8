#include "doctest.h"

#include <cstdlib>

#include "json.hpp"
#include "mzv/cli.hpp"
#include "mzv/format.hpp"
#include "mzv/verify.hpp"
#include "mzv/zetasym.hpp"

using mzv::cli::CommandResult;

namespace {

CommandResult run(std::vector<std::string> args, std::optional<long> cutoff = std::nullopt) {
    return mzv::cli::run({std::move(args), cutoff});
}

}  // namespace

TEST_CASE("format_rational") {
    CHECK(mzv::format_rational(mzv::BigRational::parse("-1/12")) == "-1/12");
    CHECK(mzv::format_rational(mzv::BigRational(3)) == "3");
    CHECK(mzv::format_rational(mzv::BigRational(0)) == "0");
}

TEST_CASE("complex flag syntax") {
    CHECK(mzv::parse_complex("2") == mzv::Complex(2, 0));
    CHECK(mzv::parse_complex("-0.3+1i") == mzv::Complex(-0.3, 1));
    CHECK(mzv::parse_complex("1e-3-2.5i") == mzv::Complex(1e-3, -2.5));
    CHECK(mzv::parse_complex("1e+2+i") == mzv::Complex(100, 1));
    CHECK(mzv::parse_complex("-i") == mzv::Complex(0, -1));
    CHECK(mzv::parse_complex("4i") == mzv::Complex(0, 4));
    for (const char* bad : {"", "i2", "1+", "1+2", "abc", "1+2j", "nan", "1++2i"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(mzv::parse_complex(bad), std::invalid_argument);
    }
    for (const mzv::Complex z : {mzv::Complex(0.1, -3.25), mzv::Complex(-7, 0), mzv::Complex(0, 1e-300)}) {
        CHECK(mzv::parse_complex(mzv::format_complex(z)) == z);
    }
}

TEST_CASE("index lists") {
    CHECK(mzv::parse_index_list("0,3,1") == std::vector<std::size_t>{0, 3, 1});
    CHECK(mzv::parse_index_list("").empty());
    CHECK_THROWS_AS(mzv::parse_index_list("1,-2"), std::invalid_argument);
    CHECK_THROWS_AS(mzv::parse_index_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(mzv::parse_cutoff_list("0,10"), std::invalid_argument);
}

TEST_CASE("documented invocations") {
    auto r = run({"mzv", "reduce", "-m", "0,0", "--json"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"terms\":[{\"shift\":2,\"coeff\":\"1/2\"},{\"shift\":1,\"coeff\":\"1\"},"
                   "{\"shift\":0,\"coeff\":\"1/3\"}]}\n");
    r = run({"zeta", "neg", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1/12\n");
    r = run({"verify", "prop1", "--max-m", "30", "--json"});
    CHECK(r.exit_code == 0);
    const auto report = mzv::VerificationReport::from_json(r.out);
    CHECK(report.cases.size() == 31);
    CHECK(report.passed() == 31);
    CHECK(report.overall());
}

TEST_CASE("exact commands") {
    CHECK(run({"bernoulli", "num", "12"}).out == "-691/2730\n");
    CHECK(run({"bernoulli", "num", "1", "--bar"}).out == "1/2\n");
    CHECK(run({"bernoulli", "poly", "2"}).out == "a^2 - a + 1/6\n");
    CHECK(run({"bernoulli", "poly", "2", "--json"}).out == "{\"m\":2,\"coeffs\":[\"1/6\",\"-1\",\"1\"]}\n");
    CHECK(run({"hurwitz", "poly", "0", "--shifted"}).out == "-a - 1/2\n");
    CHECK(run({"mzv", "theorem", "--m2", "0", "--m3", "0", "--json"}).out ==
          run({"mzv", "reduce", "-m", "0,0", "--json"}).out);
    CHECK(run({"mzv", "reduce", "-m", "0"}).out == "shift\tcoeff\n1\t-1\n0\t-1/2\n");
    CHECK(run({"prop2", "lhs", "-m", "1,1"}).out == "1/180\n");
    CHECK(run({"parseval", "-a", "1", "-b", "1", "--json"}).out ==
          "{\"a\":1,\"b\":1,\"lhs\":\"1/720\",\"rhs\":\"1/720\",\"equal\":true}\n");
}

TEST_CASE("numeric commands") {
    auto r = run({"mzv", "eval", "-m", "0,0", "--s1", "0", "--json"});
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["exact"] == "-1/4");
    CHECK(mzv::parse_complex(doc["numeric"].get<std::string>()).real() == doctest::Approx(-0.25).epsilon(1e-12));

    r = run({"bfunc", "--s", "0", "--alpha", "0.3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");

    r = run({"bfunc", "--s", "-0.3+1i", "--alpha", "0.4", "--json"});
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("value"));

    r = run({"parseval", "--s1", "-0.3", "--s2", "-0.4", "--json"});
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["abs_error"].get<double>() <= 1e-6);

    r = run({"fourier", "partial", "--kind", "bernoulli", "-m", "3", "--alpha", "0.3", "--cutoffs", "10,100,1000",
             "--csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("cutoff,approximation,reference,abs_error\n10,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("environment cutoff default") {
    const auto with_env = run({"fourier", "partial", "--kind", "hurwitz-neg", "-m", "1", "--alpha", "0.3", "--json"}, 50);
    const auto explicit_n =
        run({"fourier", "partial", "--kind", "hurwitz-neg", "-m", "1", "--alpha", "0.3", "-N", "50", "--json"});
    CHECK(with_env.out == explicit_n.out);
    CHECK(nlohmann::json::parse(with_env.out)["rows"][0]["cutoff"] == 50);

    ::setenv("MZV_DEFAULT_CUTOFF", "123", 1);
    CHECK(mzv::cli::default_cutoff_from_env() == 123L);
    ::setenv("MZV_DEFAULT_CUTOFF", "12x", 1);
    CHECK_THROWS_AS(mzv::cli::default_cutoff_from_env(), std::invalid_argument);
    ::setenv("MZV_DEFAULT_CUTOFF", "0", 1);
    CHECK_THROWS_AS(mzv::cli::default_cutoff_from_env(), std::invalid_argument);
    ::unsetenv("MZV_DEFAULT_CUTOFF");
    CHECK_FALSE(mzv::cli::default_cutoff_from_env().has_value());
}

TEST_CASE("exit codes") {
    CHECK(run({"--help"}).exit_code == 0);
    CHECK_FALSE(run({"--help"}).out.empty());
    CHECK(run({"mzv", "reduce", "--help"}).exit_code == 0);

    auto r = run({"zeta", "neg", "1", "--frobnicate"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--frobnicate") != std::string::npos);

    r = run({"mzv", "eval", "-m", "0", "--s1", "1+"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--s1") != std::string::npos);

    r = run({"mzv", "reduce", "-m", "0,x"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("-m") != std::string::npos);

    r = run({"bernoulli", "num"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("n") != std::string::npos);

    CHECK(run({"verify", "nonsense"}).exit_code == 2);
    r = run({"mzv", "frob"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("'frob'") != std::string::npos);
    CHECK(run({"fourier", "partial", "--kind", "hurwitz", "--alpha", "0.3"}).exit_code == 2);
    CHECK(run({"parseval", "--s1", "-0.3"}).exit_code == 2);

    r = run({"mzv", "eval", "-m", "0", "--s1", "2"});
    CHECK(r.exit_code == 3);
    CHECK(r.err.find("pole") != std::string::npos);
    CHECK(run({"mzv", "eval", "-m", "0,0", "--s1", "4"}).exit_code == 3);
    CHECK(run({"bfunc", "--s", "1", "--alpha", "-1"}).exit_code == 3);
    CHECK(run({"prop2", "rhs", "-m", "0", "--target", "1", "-N", "10"}).exit_code == 0);
}

TEST_CASE("verification failure exit code") {
    // a single quadrature panel leaves the endpoint piece too coarse
    const auto r = run({"verify", "parseval", "--panels", "1", "--max-m", "2"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("verify report round trip") {
    for (const auto& name : mzv::suite_names()) {
        mzv::SuiteOptions options;
        options.max_m = 4;
        options.fourier_cutoff = 2000;
        options.lattice_cutoff = 300;
        const auto report = mzv::run_suite(name, options);
        const auto back = mzv::VerificationReport::from_json(report.to_json());
        CHECK(back.suite == report.suite);
        CHECK(back.cases == report.cases);
        CHECK(back.to_json() == report.to_json());
    }
    CHECK_THROWS_AS(mzv::run_suite("nope", {}), std::invalid_argument);
    CHECK_THROWS(mzv::VerificationReport::from_json(
        R"({"suite":"x","overall":"pass","cases":[{"id":"a","status":"fail","lhs":"1","rhs":"2","error":1.0}]})"));
}

TEST_CASE("determinism") {
    const std::vector<std::vector<std::string>> invocations{
        {"mzv", "reduce", "-m", "2,1,3", "--json"},
        {"prop2", "rhs", "-m", "1,2", "-N", "300", "--json"},
        {"parseval", "--s1", "-0.2+0.5i", "--s2", "-0.6", "--json"},
        {"verify", "fourier", "--json"},
    };
    for (const auto& args : invocations) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json emissions parse back") {
    const auto reduce = run({"mzv", "reduce", "-m", "3,0,2", "--json"});
    const auto parsed = mzv::ZetaCombination::from_json(reduce.out);
    CHECK(parsed == mzv::mzv_reduce({{3, 0, 2}}));
    CHECK(parsed.to_json() + "\n" == reduce.out);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"bernoulli", "num", "20", "--json"},
             {"zeta", "neg", "5", "--json"},
             {"hurwitz", "poly", "4", "--json"},
             {"prop2", "lhs", "-m", "1,2,0", "--json"},
             {"fourier", "partial", "--kind", "hurwitz", "--s", "-1.5", "--alpha", "0.2", "-N", "100", "--json"}}) {
        const auto r = run(args);
        CHECK(r.exit_code == 0);
        CHECK(nlohmann::ordered_json::parse(r.out).dump() + "\n" == r.out);
    }
}
