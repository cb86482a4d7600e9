#include <doctest.h>

#include "copra/errors.hpp"
#include "copra/verify.hpp"

using namespace copra;

TEST_CASE("every verification suite passes at the default seed") {
    for (const std::string& name : verification_suite_names()) {
        SuiteResult r = run_verification_suite(name, {});
        INFO(name, ": ", r.failures.empty() ? "" : r.failures.front());
        CHECK(r.ok());
        CHECK(r.passed > 0);
    }
}

TEST_CASE("suites are deterministic for a fixed seed") {
    SuiteOptions opt;
    opt.seed = 42;
    SuiteResult a = run_verification_suite("quotients", opt);
    SuiteResult b = run_verification_suite("quotients", opt);
    CHECK(a.passed == b.passed);
    CHECK(a.failed == b.failed);
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_verification_suite("no-such-suite", {}), input_error);
}
