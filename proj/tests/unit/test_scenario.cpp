#include <doctest.h>

#include <sstream>
#include <string>

#include "npoisson/error.hpp"
#include "npoisson/scenario.hpp"
#include "support.hpp"

using namespace npoisson;

namespace {

ParseError parse_failure(const std::string& text)
{
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("scenario parsed without error");
    return ParseError("", 0, 0);
}

std::string human(const Scenario& sc)
{
    std::ostringstream out;
    write_report(out, run_scenario(sc));
    return out.str();
}

const char* const minimal = R"(# smallest useful file
[chart]
darboux 1
[define]
w = d(p1)^d(q1)
[tasks]
pq = bracket w 1 p1 q1 expect 1
)";

} // namespace

TEST_CASE("minimal scenario")
{
    const Scenario sc = parse_scenario(minimal);
    REQUIRE(sc.tasks.size() == 1);
    CHECK(sc.chart->dimension() == 2);
    CHECK(sc.tasks[0].command == "bracket");
    const Report report = run_scenario(sc);
    CHECK(report.success());
    CHECK(report.count(TaskStatus::Match) == 1);
}

TEST_CASE("undeclared names are reported by name")
{
    const auto e = parse_failure("[chart]\nx y\n[tasks]\nt = check-poisson L\n");
    CHECK(e.line() == 4);
    CHECK(e.message().find("'L'") != std::string::npos);
    const auto e2 = parse_failure("[chart]\nx y\n[define]\nf = x + zz\n");
    CHECK(e2.line() == 4);
    CHECK(e2.message().find("zz") != std::string::npos);
}

TEST_CASE("chart declared once")
{
    CHECK(parse_failure("[chart]\nx y\n[chart]\nx y\n").line() == 3);
    CHECK(parse_failure("[chart]\nx y\nz w\n").line() == 3);
    CHECK(parse_failure("[define]\nf = 1\n").line() == 1);
    CHECK(parse_failure("[chart]\nx x\n").line() == 2);
}

TEST_CASE("syntax errors carry line and column")
{
    const auto e = parse_failure("[chart]\ndarboux 1\n[define]\nf = q1 + * p1\n");
    CHECK(e.line() == 4);
    CHECK(e.column() == 10);
    CHECK(parse_failure("[chart]\ndarboux 1\n[tasks]\nt = frobnicate q1\n").message().find("unknown command") !=
          std::string::npos);
    CHECK(parse_failure("[chart]\ndarboux 1\n[define]\nw = d(p1)^d(q1)\n[tasks]\nt = power-bracket w p1\n")
              .message()
              .find("expects") != std::string::npos);
    CHECK(parse_failure("[chart]\ndarboux 1\n[define]\nw = d(p1)^d(q1)\n[tasks]\nt = power-bracket w p1 q1 "
                        "expect d(q1)\n")
              .line() == 6);
    CHECK(parse_failure("[chart]\ndarboux 1\n[tasks]\nt = verify-suite nope\n").message().find("unknown suite") !=
          std::string::npos);
}

TEST_CASE("errors inside a task do not stop the run")
{
    const Scenario sc = parse_scenario(R"([chart]
darboux 2
[define]
w = d(p1)^d(q1) + d(p2)^d(q2)
bad = [q2, q1]
[tasks]
first = dirac-matrix w bad p1 p2
second = power-bracket w p1 q1 expect 1
)");
    const Report report = run_scenario(sc);
    REQUIRE(report.tasks.size() == 2);
    CHECK(report.tasks[0].status == TaskStatus::Error);
    CHECK(report.tasks[1].status == TaskStatus::Match);
    CHECK_FALSE(report.success());
}

TEST_CASE("mismatch and only")
{
    const Scenario sc = parse_scenario(R"([chart]
darboux 1
[define]
w = d(p1)^d(q1)
[tasks]
right = power-bracket w p1 q1 expect 1
wrong = power-bracket w p1 q1 expect -1
plain = power-bracket w q1^2 p1
)");
    const Report all = run_scenario(sc);
    CHECK(all.count(TaskStatus::Mismatch) == 1);
    CHECK(all.count(TaskStatus::Computed) == 1);
    CHECK_FALSE(all.success());
    const Report only = run_scenario(sc, std::string("right"));
    REQUIRE(only.tasks.size() == 1);
    CHECK(only.success());
    CHECK_THROWS_AS(run_scenario(sc, std::string("missing")), DomainError);
}

TEST_CASE("reports are deterministic")
{
    const Scenario sc = parse_scenario(minimal);
    CHECK(human(sc) == human(parse_scenario(minimal)));
    std::ostringstream m1, m2;
    write_machine_report(m1, run_scenario(sc));
    write_machine_report(m2, run_scenario(sc));
    CHECK(m1.str() == m2.str());
    CHECK(m1.str().find('\t') != std::string::npos);
}

TEST_CASE("printed results re-parse to equal values")
{
    const Scenario sc = parse_scenario(R"([chart]
darboux 2
[define]
w = d(p1)^d(q1) + d(p2)^d(q2)
curved = [q1, q1*p1 + q2]
f = q1*p2 + p1^2
g = q2*p1 - q1
[tasks]
a = power-bracket w f g
b = dirac-matrix w curved f g
c = power-bracket w k=2 f g q1 p2
)");
    for (const auto& t : run_scenario(sc).tasks) {
        REQUIRE(t.status == TaskStatus::Computed);
        CHECK(parse_rational_expr(t.result, sc.chart).to_string() == t.result);
    }
}
