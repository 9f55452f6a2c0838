#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "npoisson/rational_expr.hpp"
#include "npoisson/tensor_parser.hpp"

namespace npoisson {

/// A named list of constraint functions, written `[f, g, ...]`.
using ConstraintList = std::vector<Polynomial>;

/// Anything a task argument can denote.
using Entity = std::variant<Polynomial, Form, Multivector, ConstraintList>;

/// Expected value of a task, parsed against the kind of result the command produces.
using Expectation = std::variant<RationalExpr, TensorValue, bool>;

struct Task {
    std::string name;
    std::string command;
    /// Positional argument texts as written, echoed in reports.
    std::vector<std::string> arguments;
    /// key=value options, echoed in reports.
    std::vector<std::pair<std::string, std::string>> options;
    std::optional<std::string> expected_text;
    std::size_t line = 0;

    std::vector<Entity> values;
    std::optional<Expectation> expected;

    /// "power-bracket omega k=1 p1 p2"
    std::string echo() const;
    std::optional<std::string> option(std::string_view key) const;
};

/// Parsed manifest:
///
///   # comment
///   [chart]
///   q1 q2 p1 p2            (or: darboux 2)
///   [define]
///   name = expression      (function, form or multivector)
///   name = [f, g, ...]     (constraint list)
///   [tasks]
///   name = command argument... [key=value...] [expect value]
///
/// Every expression is parsed and every arity and argument kind is checked
/// here, so a Scenario never fails for syntactic reasons while running.
struct Scenario {
    ChartPtr chart;
    std::vector<std::pair<std::string, Entity>> definitions;
    std::vector<Task> tasks;
};

/// Throws ParseError with the 1-based line and column of the problem.
Scenario parse_scenario(std::string_view text);
Scenario parse_scenario_file(const std::string& path);

enum class TaskStatus { Match, Mismatch, Computed, Error };
std::string_view to_string(TaskStatus status);

struct TaskReport {
    std::string name;
    std::string inputs;
    std::string result;
    std::optional<std::string> expected;
    TaskStatus status = TaskStatus::Computed;
    /// Witnesses, measured constants, suite details, error messages.
    std::vector<std::string> notes;
};

struct Report {
    std::vector<TaskReport> tasks;

    std::size_t count(TaskStatus status) const;
    /// No mismatches and no errors.
    bool success() const;
};

/// Runs the tasks in order (or only the task called `only`; DomainError if
/// there is none). Library errors are caught and reported per task.
Report run_scenario(const Scenario& scenario, const std::optional<std::string>& only = std::nullopt);

/// Human-readable report.
void write_report(std::ostream& out, const Report& report);
/// One tab-separated line per task: name, inputs, result, expected, status, notes;
/// then a summary line.
void write_machine_report(std::ostream& out, const Report& report);

} // namespace npoisson
