#include "npoisson/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "npoisson/brackets.hpp"
#include "npoisson/dirac.hpp"
#include "npoisson/error.hpp"
#include "npoisson/schouten.hpp"
#include "npoisson/suites.hpp"

namespace npoisson {

namespace {

// ---------------------------------------------------------------------------
// lexical helpers

struct Word {
    std::string text;
    std::size_t column; // 1-based
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Splits on whitespace, keeping 1-based columns relative to `base`.
std::vector<Word> split_words(std::string_view s, std::size_t base)
{
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        const std::size_t start = i;
        while (i < s.size() && !is_space(s[i])) ++i;
        if (i > start) words.push_back({std::string(s.substr(start, i - start)), base + start});
    }
    return words;
}

/// [first, last) of s without surrounding whitespace.
std::pair<std::size_t, std::size_t> trim_range(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    return {a, b};
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::optional<long> parse_integer(std::string_view s)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
    std::string r;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) r += sep;
        r += parts[i];
    }
    return r;
}

// ---------------------------------------------------------------------------
// commands

enum class ResultKind { Scalar, Tensor, Boolean };

struct CommandSpec {
    std::string_view name;
    ResultKind kind;
    std::vector<std::string_view> options;
};

const std::vector<CommandSpec>& commands()
{
    static const std::vector<CommandSpec> specs{
        {"bracket", ResultKind::Scalar, {}},
        {"power-bracket", ResultKind::Scalar, {"k"}},
        {"nambu", ResultKind::Scalar, {"gamma"}},
        {"dirac-matrix", ResultKind::Scalar, {}},
        {"dirac-form", ResultKind::Scalar, {"c"}},
        {"derived-vf", ResultKind::Tensor, {"k"}},
        {"schouten", ResultKind::Tensor, {}},
        {"check-jacobi", ResultKind::Boolean, {"field"}},
        {"check-poisson", ResultKind::Boolean, {}},
        {"check-jacobi-pair", ResultKind::Boolean, {}},
        {"calibrate-dirac", ResultKind::Scalar, {}},
        {"verify-suite", ResultKind::Boolean, {"n"}},
    };
    return specs;
}

const CommandSpec* find_command(std::string_view name)
{
    for (const auto& spec : commands())
        if (spec.name == name) return &spec;
    return nullptr;
}

std::string describe(const Entity& e)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ConstraintList>)
                return "constraint list";
            else
                return npoisson::describe(TensorValue(v));
        },
        e);
}

// ---------------------------------------------------------------------------
// parser

class ScenarioParser {
public:
    Scenario parse(std::string_view text);

private:
    enum class Section { None, Chart, Define, Tasks };

    [[noreturn]] void fail(const std::string& message, std::size_t column = 1) const
    {
        throw ParseError(message, line_, column);
    }

    void chart_line(std::string_view body, std::size_t base);
    void define_line(std::string_view body, std::size_t base);
    void task_line(std::string_view body, std::size_t base);

    /// Splits "name = rest"; returns the name and the column where rest starts.
    std::pair<std::string, std::size_t> assignment(std::string_view body, std::size_t base,
                                                   std::string_view& rest) const;
    void check_new_name(const std::string& name, std::size_t column) const;

    TensorValue tensor(std::string_view text, std::size_t column) const;
    Entity entity(const Word& word) const;
    void validate(Task& task, const std::vector<Word>& positional, const std::vector<Word>& option_words);

    Section section_ = Section::None;
    bool chart_section_seen_ = false;
    std::size_t line_ = 0;
    Scenario sc_;
    TensorSymbols symbols_;
    PolynomialSymbols scalars_;
    std::map<std::string, ConstraintList, std::less<>> lists_;
};

Scenario ScenarioParser::parse(std::string_view text)
{
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto [a, b] = trim_range(raw);
        if (a == b) {
            if (end == text.size()) break;
            continue;
        }
        const std::string_view body = raw.substr(a, b - a);
        const std::size_t base = a + 1;

        if (body.front() == '[' && body.back() == ']' && body.find('=') == std::string_view::npos) {
            const std::string_view name = body.substr(1, body.size() - 2);
            if (name == "chart") {
                if (chart_section_seen_) fail("chart declared more than once", base);
                chart_section_seen_ = true;
                section_ = Section::Chart;
            } else if (name == "define" || name == "tasks") {
                if (!sc_.chart) fail("the [chart] section must come first", base);
                section_ = name == "define" ? Section::Define : Section::Tasks;
            } else {
                fail("unknown section '" + std::string(name) + "'", base);
            }
        } else {
            switch (section_) {
            case Section::None: fail("content before the first section", base);
            case Section::Chart: chart_line(body, base); break;
            case Section::Define: define_line(body, base); break;
            case Section::Tasks: task_line(body, base); break;
            }
        }
        if (end == text.size()) break;
    }
    if (!sc_.chart) throw ParseError("no chart declared", line_ == 0 ? 1 : line_, 1);
    return std::move(sc_);
}

void ScenarioParser::chart_line(std::string_view body, std::size_t base)
{
    if (sc_.chart) fail("chart declared more than once", base);
    std::string cleaned(body);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    const auto words = split_words(cleaned, base);
    try {
        if (words.size() == 2 && words[0].text == "darboux") {
            const auto n = parse_integer(words[1].text);
            if (!n || *n < 1 || *n > 4) fail("darboux chart needs 1 <= n <= 4", words[1].column);
            sc_.chart = make_darboux_chart(static_cast<std::size_t>(*n));
            return;
        }
        std::vector<std::string> names;
        for (const auto& w : words) {
            if (!is_identifier(w.text)) fail("invalid coordinate name '" + w.text + "'", w.column);
            names.push_back(w.text);
        }
        sc_.chart = make_chart(std::move(names));
    } catch (const DomainError& e) {
        fail(e.what(), base);
    }
}

std::pair<std::string, std::size_t> ScenarioParser::assignment(std::string_view body, std::size_t base,
                                                               std::string_view& rest) const
{
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) fail("expected 'name = ...'", base);
    const auto [a, b] = trim_range(body.substr(0, eq));
    const std::string name(body.substr(a, b - a));
    if (!is_identifier(name)) fail("invalid name '" + name + "'", base + a);
    const std::string_view tail = body.substr(eq + 1);
    const auto [ra, rb] = trim_range(tail);
    if (ra == rb) fail("missing right-hand side for '" + name + "'", base + eq + 1);
    rest = tail.substr(ra, rb - ra);
    return {name, base + eq + 1 + ra};
}

void ScenarioParser::check_new_name(const std::string& name, std::size_t column) const
{
    if (sc_.chart->find(name)) fail("'" + name + "' is a chart coordinate", column);
    if (symbols_.count(name) || lists_.count(name)) fail("'" + name + "' is already defined", column);
}

TensorValue ScenarioParser::tensor(std::string_view text, std::size_t column) const
{
    try {
        return parse_tensor(text, sc_.chart, &symbols_, line_, column);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(e.what(), column);
    }
}

void ScenarioParser::define_line(std::string_view body, std::size_t base)
{
    std::string_view rhs;
    const auto [name, column] = assignment(body, base, rhs);
    check_new_name(name, base);
    if (rhs.front() == '[') {
        if (rhs.back() != ']') fail("constraint list must end with ']'", column + rhs.size() - 1);
        ConstraintList list;
        std::size_t depth = 0, start = 1;
        for (std::size_t i = 1; i < rhs.size(); ++i) {
            const char c = rhs[i];
            if (c == '(') ++depth;
            if (c == ')' && depth > 0) --depth;
            if ((c == ',' && depth == 0) || i + 1 == rhs.size()) {
                const std::string_view item = rhs.substr(start, i - start);
                const auto [a, b] = trim_range(item);
                if (a == b) fail("empty constraint", column + start);
                const TensorValue v = tensor(item.substr(a, b - a), column + start + a);
                if (!std::holds_alternative<Polynomial>(v))
                    fail("constraints must be functions, got " + npoisson::describe(v), column + start + a);
                list.push_back(std::get<Polynomial>(v));
                start = i + 1;
            }
        }
        lists_.emplace(name, list);
        sc_.definitions.emplace_back(name, std::move(list));
        return;
    }
    TensorValue v = tensor(rhs, column);
    if (const auto* p = std::get_if<Polynomial>(&v)) scalars_.emplace(name, *p);
    symbols_.emplace(name, v);
    std::visit([&](const auto& x) { sc_.definitions.emplace_back(name, Entity(x)); }, v);
}

Entity ScenarioParser::entity(const Word& word) const
{
    if (auto it = lists_.find(word.text); it != lists_.end()) return it->second;
    return std::visit([](const auto& x) { return Entity(x); }, tensor(word.text, word.column));
}

void ScenarioParser::task_line(std::string_view body, std::size_t base)
{
    std::string_view rest;
    auto [name, column] = assignment(body, base, rest);
    for (const auto& t : sc_.tasks)
        if (t.name == name) fail("duplicate task name '" + name + "'", base);

    Task task;
    task.name = name;
    task.line = line_;
    auto words = split_words(rest, column);
    task.command = words.front().text;
    const CommandSpec* spec = find_command(task.command);
    if (!spec) fail("unknown command '" + task.command + "'", words.front().column);

    std::vector<Word> positional, option_words;
    std::size_t expect_column = 0;
    for (std::size_t i = 1; i < words.size(); ++i) {
        const Word& w = words[i];
        if (w.text == "expect") {
            expect_column = w.column;
            break;
        }
        task.arguments.push_back(w.text);
        if (const auto eq = w.text.find('='); eq != std::string::npos) {
            const std::string key = w.text.substr(0, eq);
            if (std::find(spec->options.begin(), spec->options.end(), key) == spec->options.end())
                fail("command '" + task.command + "' has no option '" + key + "'", w.column);
            if (task.option(key)) fail("option '" + key + "' given twice", w.column);
            if (eq + 1 == w.text.size()) fail("option '" + key + "' needs a value", w.column);
            task.options.emplace_back(key, w.text.substr(eq + 1));
            option_words.push_back(w);
        } else {
            positional.push_back(w);
        }
    }
    if (expect_column) {
        const std::size_t offset = expect_column - column + std::string_view("expect").size();
        const std::string_view tail = rest.substr(offset);
        const auto [a, b] = trim_range(tail);
        if (a == b) fail("'expect' needs a value", expect_column);
        task.expected_text = std::string(tail.substr(a, b - a));
        const std::size_t value_column = column + offset + a;
        const std::string_view text = *task.expected_text;
        switch (spec->kind) {
        case ResultKind::Boolean:
            if (text != "true" && text != "false") fail("expected 'true' or 'false'", value_column);
            task.expected = Expectation(text == "true");
            break;
        case ResultKind::Scalar:
            try {
                auto ast = parse_ast(text, line_, value_column);
                task.expected = Expectation(evaluate_rational(*ast, sc_.chart, &scalars_));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                fail(e.what(), value_column);
            }
            break;
        case ResultKind::Tensor: {
            TensorValue v = tensor(text, value_column);
            if (std::holds_alternative<Form>(v)) fail("expected a multivector or function, got a form", value_column);
            task.expected = Expectation(std::move(v));
            break;
        }
        }
    } else if (spec->kind == ResultKind::Boolean) {
        task.expected = Expectation(true);
    }
    validate(task, positional, option_words);
    sc_.tasks.push_back(std::move(task));
}

void ScenarioParser::validate(Task& task, const std::vector<Word>& positional, const std::vector<Word>& option_words)
{
    const std::size_t m = sc_.chart->dimension();
    const std::size_t end_column = positional.empty() ? 1 : positional.back().column;
    auto arity = [&](bool ok, const std::string& wanted) {
        if (!ok)
            fail("'" + task.command + "' expects " + wanted + ", got " + std::to_string(positional.size()) +
                     " argument(s)",
                 end_column);
    };
    auto option_column = [&](std::string_view key) {
        for (const auto& w : option_words)
            if (w.text.starts_with(std::string(key) + "=")) return w.column;
        return std::size_t{1};
    };
    auto int_option = [&](std::string_view key, long fallback) {
        const auto text = task.option(key);
        if (!text) return fallback;
        const auto v = parse_integer(*text);
        if (!v || *v < 1) fail("option '" + std::string(key) + "' must be a positive integer", option_column(key));
        return *v;
    };
    auto kind_error = [&](std::size_t i, const std::string& wanted) {
        fail("argument " + std::to_string(i + 1) + " of '" + task.command + "' must be " + wanted + ", got " +
                 describe(task.values[i]),
             positional[i].column);
    };
    auto as_form = [&](std::size_t i) -> const Form* {
        if (auto* p = std::get_if<Polynomial>(&task.values[i])) task.values[i] = Form(*p);
        return std::get_if<Form>(&task.values[i]);
    };
    auto as_multivector = [&](std::size_t i) -> const Multivector* {
        if (auto* p = std::get_if<Polynomial>(&task.values[i])) task.values[i] = Multivector(*p);
        return std::get_if<Multivector>(&task.values[i]);
    };
    auto require_two_form = [&](std::size_t i) {
        const Form* f = std::get_if<Form>(&task.values[i]);
        if (!f || f->grade() != 2) kind_error(i, "a 2-form");
        if (m % 2 != 0) fail("symplectic commands need an even-dimensional chart", positional[i].column);
    };
    auto require_functions = [&](std::size_t from) {
        for (std::size_t i = from; i < task.values.size(); ++i)
            if (!std::holds_alternative<Polynomial>(task.values[i])) kind_error(i, "a function");
    };
    auto require_list = [&](std::size_t i) {
        if (!std::holds_alternative<ConstraintList>(task.values[i])) kind_error(i, "a constraint list");
        const auto& list = std::get<ConstraintList>(task.values[i]);
        if (list.empty() || list.size() % 2 != 0)
            fail("constraint list must have an even, nonzero number of entries", positional[i].column);
    };

    if (task.command == "verify-suite") {
        arity(positional.size() == 1, "a suite name");
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), positional[0].text) == names.end())
            fail("unknown suite '" + positional[0].text + "'", positional[0].column);
        int_option("n", 1);
        return;
    }

    for (const auto& w : positional) task.values.push_back(entity(w));
    const std::string& cmd = task.command;

    if (cmd == "bracket") {
        arity(positional.size() >= 2, "a volume form, a form and functions");
        const Form* vol = as_form(0);
        if (!vol || vol->grade() != m) kind_error(0, "a top-degree form");
        const Form* alpha = as_form(1);
        if (!alpha) kind_error(1, "a form");
        const std::size_t k = m - std::min(m, alpha->grade());
        arity(positional.size() == 2 + k, "2 + " + std::to_string(k) + " arguments");
        require_functions(2);
    } else if (cmd == "power-bracket" || cmd == "derived-vf") {
        arity(!positional.empty(), "a 2-form and functions");
        require_two_form(0);
        const std::size_t funcs = positional.size() - 1;
        long k = 0;
        if (cmd == "power-bracket") {
            k = int_option("k", 1);
            arity(funcs == static_cast<std::size_t>(2 * k), "a 2-form and " + std::to_string(2 * k) + " functions");
        } else {
            arity(funcs % 2 == 1, "a 2-form and an odd number of functions");
            k = static_cast<long>((funcs + 1) / 2);
            if (int_option("k", k) != k)
                fail("option k does not match the " + std::to_string(funcs) + " functions given", option_column("k"));
        }
        if (static_cast<std::size_t>(k) > m / 2)
            fail("k = " + std::to_string(k) + " exceeds the half-dimension " + std::to_string(m / 2),
                 option_words.empty() ? positional[0].column : option_column("k"));
        require_functions(1);
    } else if (cmd == "nambu") {
        arity(positional.size() == 1 + m, "a volume form and " + std::to_string(m) + " functions");
        const Form* vol = as_form(0);
        if (!vol || vol->grade() != m) kind_error(0, "a top-degree form");
        require_functions(1);
        if (const auto g = task.option("gamma")) {
            const TensorValue v = tensor(*g, option_column("gamma") + 6);
            if (!std::holds_alternative<Polynomial>(v)) fail("gamma must be a function", option_column("gamma"));
        }
    } else if (cmd == "dirac-matrix" || cmd == "dirac-form") {
        arity(positional.size() == 4, "a 2-form, a constraint list and two functions");
        require_two_form(0);
        require_list(1);
        require_functions(2);
        if (const auto c = task.option("c")) {
            try {
                if (parse_rational(*c) == 0) fail("option c must be nonzero", option_column("c"));
            } catch (const DomainError& e) {
                fail(e.what(), option_column("c"));
            }
        }
    } else if (cmd == "calibrate-dirac") {
        arity(positional.size() == 2, "a 2-form and a constraint list");
        require_two_form(0);
        require_list(1);
    } else if (cmd == "schouten") {
        arity(positional.size() == 2, "two multivectors");
        for (std::size_t i = 0; i < 2; ++i)
            if (!as_multivector(i)) kind_error(i, "a multivector or function");
    } else if (cmd == "check-jacobi") {
        arity(positional.size() == 1 || positional.size() == 4, "a 2-form or bivector, optionally with f g h");
        const auto* mv = std::get_if<Multivector>(&task.values[0]);
        if (mv) {
            if (mv->grade() != 2) kind_error(0, "a 2-form or a bivector");
        } else {
            require_two_form(0);
            if (task.option("field")) fail("option field needs a bivector source", option_column("field"));
        }
        if (const auto fld = task.option("field")) {
            const TensorValue v = tensor(*fld, option_column("field") + 6);
            const auto* x = std::get_if<Multivector>(&v);
            if (!x || x->grade() != 1) fail("field must be a vector field", option_column("field"));
        }
        require_functions(1);
    } else if (cmd == "check-poisson") {
        arity(positional.size() == 1, "a 2-form or an even-grade multivector");
        const auto* mv = std::get_if<Multivector>(&task.values[0]);
        if (mv) {
            if (mv->grade() == 0 || mv->grade() % 2 != 0) kind_error(0, "a 2-form or an even-grade multivector");
        } else {
            require_two_form(0);
        }
    } else if (cmd == "check-jacobi-pair") {
        arity(positional.size() == 2, "a bivector and a vector field");
        const auto* l = std::get_if<Multivector>(&task.values[0]);
        if (!l || l->grade() != 2) kind_error(0, "a bivector");
        const auto* x = std::get_if<Multivector>(&task.values[1]);
        if (!x || x->grade() != 1) kind_error(1, "a vector field");
    }
}

// ---------------------------------------------------------------------------
// execution

using Value = std::variant<RationalExpr, Multivector, bool>;

struct Outcome {
    Value value;
    std::vector<std::string> notes;
};

std::vector<Polynomial> functions_from(const Task& task, std::size_t first)
{
    std::vector<Polynomial> fs;
    for (std::size_t i = first; i < task.values.size(); ++i) fs.push_back(std::get<Polynomial>(task.values[i]));
    return fs;
}

Polynomial option_function(const Task& task, std::string_view key, const Scenario& sc, const TensorSymbols& symbols)
{
    return std::get<Polynomial>(parse_tensor(*task.option(key), sc.chart, &symbols));
}

Outcome execute(const Task& task, const Scenario& sc, const TensorSymbols& symbols)
{
    const std::string& cmd = task.command;
    auto form = [&](std::size_t i) { return std::get<Form>(task.values[i]); };
    auto list = [&](std::size_t i) { return std::get<ConstraintList>(task.values[i]); };
    auto fn = [&](std::size_t i) { return std::get<Polynomial>(task.values[i]); };

    if (cmd == "bracket") {
        const BracketDef def(form(0), form(1));
        const auto fs = functions_from(task, 2);
        if (def.generator()) return {RationalExpr(bracket(def, fs)), {}};
        return {bracket_rational(def, fs), {}};
    }
    if (cmd == "power-bracket") {
        const SymplecticData s(form(0));
        const auto fs = functions_from(task, 1);
        return {RationalExpr(omega_power_bracket(s, static_cast<unsigned>(fs.size() / 2), fs)), {}};
    }
    if (cmd == "nambu") {
        const Polynomial gamma = task.option("gamma") ? option_function(task, "gamma", sc, symbols)
                                                      : Polynomial(sc.chart, Rational(1));
        return {RationalExpr(nambu_top_bracket(form(0), gamma, functions_from(task, 1))), {}};
    }
    if (cmd == "dirac-matrix") {
        const ConstraintSet cs(SymplecticData(form(0)), list(1));
        return {dirac_bracket_matrix(cs, fn(2), fn(3)), {}};
    }
    if (cmd == "dirac-form") {
        const ConstraintSet cs(SymplecticData(form(0)), list(1));
        std::string note;
        DiracNormalization norm{Rational(1), Polynomial(sc.chart), Polynomial(sc.chart)};
        if (const auto c = task.option("c")) {
            norm.c_norm = parse_rational(*c);
            note = "c = " + to_string(norm.c_norm) + " (given)";
        } else {
            norm = calibrate_normalization(cs);
            note = "c = " + to_string(norm.c_norm) + " (calibrated on " + norm.reference_f.to_string() + ", " +
                   norm.reference_g.to_string() + ")";
        }
        return {dirac_bracket_form(cs, norm, fn(2), fn(3)), {note}};
    }
    if (cmd == "calibrate-dirac") {
        const ConstraintSet cs(SymplecticData(form(0)), list(1));
        const auto norm = calibrate_normalization(cs);
        return {RationalExpr(Polynomial(sc.chart, norm.c_norm)),
                {"reference pair " + norm.reference_f.to_string() + ", " + norm.reference_g.to_string()}};
    }
    if (cmd == "derived-vf") {
        const SymplecticData s(form(0));
        const auto fs = functions_from(task, 1);
        return {derived_vf(s, static_cast<unsigned>((fs.size() + 1) / 2), fs), {}};
    }
    if (cmd == "schouten") {
        return {schouten(std::get<Multivector>(task.values[0]), std::get<Multivector>(task.values[1])), {}};
    }
    if (cmd == "check-jacobi") {
        std::function<Polynomial(const Polynomial&, const Polynomial&)> br;
        std::optional<SymplecticData> s;
        std::optional<JacobiDef> jd;
        if (const auto* l = std::get_if<Multivector>(&task.values[0])) {
            Multivector field(sc.chart, 1);
            if (task.option("field"))
                field = std::get<Multivector>(parse_tensor(*task.option("field"), sc.chart, &symbols));
            jd.emplace(*l, field);
            br = [&](const Polynomial& a, const Polynomial& b) { return jacobi_bracket(*jd, a, b); };
        } else {
            s.emplace(form(0));
            br = [&](const Polynomial& a, const Polynomial& b) { return poisson_bracket(*s, a, b); };
        }
        if (task.values.size() == 4) {
            const Polynomial j = jacobiator(br, fn(1), fn(2), fn(3));
            return {j.is_zero(), {"jacobiator = " + j.to_string()}};
        }
        const auto xs = coordinate_functions(sc.chart);
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b)
                for (std::size_t c = b + 1; c < xs.size(); ++c) {
                    const Polynomial j = jacobiator(br, xs[a], xs[b], xs[c]);
                    if (!j.is_zero())
                        return {false, {"witness " + sc.chart->name(a) + ", " + sc.chart->name(b) + ", " +
                                        sc.chart->name(c) + ": jacobiator = " + j.to_string()}};
                }
        return {true, {"jacobiator vanishes on all coordinate triples"}};
    }
    if (cmd == "check-poisson") {
        Multivector l = std::holds_alternative<Form>(task.values[0]) ? SymplecticData(form(0)).bivector()
                                                                      : std::get<Multivector>(task.values[0]);
        const Multivector sl = schouten(l, l);
        if (sl.is_zero()) return {true, {}};
        return {false, {"[L, L] = " + sl.to_string()}};
    }
    if (cmd == "check-jacobi-pair") {
        const auto& l = std::get<Multivector>(task.values[0]);
        const auto& x = std::get<Multivector>(task.values[1]);
        const bool ok = jacobi_pair_check(l, x);
        if (ok) return {true, {}};
        std::vector<std::string> notes;
        if (const auto xl = schouten(x, l); !xl.is_zero()) notes.push_back("[X, L] = " + xl.to_string());
        else notes.push_back("[L, L] + 2 X^L = " + (schouten(l, l) + wedge(x, l).scaled(Rational(2))).to_string());
        return {false, notes};
    }
    if (cmd == "verify-suite") {
        std::optional<unsigned> n;
        if (const auto t = task.option("n")) n = static_cast<unsigned>(*parse_integer(*t));
        SuiteOutcome r = run_suite(task.arguments.front(), n);
        std::vector<std::string> notes{std::to_string(r.checks) + " checks, " + std::to_string(r.failures) +
                                       " failures"};
        notes.insert(notes.end(), r.details.begin(), r.details.end());
        return {r.passed(), notes};
    }
    throw DomainError("unknown command '" + cmd + "'");
}

std::string value_text(const Value& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>)
                return x ? "true" : "false";
            else
                return x.to_string();
        },
        v);
}

bool matches(const Value& v, const Expectation& e)
{
    if (const auto* b = std::get_if<bool>(&v)) return std::holds_alternative<bool>(e) && std::get<bool>(e) == *b;
    if (const auto* r = std::get_if<RationalExpr>(&v)) {
        const auto* want = std::get_if<RationalExpr>(&e);
        return want && *want == *r;
    }
    const auto& mv = std::get<Multivector>(v);
    const auto* want = std::get_if<TensorValue>(&e);
    if (!want) return false;
    if (const auto* p = std::get_if<Polynomial>(want))
        return (p->is_zero() && mv.is_zero()) || (mv.grade() == 0 && mv.scalar() == *p);
    if (const auto* w = std::get_if<Multivector>(want)) return *w == mv;
    return false;
}

std::string clean_field(std::string s)
{
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

} // namespace

std::string Task::echo() const
{
    std::string r = command;
    for (const auto& a : arguments) r += " " + a;
    return r;
}

std::optional<std::string> Task::option(std::string_view key) const
{
    for (const auto& [k, v] : options)
        if (k == key) return v;
    return std::nullopt;
}

Scenario parse_scenario(std::string_view text)
{
    return ScenarioParser().parse(text);
}

Scenario parse_scenario_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read scenario file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string_view to_string(TaskStatus status)
{
    switch (status) {
    case TaskStatus::Match: return "match";
    case TaskStatus::Mismatch: return "mismatch";
    case TaskStatus::Computed: return "computed";
    case TaskStatus::Error: return "error";
    }
    return "error";
}

std::size_t Report::count(TaskStatus status) const
{
    return static_cast<std::size_t>(
        std::count_if(tasks.begin(), tasks.end(), [&](const TaskReport& t) { return t.status == status; }));
}

bool Report::success() const
{
    return count(TaskStatus::Mismatch) == 0 && count(TaskStatus::Error) == 0;
}

Report run_scenario(const Scenario& scenario, const std::optional<std::string>& only)
{
    TensorSymbols symbols;
    for (const auto& [name, entity] : scenario.definitions)
        std::visit(
            [&, &name = name](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (!std::is_same_v<T, ConstraintList>) symbols.emplace(name, x);
            },
            entity);

    if (only && std::none_of(scenario.tasks.begin(), scenario.tasks.end(),
                             [&](const Task& t) { return t.name == *only; }))
        throw DomainError("no task named '" + *only + "'");

    Report report;
    for (const auto& task : scenario.tasks) {
        if (only && task.name != *only) continue;
        TaskReport tr;
        tr.name = task.name;
        tr.inputs = task.echo();
        if (task.expected) {
            if (task.expected_text)
                tr.expected = *task.expected_text;
            else
                tr.expected = "true";
        }
        try {
            Outcome out = execute(task, scenario, symbols);
            tr.result = value_text(out.value);
            tr.notes = std::move(out.notes);
            if (task.expected)
                tr.status = matches(out.value, *task.expected) ? TaskStatus::Match : TaskStatus::Mismatch;
            else
                tr.status = TaskStatus::Computed;
        } catch (const std::exception& e) {
            tr.result = "error";
            tr.status = TaskStatus::Error;
            tr.notes = {e.what()};
        }
        report.tasks.push_back(std::move(tr));
    }
    return report;
}

namespace {

std::string summary_counts(const Report& r, std::string_view sep)
{
    std::vector<std::string> parts;
    for (auto s : {TaskStatus::Match, TaskStatus::Mismatch, TaskStatus::Computed, TaskStatus::Error})
        parts.push_back(std::string(to_string(s)) + "=" + std::to_string(r.count(s)));
    return join(parts, sep);
}

} // namespace

void write_report(std::ostream& out, const Report& report)
{
    for (const auto& t : report.tasks) {
        out << "task " << t.name << "\n";
        out << "  inputs:   " << t.inputs << "\n";
        out << "  result:   " << t.result << "\n";
        if (t.expected) out << "  expected: " << *t.expected << "\n";
        out << "  status:   " << to_string(t.status) << "\n";
        for (const auto& n : t.notes) out << "  note:     " << n << "\n";
        out << "\n";
    }
    out << "summary: tasks=" << report.tasks.size() << ", " << summary_counts(report, ", ") << "\n";
}

void write_machine_report(std::ostream& out, const Report& report)
{
    for (const auto& t : report.tasks) {
        out << clean_field(t.name) << '\t' << clean_field(t.inputs) << '\t' << clean_field(t.result) << '\t'
            << clean_field(t.expected.value_or("-")) << '\t' << to_string(t.status) << '\t'
            << (t.notes.empty() ? "-" : clean_field(join(t.notes, " | "))) << '\n';
    }
    out << "summary\ttasks=" << report.tasks.size() << '\t' << summary_counts(report, "\t") << '\n';
}

} // namespace npoisson
