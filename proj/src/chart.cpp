#include "npoisson/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "npoisson/error.hpp"

namespace npoisson {

namespace {

bool valid_identifier(const std::string& s)
{
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

Chart::Chart(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty()) throw DomainError("chart must have at least one coordinate");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw DomainError("invalid coordinate name '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate coordinate name '" + n + "'");
    }
}

std::optional<std::size_t> Chart::find(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Chart::index_of(std::string_view name) const
{
    if (auto i = find(name)) return *i;
    throw DomainError("unknown coordinate '" + std::string(name) + "'");
}

ChartPtr make_chart(std::vector<std::string> names)
{
    return std::make_shared<const Chart>(std::move(names));
}

ChartPtr make_darboux_chart(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    return make_chart(std::move(names));
}

ChartPtr extend_chart(const ChartPtr& base, const std::string& name)
{
    auto names = base->names();
    names.push_back(name);
    return make_chart(std::move(names));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b)
{
    return a == b || (a && b && *a == *b);
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b)
{
    if (!same_chart(a, b)) throw ChartMismatch();
}

} // namespace npoisson
