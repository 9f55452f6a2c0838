#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace npoisson {

/// A single global coordinate chart: an ordered list of distinct coordinate names.
class Chart {
public:
    explicit Chart(std::vector<std::string> names);

    std::size_t dimension() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t index) const { return names_.at(index); }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;

    bool operator==(const Chart& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> names);

/// Darboux chart (q1..qn, p1..pn).
ChartPtr make_darboux_chart(std::size_t n);

/// Copy of `base` with one more coordinate appended.
ChartPtr extend_chart(const ChartPtr& base, const std::string& name);

bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

} // namespace npoisson
