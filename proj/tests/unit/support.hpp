#pragma once

#include <string_view>
#include <variant>

#include "npoisson/parser.hpp"
#include "npoisson/tensor_parser.hpp"

namespace testing {

inline npoisson::Polynomial poly(std::string_view text, const npoisson::ChartPtr& chart)
{
    return npoisson::parse_expr(text, chart);
}

inline npoisson::Form form(std::string_view text, const npoisson::ChartPtr& chart)
{
    auto value = npoisson::parse_tensor(text, chart);
    if (auto* p = std::get_if<npoisson::Polynomial>(&value)) return npoisson::Form(*p);
    return std::get<npoisson::Form>(value);
}

inline npoisson::Multivector multivector(std::string_view text, const npoisson::ChartPtr& chart)
{
    auto value = npoisson::parse_tensor(text, chart);
    if (auto* p = std::get_if<npoisson::Polynomial>(&value)) return npoisson::Multivector(*p);
    return std::get<npoisson::Multivector>(value);
}

} // namespace testing
