#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "npoisson/exterior.hpp"
#include "npoisson/parser.hpp"

namespace npoisson {

/// A function, a differential form or a multivector field.
using TensorValue = std::variant<Polynomial, Form, Multivector>;

using TensorSymbols = std::map<std::string, TensorValue, std::less<>>;

/// Evaluates the shared expression grammar over tensors:
///   d(x)      differential of a function (or exterior derivative of a form)
///   e(x)      coordinate vector field d/dx for a coordinate x
///   a ^ b     wedge product; `a ^ integer` is a power (wedge power for tensors)
///   f * T     scaling by a function
TensorValue evaluate_tensor(const Expr& expr, const ChartPtr& chart, const TensorSymbols* symbols = nullptr);
TensorValue parse_tensor(std::string_view text, const ChartPtr& chart, const TensorSymbols* symbols = nullptr,
                         std::size_t line = 1, std::size_t first_column = 1);

std::string to_string(const TensorValue& value);
/// "function", "2-form", "1-vector", ...
std::string describe(const TensorValue& value);

} // namespace npoisson
