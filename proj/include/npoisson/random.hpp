#pragma once

#include <cstdint>
#include <random>

#include "npoisson/exterior.hpp"

namespace npoisson {

/// Seeded generator of small random polynomials and tensors.
///
/// Only the raw mt19937_64 stream is used (its output is fixed by the
/// standard); bounded draws are derived here, so sequences are identical on
/// every platform and standard library.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi);
    bool chance(unsigned percent) { return integer(0, 99) < static_cast<long>(percent); }

    /// a/b with |a| <= 3, b in {1, 2, 3}.
    Rational small_rational();
    Rational nonzero_rational();

    /// Up to max_terms terms of total degree <= max_degree, small coefficients.
    Polynomial polynomial(const ChartPtr& chart, unsigned max_degree = 2, unsigned max_terms = 3);
    Polynomial nonconstant_polynomial(const ChartPtr& chart, unsigned max_degree = 2, unsigned max_terms = 3);

    Form form(const ChartPtr& chart, std::size_t grade, unsigned max_degree = 2, unsigned max_terms = 3);
    Multivector multivector(const ChartPtr& chart, std::size_t grade, unsigned max_degree = 2,
                            unsigned max_terms = 3);

private:
    template <TensorKind Kind>
    GradedTensor<Kind> tensor(const ChartPtr& chart, std::size_t grade, unsigned max_degree, unsigned max_terms);

    std::mt19937_64 engine_;
};

} // namespace npoisson
