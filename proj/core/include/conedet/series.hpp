#pragma once

#include <vector>

#include "conedet/types.hpp"

namespace conedet {

// Truncated power series around 0 with complex coefficients c[0] + c[1] s + ...
// All binary operations truncate to the shorter operand's order unless noted.
class Series {
public:
    Series() = default;
    explicit Series(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}
    static Series zero(int order) { return Series(std::vector<Complex>(order + 1, 0.0)); }
    static Series identity(int order);  // s

    int order() const { return static_cast<int>(c_.size()) - 1; }
    Complex operator[](int k) const { return k >= 0 && k <= order() ? c_[k] : Complex(0.0); }
    Complex& at(int k) { return c_[k]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    Series truncated(int order) const;
    Complex eval(Complex s) const;          // Horner
    Complex eval_derivative(Complex s) const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(Complex a) const;
    Series derivative() const;

    // 1 / this, requires c[0] != 0.
    Series reciprocal() const;
    // sqrt of a series with c[0] == 1 (principal branch).
    Series sqrt1p() const;
    // this(o(s)) with o(0) == 0.
    Series compose(const Series& o) const;
    // Compositional inverse of a series with c[0] == 0, c[1] != 0.
    Series inverse() const;

private:
    std::vector<Complex> c_;
};

} // namespace conedet
