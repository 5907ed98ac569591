#pragma once

#include "mixedmoore/bounds.hpp"
#include "mixedmoore/core.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mixedmoore::spectra {

// Dense polynomial with big-integer coefficients, lowest degree first. The
// zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    // Coefficients from the leading one down, e.g. {1, 0, -1, 1} is x^3 - x + 1.
    static IntPolynomial from_descending(std::initializer_list<long long> coeffs);
    static IntPolynomial constant(BigInt c);
    // x - root
    static IntPolynomial linear(long long root);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coefficients() const { return c_; }
    BigInt coefficient(int i) const;

    BigInt eval(const BigInt& x) const;
    IntPolynomial pow(int e) const;
    std::string to_string() const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    // Division by a divisor whose leading coefficient is +-1.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const;

private:
    void trim();
    std::vector<BigInt> c_;
};

// det(xI - A) by Faddeev-LeVerrier in exact integers; n <= 64.
IntPolynomial char_poly(const MixedGraph& g);
// Independent check: fraction-free determinants at n+1 points, interpolated.
IntPolynomial char_poly_interpolated(const MixedGraph& g);

// p_1 .. p_9 (index 0 holds p_1).
const std::array<IntPolynomial, 9>& builtin_polynomials();

struct SpectrumClass {
    int id = 0;
    std::vector<std::pair<IntPolynomial, int>> factors;
    int expected_members = 0;

    IntPolynomial product() const;
};

const std::array<SpectrumClass, 6>& spectrum_classes();

// Class id 1..6, or nullopt when the characteristic polynomial matches none.
std::optional<int> classify(const MixedGraph& g);
std::optional<int> classify(const IntPolynomial& char_poly);

} // namespace mixedmoore::spectra
