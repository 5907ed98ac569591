#include "mixedmoore/spectra.hpp"

#include "mixedmoore/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace mixedmoore::spectra {

using boost::multiprecision::cpp_rational;

namespace {

constexpr int max_order = 64;

using Matrix = std::vector<std::vector<BigInt>>;

Matrix integer_adjacency(const MixedGraph& g)
{
    const int n = g.order();
    Matrix a(n, std::vector<BigInt>(n, 0));
    const auto adj = adjacency_matrix(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[i][j] = adj[i][j];
    return a;
}

void check_order(const MixedGraph& g)
{
    if (g.order() > max_order)
        throw Error(ErrorKind::TooLarge, "characteristic polynomial limited to order " + std::to_string(max_order));
}

// Bareiss fraction-free elimination; destroys m.
BigInt bareiss_determinant(Matrix m)
{
    const int n = static_cast<int>(m.size());
    if (n == 0)
        return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending))
{
    trim();
}

IntPolynomial IntPolynomial::from_descending(std::initializer_list<long long> coeffs)
{
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(BigInt c)
{
    return IntPolynomial(std::vector<BigInt>{std::move(c)});
}

IntPolynomial IntPolynomial::linear(long long root)
{
    return IntPolynomial(std::vector<BigInt>{BigInt(-root), BigInt(1)});
}

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const
{
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0);
}

BigInt IntPolynomial::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::pow(int e) const
{
    IntPolynomial result = constant(1);
    for (int i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

std::string IntPolynomial::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = c_[i];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || i == 0)
            out << mag;
        if (i >= 1)
            out << 'x';
        if (i >= 2)
            out << '^' << i;
    }
    return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coefficient(static_cast<int>(i)) - b.coefficient(static_cast<int>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& divisor) const
{
    if (divisor.is_zero())
        throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
    const BigInt lead = divisor.c_.back();
    if (lead != 1 && lead != -1)
        throw Error(ErrorKind::InvalidArgument, "divisor must have leading coefficient +-1");
    std::vector<BigInt> rem = c_;
    const int dd = divisor.degree();
    std::vector<BigInt> quot(std::max(0, degree() - dd + 1));
    for (int i = degree(); i >= dd; --i) {
        const BigInt q = rem[i] * lead; // lead is its own inverse
        quot[i - dd] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] -= q * divisor.c_[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial char_poly(const MixedGraph& g)
{
    check_order(g);
    const int n = g.order();
    const Matrix a = integer_adjacency(g);
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    Matrix m(n, std::vector<BigInt>(n, 0));
    Matrix am(n, std::vector<BigInt>(n, 0));
    for (int k = 1; k <= n; ++k) {
        // am = A * m (m = M_{k-1}); then m = am + c_{n-k+1} I.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int t = 0; t < n; ++t)
                    if (a[i][t] != 0)
                        s += m[t][j];
                am[i][j] = s;
            }
        for (int i = 0; i < n; ++i) {
            m[i] = am[i];
            m[i][i] += c[n - k + 1];
        }
        BigInt trace = 0;
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t)
                if (a[i][t] != 0)
                    trace += m[t][i];
        c[n - k] = -trace / k;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_interpolated(const MixedGraph& g)
{
    check_order(g);
    const int n = g.order();
    const Matrix a = integer_adjacency(g);
    std::vector<cpp_rational> xs(n + 1), ys(n + 1);
    for (int p = 0; p <= n; ++p) {
        Matrix m(n, std::vector<BigInt>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[i][j] = (i == j ? BigInt(p) : BigInt(0)) - a[i][j];
        xs[p] = p;
        ys[p] = cpp_rational(bareiss_determinant(std::move(m)));
    }
    // Newton divided differences, then expand into the monomial basis.
    std::vector<cpp_rational> coef = ys;
    for (int j = 1; j <= n; ++j)
        for (int i = n; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    std::vector<cpp_rational> poly{coef[n]};
    for (int i = n - 1; i >= 0; --i) {
        // poly = poly * (x - xs[i]) + coef[i]
        std::vector<cpp_rational> next(poly.size() + 1, cpp_rational(0));
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] += poly[t];
            next[t] -= poly[t] * xs[i];
        }
        next[0] += coef[i];
        poly = std::move(next);
    }
    std::vector<BigInt> out;
    for (const auto& r : poly) {
        if (boost::multiprecision::denominator(r) != 1)
            throw Error(ErrorKind::InvalidArgument, "interpolation produced a non-integer coefficient");
        out.push_back(boost::multiprecision::numerator(r));
    }
    return IntPolynomial(std::move(out));
}

const std::array<IntPolynomial, 9>& builtin_polynomials()
{
    static const std::array<IntPolynomial, 9> polys{
        IntPolynomial::from_descending({1, 1, -2, -1, 2}),
        IntPolynomial::from_descending({1, 1, -2, -1}),
        IntPolynomial::from_descending({1, 0, -1, 1}),
        IntPolynomial::from_descending({1, 2, -1, -3}),
        IntPolynomial::from_descending({1, 1, -1, -1, 1}),
        IntPolynomial::from_descending({1, 1, -3, -1, 5, 0, -4}),
        IntPolynomial::from_descending({1, 3, 0, -6, 2, 11, -3, -9, 3, 3}),
        IntPolynomial::from_descending({1, 1, -3, -2, 5, 2, -3}),
        IntPolynomial::from_descending({1, 1, -1, 0, 3, 0, -1}),
    };
    return polys;
}

IntPolynomial SpectrumClass::product() const
{
    IntPolynomial result = IntPolynomial::constant(1);
    for (const auto& [f, mult] : factors)
        result = result * f.pow(mult);
    return result;
}

const std::array<SpectrumClass, 6>& spectrum_classes()
{
    static const std::array<SpectrumClass, 6> classes = [] {
        const auto& p = builtin_polynomials();
        const auto x = IntPolynomial::linear(0);
        const auto xm2 = IntPolynomial::linear(2);
        const auto xm1 = IntPolynomial::linear(1);
        const auto xp1 = IntPolynomial::linear(-1);
        return std::array<SpectrumClass, 6>{
            SpectrumClass{1, {{xm2, 1}, {x, 6}, {p[0], 1}, {p[1], 1}}, 9},
            SpectrumClass{2, {{xm2, 1}, {xp1, 1}, {xm1, 1}, {x, 5}, {p[2], 1}, {p[3], 1}}, 6},
            SpectrumClass{3, {{xm2, 1}, {x, 7}, {p[1], 2}}, 5},
            SpectrumClass{4, {{xm2, 1}, {x, 3}, {p[4], 1}, {p[5], 1}}, 4},
            SpectrumClass{5, {{xm2, 1}, {xm1, 1}, {x, 3}, {p[6], 1}}, 2},
            SpectrumClass{6, {{xm2, 1}, {x, 1}, {p[7], 1}, {p[8], 1}}, 1},
        };
    }();
    return classes;
}

std::optional<int> classify(const IntPolynomial& cp)
{
    for (const auto& cls : spectrum_classes())
        if (cls.product() == cp)
            return cls.id;
    return std::nullopt;
}

std::optional<int> classify(const MixedGraph& g)
{
    return classify(char_poly(g));
}

} // namespace mixedmoore::spectra
