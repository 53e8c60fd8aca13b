#ifndef MZVKIT_NUMERIC_HPP
#define MZVKIT_NUMERIC_HPP

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include <mzvkit/rational.hpp>

namespace mzvkit
{

// Working real type. Requested precisions are capped well below the
// backend's digit count so rounding never dominates the error budget.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<110>,
                                           boost::multiprecision::et_off>;

inline constexpr int max_prec = 90;
inline constexpr int min_prec = 15;

Real to_real(const Rational &q);
Real pi();
// 10^{-digits}
Real tolerance_for(int prec);
std::string to_decimal(const Real &x, int digits);
// Short scientific rendering for residual/tolerance report fields.
std::string to_sci(const Real &x);

struct Complex
{
    Real re = 0;
    Real im = 0;

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(int r) : re(r) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Rational &q) : re(to_real(q)) {}

    Complex &operator+=(const Complex &o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex &operator-=(const Complex &o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex &operator*=(const Complex &o)
    {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    friend Complex operator+(Complex a, const Complex &b) { return a += b; }
    friend Complex operator-(Complex a, const Complex &b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex &b) { return a *= b; }
    friend Complex operator-(const Complex &a) { return Complex(-a.re, -a.im); }
    friend Complex operator/(const Complex &a, const Complex &b)
    {
        const Real d = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
    }
    friend bool operator==(const Complex &a, const Complex &b) { return a.re == b.re && a.im == b.im; }
};

inline Complex conj(const Complex &z) { return Complex(z.re, -z.im); }
Real abs(const Complex &z);
Complex i_unit();
// exp(z) for complex z.
Complex exp(const Complex &z);
std::string to_string(const Complex &z, int digits);

// A value with a conservative absolute error bound.
struct PrecisionReal
{
    Real value;
    Real err;
};

struct PrecisionComplex
{
    Complex value;
    Real err;
};

} // namespace mzvkit

#endif
