#ifndef MZVKIT_SCALAR_HPP
#define MZVKIT_SCALAR_HPP

#include <concepts>

#include <mzvkit/numeric.hpp>
#include <mzvkit/rational.hpp>

namespace mzvkit
{

template <class R>
struct scalar_traits
{
    static constexpr bool is_exact = true;
};

template <>
struct scalar_traits<Complex>
{
    static constexpr bool is_exact = false;
};

// Declared ahead of the concept: unqualified lookup inside the requires
// clause would not find them for the gmp types otherwise.
inline bool is_zero(const Rational &q) { return q == 0; }
inline Rational zero_like(const Rational &) { return Rational(0); }
inline Rational one_like(const Rational &) { return Rational(1); }
inline Rational scale(const Rational &q, long n) { return Rational(q * n); }

inline Rational scale(const Rational &q, const Rational &c) { return Rational(q * c); }

inline bool is_zero(const Complex &z) { return z.re == 0 && z.im == 0; }
inline Complex zero_like(const Complex &) { return Complex(); }
inline Complex one_like(const Complex &) { return Complex(1); }
inline Complex scale(const Complex &z, long n) { return Complex(z.re * n, z.im * n); }
inline Complex scale(const Complex &z, const Rational &c)
{
    const Real r = to_real(c);
    return Complex(z.re * r, z.im * r);
}

// Uniform contract for coefficient rings of NcPoly and the series types.
// zero_like/one_like take a witness so that rings carrying parameters
// (truncation orders, moduli) can reproduce them.
template <class R>
concept ScalarRing = std::copyable<R> && requires(const R &a, const R &b, long n) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { scale(a, n) } -> std::convertible_to<R>;
};

} // namespace mzvkit

#endif
