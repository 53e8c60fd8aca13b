#ifndef MZVKIT_ASSOCIATOR_HPP
#define MZVKIT_ASSOCIATOR_HPP

#include <vector>

#include <mzvkit/indices.hpp>
#include <mzvkit/nc_poly.hpp>
#include <mzvkit/numeric.hpp>
#include <mzvkit/series.hpp>
#include <mzvkit/word.hpp>
#include <mzvkit/word_algebra.hpp>

namespace mzvkit
{

// Series in the noncommuting X0, X1 truncated above degree D. Words use the
// same Letter type as the e-alphabet (E0 for X0, E1 for X1).
class NcSeries
{
public:
    explicit NcSeries(int degree);
    static NcSeries one(int degree);
    // c0 X0 + c1 X1
    static NcSeries linear(const Complex &c0, const Complex &c1, int degree);

    int degree() const noexcept { return degree_; }
    const Complex &coeff(const Word &w) const;
    Complex &coeff(const Word &w);

    NcSeries &operator+=(const NcSeries &o);
    NcSeries &operator-=(const NcSeries &o);
    friend NcSeries operator+(NcSeries a, const NcSeries &b) { return a += b; }
    friend NcSeries operator-(NcSeries a, const NcSeries &b) { return a -= b; }
    friend NcSeries operator*(const NcSeries &a, const NcSeries &b);
    NcSeries scaled(const Complex &c) const;

    // Largest coefficient modulus.
    Real max_abs() const;

    template <class F>
    void for_each(F &&f) const
    {
        for (int len = 0; len <= degree_; ++len) {
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
                const Word w = Word::from_bits(bits, len);
                f(w, coeff(w));
            }
        }
    }

private:
    static std::size_t slot(const Word &w) { return (std::size_t{1} << w.length()) - 1 + w.bits(); }
    void check(const NcSeries &o) const;

    int degree_;
    std::vector<Complex> c_;
};

// exp(c0 X0 + c1 X1), truncated.
NcSeries nc_exp_letter(const Complex &c0, const Complex &c1, int degree);
// Substitute X0 -> image0, X1 -> image1 with letter-linear images (a X0 + b X1).
NcSeries nc_subst(const NcSeries &f, const std::array<Complex, 2> &image0, const std::array<Complex, 2> &image1);
// f(X1, X0)
NcSeries nc_swap(const NcSeries &f);
// Anti-automorphism X_i -> -X_i.
NcSeries nc_eps(const NcSeries &f);
NcSeries nc_conj(const NcSeries &f);
// Word reversal without signs.
NcSeries nc_reverse(const NcSeries &f);

// Coefficient of X_{a_n}...X_{a_1} is Z^._T(e_{a_1}...e_{a_n}) evaluated at T.
NcSeries phi(Product p, const Complex &T, int degree, int prec);
NcSeries phi_kz(int degree, int prec);
// eps(Phi(T1)) X1 Phi(T2)
NcSeries phi_ad(Product p, const Complex &T1, const Complex &T2, int degree, int prec);
NcSeries phi_rs(int degree, int prec);
// Phi_RS(X_inf, X1) and Phi_RS(X_inf, X0)
NcSeries phi_rs_inf1(int degree, int prec);
NcSeries phi_rs_inf0(int degree, int prec);

// <Phi, w> reads the coefficient of the X-word in the same letter order.
Complex pair(const NcSeries &f, const QPoly &w);
BiSeries<Complex> pair(const NcSeries &f, const SeriesPoly &w);

// Degree needed to pair against weight-w data at the given orders.
int degree_budget(int weight, Orders o);

// (-1)^{wt+dep} <Phi_Ad(T1,T2), (1+e0 s)^{-1} e_k e1 (1+e0 t)^{-1}>
BiSeries<Complex> smzv_via_assoc(const Index &k, Product p, const Complex &T1, const Complex &T2, Orders o,
                                 int prec, int degree = -1);
// (1/2 pi i) (-1)^{wt+dep} <Phi_RS, (1+e0 s)^{-1} e_k e1 (1+e0 t)^{-1}>; exp(-(s+t) pi i/2) for k empty.
BiSeries<Complex> rsmzv(const Index &k, Orders o, int prec, int degree = -1);
// exp(-(s+t) pi i/2) zeta^{s,t,*}(k; pi i/2, -pi i/2)
BiSeries<Complex> rsmzv_remark(const Index &k, Orders o, int prec);
BiSeries<Complex> rsmzv_star(const Index &k, Orders o, int prec, int degree = -1);
// (1/2 pi i) <Phi_RS(X_inf, X1), (1-e0 s)^{-1}(e1-e0) w(k) (e1-e0)(1-e0 t)^{-1}>
BiSeries<Complex> rsmzv_star_via_assoc(const Index &k, Orders o, int prec, int degree = -1);

Real check_two_cycle(int degree, int prec);
Real check_three_cycle(int degree, int prec);
// Phi(T) = exp(-T X1) Phi(0)
Real check_t_part(Product p, const Complex &T, int degree, int prec);
// Phi^sh(T) = Gamma0(X1) Phi^*(T)
Real check_gamma_factor(const Complex &T, int degree, int prec);
// Phi^sh_Ad(0,T) = eps(Phi^*(0)) X1 exp(sum zeta(2k)/k X1^{2k}) Phi^*(T)
Real check_independence_factor(const Complex &T, int degree, int prec);
// Phi_Ad(T1,T2) = Phi_Ad(0,T2-T1)
Real check_ad_independence(Product p, const Complex &T1, const Complex &T2, int degree, int prec);
Real check_duality_assoc(int degree, int prec);
Real check_refined_duality(const Index &k, Orders o, int prec);
// smzv_via_assoc against the numeric (s,t)-adic value at sampled T1, T2.
Real check_smzv_via_assoc(const Index &k, Product p, Orders o, int prec);
// Pairing route against the remark route.
Real check_rsmzv_routes(const Index &k, Orders o, int prec);

} // namespace mzvkit

#endif
