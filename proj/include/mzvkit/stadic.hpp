#ifndef MZVKIT_STADIC_HPP
#define MZVKIT_STADIC_HPP

#include <mzvkit/indices.hpp>
#include <mzvkit/mzv_numeric.hpp>
#include <mzvkit/nc_poly.hpp>
#include <mzvkit/series.hpp>
#include <mzvkit/zeta_poly.hpp>

namespace mzvkit
{

using TSeries = UniSeries<ZetaPoly>;
using NumSeries = BiSeries<Complex>;

// Sampled parameter values used by the numeric checks.
Rational sample_T();
Rational sample_T1();
Rational sample_T2();

// Shifted MZV: coefficient of t^n is sum_{wt(n)=n} b(k;n) (-1)^n zeta^.(k (+) n; T).
TSeries shifted_mzv(const Index &k, Product p, int t_order, TVar v = TVar::T);
TSeries shifted_mzv_star(const Index &k, Product p, int t_order, TVar v = TVar::T);
// (-1)^dep(k) sum_n Z_reg_full(e0^n e_k) t^n
TSeries shifted_mzv_from_words(const Index &k, Product p, int t_order, TVar v = TVar::T);

// Symbolic (s,t)-adic SMZV in T1, T2.
BiSeries<ZetaPoly> stadic_smzv(const Index &k, Product p, Orders o);
BiSeries<ZetaPoly> stadic_smzv_star(const Index &k, Product p, Orders o);
BiSeries<ZetaPoly> stadic_smzv_tau(const Index &k, const Rational &tau, Product p, Orders o);

BiSeries<Complex> evaluate(const BiSeries<ZetaPoly> &s, const Bindings &values, int prec);
std::vector<Complex> evaluate(const TSeries &s, const Bindings &values, int prec);
Real max_abs(const NumSeries &s);

// Numeric (s,t)-adic values at given T1, T2; products of evaluated shifted series.
NumSeries smzv_numeric(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec);
NumSeries smzv_star_numeric(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec);
NumSeries smzv_tau_numeric(const Index &k, const Rational &tau, Product p, Orders o, const Complex &T1,
                           const Complex &T2, int prec);
// Star value from the starred shifted factors directly (no coarsening sum).
NumSeries smzv_star_by_factors(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec);
// Linear extension to index combinations.
NumSeries smzv_numeric(const IndexCombination &c, Product p, Orders o, const Complex &T1, const Complex &T2,
                       int prec);

// Relation checkers; each returns the max residual over the truncated grid.
Real check_harmonic(const Index &k, const Index &l, Orders o, int prec);
Real check_shuffle(const Index &l, const Index &k, Orders o, int prec);
Real check_antipode(const Index &k, int t_order, int prec);
Real check_shifted_harmonic(const Index &k, const Index &l, int t_order, int prec);
Real check_classical_csf(const Index &k, int prec);
Real check_shifted_csf(const Index &k, int t_order, int prec);
Real check_csf_star(const Index &k, Orders o, int prec);
Real check_csf_nonstar(const Index &k, Orders o, int prec);
Real check_csf_tau(const Index &k, const Rational &tau, Orders o, int prec);
// zeta(k;T1,T2) against zeta(k;0,T2-T1), both from the symbolic series.
Real check_independence(const Index &k, Product p, Orders o, int prec);
// zeta^{t,sh}_shift(k;0) = sum_{(k',k'')=k} zeta^{t,*}_shift(k';T) R(k'';T)
Real check_explicit_reg(const Index &k, int t_order, int prec);

} // namespace mzvkit

#endif
