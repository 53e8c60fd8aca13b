#ifndef MZVKIT_REGULARIZATION_HPP
#define MZVKIT_REGULARIZATION_HPP

#include <vector>

#include <mzvkit/numeric.hpp>
#include <mzvkit/word_algebra.hpp>
#include <mzvkit/zeta_poly.hpp>

namespace mzvkit
{

// w = sum_i coeffs[i] . e1^{.i}, with every coeffs[i] supported on H^0.
struct RegDecomposition
{
    Product product = Product::Harmonic;
    std::vector<QPoly> coeffs;

    QPoly reconstruct() const;
};

// e1^{.n} for the given product.
const QPoly &e1_power(Product p, int n);

// Constant term reg(w) of a single H^1 word.
QPoly reg_word(const Word &w, Product p);
RegDecomposition regularize(const QPoly &w, Product p);

// Z on H^0: e_k -> (-1)^dep(k) Z[k].
ZetaPoly Z_h0(const QPoly &w);
// The homomorphism Z^._T on H^1, with Z^._T(e1) = -T and T named by v.
ZetaPoly Z_reg(const QPoly &w, Product p, TVar v = TVar::T);
// Extension to all of H through the leading e0-power.
ZetaPoly Z_reg_full(const QPoly &w, Product p, TVar v = TVar::T);

// zeta^.(k;T) = (-1)^dep(k) Z^._T(e_k); memoized.
ZetaPoly zeta_reg(const Index &k, Product p, TVar v = TVar::T);
ZetaPoly zeta_reg_star(const Index &k, Product p, TVar v = TVar::T);

// Coefficients of X^0..X^N in exp(sum_{k>=2} Z[k]/k X^k).
std::vector<ZetaPoly> gamma0_coeffs(int N);
// Linear in the powers of v; rho(v^n) from exp(vX) Gamma0(-X).
ZetaPoly rho(const ZetaPoly &p, TVar v = TVar::T);
ZetaPoly R_poly(const Index &k, TVar v = TVar::T);

// |zeta^sh(k;T) - rho(zeta^*(k;T))| at T = 7/10.
Real check_reg_theorem(const Index &k, int prec);

} // namespace mzvkit

#endif
