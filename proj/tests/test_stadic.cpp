#include <doctest.h>

#include <mzvkit/errors.hpp>
#include <mzvkit/regularization.hpp>
#include <mzvkit/stadic.hpp>

using namespace mzvkit;

namespace
{

const Real tol = tolerance_for(30);
const ZetaPoly T = ZetaPoly::var(TVar::T);

ZetaPoly Z(std::initializer_list<int> k)
{
    return ZetaPoly::symbol(Index(k));
}

} // namespace

TEST_CASE("shifted MZV examples")
{
    const TSeries s2 = shifted_mzv(Index{2}, Product::Harmonic, 2);
    CHECK(s2.c[0] == Z({2}));
    CHECK(s2.c[1] == Z({3}).scaled(-2));
    CHECK(s2.c[2] == Z({4}).scaled(3));

    const TSeries e = shifted_mzv(Index{}, Product::Harmonic, 2);
    CHECK(e.c[0] == ZetaPoly(1));
    CHECK(e.c[1].empty());

    const TSeries s1 = shifted_mzv(Index{1}, Product::Harmonic, 1);
    CHECK(s1.c[0] == T);
    CHECK(s1.c[1] == -Z({2}));
}

TEST_CASE("shifted star examples")
{
    CHECK(shifted_mzv_star(Index{2}, Product::Harmonic, 2) == shifted_mzv(Index{2}, Product::Harmonic, 2));
    CHECK(shifted_mzv_star(Index{1, 1}, Product::Harmonic, 0).c[0] == (T * T + Z({2})).scaled(Rational(1, 2)));
}

TEST_CASE("binomial definition agrees with the word route")
{
    for (Product p : {Product::Harmonic, Product::Shuffle}) {
        for (int w = 1; w <= 6; ++w) {
            for (int r = 1; r <= w; ++r) {
                for (const ExponentTuple &e : exponent_tuples(r, w - r)) {
                    std::vector<int> parts;
                    for (int x : e.parts()) {
                        parts.push_back(x + 1);
                    }
                    const Index k(parts);
                    CHECK(shifted_mzv(k, p, 3) == shifted_mzv_from_words(k, p, 3));
                }
            }
        }
    }
}

TEST_CASE("(s,t)-adic values: small cases")
{
    const Orders o{1, 1};
    const auto e = stadic_smzv(Index{}, Product::Harmonic, o);
    CHECK(e.at(0, 0) == ZetaPoly(1));
    CHECK(e.at(1, 0).empty());

    const auto one = stadic_smzv(Index{1}, Product::Harmonic, o);
    CHECK(one.at(0, 0) == ZetaPoly::var(TVar::T1) - ZetaPoly::var(TVar::T2));
    // With T1 = T2 the value is sum_{n>=1} zeta(n+1)((-s)^n - t^n).
    const auto diag = one.map([](const ZetaPoly &z) { return z.substitute(TVar::T2, ZetaPoly::var(TVar::T1)); });
    CHECK(diag.at(0, 0).empty());
    CHECK(diag.at(1, 0) == -Z({2}));
    CHECK(diag.at(0, 1) == -Z({2}));
    CHECK(diag.at(1, 1).empty());
}

TEST_CASE("tau interpolation endpoints")
{
    const Orders o{1, 1};
    const Index k{1, 2};
    CHECK(stadic_smzv_tau(k, 0, Product::Harmonic, o) == stadic_smzv(k, Product::Harmonic, o));
    CHECK(stadic_smzv_tau(k, 1, Product::Harmonic, o) == stadic_smzv_star(k, Product::Harmonic, o));
    const auto half = stadic_smzv_tau(Index{1, 1}, Rational(1, 2), Product::Harmonic, o);
    CHECK(half == stadic_smzv(Index{1, 1}, Product::Harmonic, o)
                      + scale(stadic_smzv(Index{2}, Product::Harmonic, o), Rational(1, 2)));
}

TEST_CASE("star value: coarsening sum equals starred factors")
{
    const Complex T1(Rational(3, 10));
    const Complex T2(Rational(-7, 10));
    for (const Index &k : {Index{1, 2}, Index{2, 1}, Index{1, 1, 2}, Index{3, 1}}) {
        const auto a = smzv_star_numeric(k, Product::Harmonic, Orders{2, 2}, T1, T2, 40);
        const auto b = smzv_star_by_factors(k, Product::Harmonic, Orders{2, 2}, T1, T2, 40);
        CHECK(max_abs(a - b) < tol);
    }
}

TEST_CASE("symbolic and numeric routes agree")
{
    const Complex T1(Rational(3, 10));
    const Complex T2(Rational(-7, 10));
    const Bindings at{{TVar::T1, T1}, {TVar::T2, T2}};
    for (const Index &k : {Index{1}, Index{2, 1}, Index{1, 1, 2}}) {
        const auto sym = evaluate(stadic_smzv(k, Product::Harmonic, Orders{2, 2}), at, 40);
        CHECK(max_abs(sym - smzv_numeric(k, Product::Harmonic, Orders{2, 2}, T1, T2, 40)) < tol);
    }
}

TEST_CASE("relation checkers")
{
    CHECK(check_harmonic(Index{1}, Index{2}, Orders{2, 2}, 40) < tol);
    CHECK(check_harmonic(Index{1}, Index{1}, Orders{1, 1}, 40) < tol);
    CHECK(check_harmonic(Index{}, Index{2, 1}, Orders{2, 2}, 40) == 0);
    CHECK(check_shuffle(Index{1}, Index{2}, Orders{2, 2}, 40) < tol);
    CHECK(check_shuffle(Index{2}, Index{1}, Orders{1, 2}, 40) < tol);
    CHECK(check_shuffle(Index{}, Index{2}, Orders{2, 2}, 40) == 0);
    CHECK(check_antipode(Index{}, 2, 40) == 0);
    CHECK(check_antipode(Index{2}, 2, 40) < tol);
    CHECK(check_antipode(Index{1, 1}, 2, 40) < tol);
    CHECK(check_shifted_harmonic(Index{1}, Index{1}, 2, 40) < tol);
    CHECK(check_shifted_harmonic(Index{2}, Index{3}, 1, 40) < tol);
    CHECK(check_classical_csf(Index{2}, 40) < tol);
    CHECK(check_classical_csf(Index{1, 2}, 40) < tol);
    CHECK_THROWS_AS(check_classical_csf(Index{1, 1}, 40), DomainError);
    CHECK(check_shifted_csf(Index{3}, 2, 40) < tol);
    CHECK(check_csf_star(Index{2}, Orders{2, 2}, 40) < tol);
    CHECK(check_csf_nonstar(Index{2, 1}, Orders{1, 1}, 40) < tol);
    for (Rational tau : {Rational(0), Rational(1, 2), Rational(1)}) {
        CHECK(check_csf_tau(Index{2, 1}, tau, Orders{1, 1}, 40) < tol);
    }
    CHECK(check_independence(Index{1, 2}, Product::Harmonic, Orders{1, 1}, 40) < tol);
    CHECK(check_explicit_reg(Index{1, 1}, 2, 40) < tol);
    CHECK(check_explicit_reg(Index{2, 1}, 2, 40) < tol);
}
