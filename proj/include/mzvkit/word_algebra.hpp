#ifndef MZVKIT_WORD_ALGEBRA_HPP
#define MZVKIT_WORD_ALGEBRA_HPP

#include <map>
#include <utility>

#include <mzvkit/indices.hpp>
#include <mzvkit/nc_poly.hpp>
#include <mzvkit/series.hpp>

namespace mzvkit
{

using QPoly = NcPoly<Rational>;
using SeriesPoly = NcPoly<BiSeries<Rational>>;

// k -> (-1)^dep(k) e_k, extended linearly.
QPoly embed(const Index &k);
QPoly embed(const IndexCombination &c);
// Inverse of embed; DomainError on words outside H^1.
IndexCombination to_indices(const QPoly &p);

// Index-level products, transported through embed.
IndexCombination index_harmonic(const Index &k, const Index &l);
IndexCombination index_shuffle(const Index &k, const Index &l);
IndexCombination index_product(Product p, const Index &k, const Index &l);

enum class Var { S, T };

// sign = +1: (1 + a x)^{-1};  sign = -1: (1 - a x)^{-1}; truncated at the
// order of x in `orders`.
SeriesPoly geometric(int sign, Letter a, Var x, Orders orders);
// 1 + sign * a x
SeriesPoly linear_factor(int sign, Letter a, Var x, Orders orders);
SeriesPoly lift(const QPoly &p, Orders orders);

// u sh_s v = (1 - e0 s)(u sh (1 - e0 s)^{-1} v)
SeriesPoly shuffle_shifted(const SeriesPoly &u, const SeriesPoly &v, Orders orders);
SeriesPoly shuffle_shifted(const QPoly &u, const QPoly &v, int s_order);

// e_i -> e_i (1 + e0 t)^{-1}, multiplicatively.
SeriesPoly sigma_t(const QPoly &w, int order);

using Tensor = std::map<std::pair<Word, Word>, Rational>;

// Deconcatenation at index boundaries; H^1 only.
Tensor coproduct(const QPoly &p);
QPoly antipode(const QPoly &p);
Rational counit(const QPoly &p);
// mult o (antipode (x) id) o coproduct, with the harmonic product.
QPoly antipode_convolution(const QPoly &p);

// Letter swap e0 <-> e1.
template <ScalarRing R>
NcPoly<R> endo_tau(const NcPoly<R> &p)
{
    return p.map_words([](const Word &w) { return w.swapped(); });
}

// Anti-automorphism e_i -> -e_i.
template <ScalarRing R>
NcPoly<R> endo_eps(const NcPoly<R> &p)
{
    NcPoly<R> r;
    for (const auto &[w, c] : p.terms()) {
        r.add(w.reversed(), w.length() % 2 ? R(-c) : c);
    }
    return r;
}

// e1 -> e1 + tau e0, e0 -> e0.
template <ScalarRing R>
NcPoly<R> endo_S(const NcPoly<R> &p, const Rational &tau)
{
    NcPoly<R> r;
    for (const auto &[w, c] : p.terms()) {
        std::vector<int> ones;
        for (int i = 0; i < w.length(); ++i) {
            if (w.at(i) == Letter::E1) {
                ones.push_back(w.length() - 1 - i);
            }
        }
        const unsigned n = static_cast<unsigned>(ones.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::uint64_t bits = w.bits();
            int replaced = 0;
            for (unsigned j = 0; j < n; ++j) {
                if (mask & (1u << j)) {
                    bits &= ~(std::uint64_t{1} << ones[j]);
                    ++replaced;
                }
            }
            Rational f = 1;
            for (int j = 0; j < replaced; ++j) {
                f *= tau;
            }
            r.add(Word::from_bits(bits, w.length()), R(scale(c, f)));
        }
    }
    return r;
}

// e1 -> tau e0, e0 -> e0.
template <ScalarRing R>
NcPoly<R> endo_A(const NcPoly<R> &p, const Rational &tau)
{
    NcPoly<R> r;
    for (const auto &[w, c] : p.terms()) {
        Rational f = 1;
        for (int j = 0; j < w.count(Letter::E1); ++j) {
            f *= tau;
        }
        r.add(Word::power(Letter::E0, w.length()), R(scale(c, f)));
    }
    return r;
}

// Sum of the r rotations of each word; the empty word maps to 0.
template <ScalarRing R>
NcPoly<R> endo_C(const NcPoly<R> &p)
{
    NcPoly<R> r;
    for (const auto &[w, c] : p.terms()) {
        const int n = w.length();
        for (int j = 1; j <= n; ++j) {
            r.add(w.sub(j, n) * w.sub(0, j), c);
        }
    }
    return r;
}

// H(e1 w) = w, H(e0 w) = H(1) = 0.
template <ScalarRing R>
NcPoly<R> endo_H(const NcPoly<R> &p)
{
    NcPoly<R> r;
    for (const auto &[w, c] : p.terms()) {
        if (!w.empty() && w.front() == Letter::E1) {
            r.add(w.sub(1, w.length()), c);
        }
    }
    return r;
}

} // namespace mzvkit

#endif
