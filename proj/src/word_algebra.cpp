#include <mzvkit/word_algebra.hpp>

namespace mzvkit
{

QPoly embed(const Index &k)
{
    return QPoly(word_of_index(k), Rational(k.depth() % 2 ? -1 : 1));
}

QPoly embed(const IndexCombination &c)
{
    QPoly r;
    for (const auto &[k, q] : c.terms()) {
        r.add(word_of_index(k), Rational(k.depth() % 2 ? -q : q));
    }
    return r;
}

IndexCombination to_indices(const QPoly &p)
{
    IndexCombination r;
    for (const auto &[w, q] : p.terms()) {
        const Index k = index_of_word(w);
        r.add(k, Rational(k.depth() % 2 ? -q : q));
    }
    return r;
}

IndexCombination index_harmonic(const Index &k, const Index &l)
{
    return to_indices(harmonic(embed(k), embed(l)));
}

IndexCombination index_shuffle(const Index &k, const Index &l)
{
    return to_indices(shuffle(embed(k), embed(l)));
}

IndexCombination index_product(Product p, const Index &k, const Index &l)
{
    return p == Product::Harmonic ? index_harmonic(k, l) : index_shuffle(k, l);
}

SeriesPoly geometric(int sign, Letter a, Var x, Orders orders)
{
    const int order = x == Var::S ? orders.s : orders.t;
    SeriesPoly r;
    for (int j = 0; j <= order; ++j) {
        const Rational c = (sign > 0 && j % 2) ? -1 : 1;
        const auto mono = x == Var::S ? BiSeries<Rational>::monomial(orders, c, j, 0)
                                      : BiSeries<Rational>::monomial(orders, c, 0, j);
        r.add(Word::power(a, j), mono);
    }
    return r;
}

SeriesPoly linear_factor(int sign, Letter a, Var x, Orders orders)
{
    SeriesPoly r(Word(), BiSeries<Rational>(orders, Rational(1)));
    const Rational c = sign;
    r.add(Word::letter(a), x == Var::S ? BiSeries<Rational>::monomial(orders, c, 1, 0)
                                       : BiSeries<Rational>::monomial(orders, c, 0, 1));
    return r;
}

SeriesPoly lift(const QPoly &p, Orders orders)
{
    SeriesPoly r;
    for (const auto &[w, q] : p.terms()) {
        r.add(w, BiSeries<Rational>(orders, q));
    }
    return r;
}

SeriesPoly shuffle_shifted(const SeriesPoly &u, const SeriesPoly &v, Orders orders)
{
    const SeriesPoly inner = shuffle(u, geometric(-1, Letter::E0, Var::S, orders) * v);
    return linear_factor(-1, Letter::E0, Var::S, orders) * inner;
}

SeriesPoly shuffle_shifted(const QPoly &u, const QPoly &v, int s_order)
{
    const Orders o{s_order, 0};
    return shuffle_shifted(lift(u, o), lift(v, o), o);
}

SeriesPoly sigma_t(const QPoly &w, int order)
{
    const Orders o{0, order};
    const SeriesPoly g = geometric(+1, Letter::E0, Var::T, o);
    const SeriesPoly img0 = SeriesPoly(Word::letter(Letter::E0), BiSeries<Rational>(o, Rational(1))) * g;
    const SeriesPoly img1 = SeriesPoly(Word::letter(Letter::E1), BiSeries<Rational>(o, Rational(1))) * g;
    SeriesPoly r;
    for (const auto &[word, q] : w.terms()) {
        SeriesPoly acc(Word(), BiSeries<Rational>(o, q));
        for (int i = 0; i < word.length(); ++i) {
            acc = acc * (word.at(i) == Letter::E1 ? img1 : img0);
        }
        r += acc;
    }
    return r;
}

Tensor coproduct(const QPoly &p)
{
    Tensor r;
    for (const auto &[w, q] : p.terms()) {
        const Index k = index_of_word(w);
        for (int i = 0; i <= k.depth(); ++i) {
            auto [head, tail] = split(k, i);
            auto key = std::make_pair(word_of_index(head), word_of_index(tail));
            auto &slot = r[key];
            slot += q;
            if (slot == 0) {
                r.erase(key);
            }
        }
    }
    return r;
}

QPoly antipode(const QPoly &p)
{
    QPoly r;
    for (const auto &[w, q] : p.terms()) {
        for (const Index &l : coarsenings(index_of_word(w))) {
            r.add(word_of_index(reverse(l)), Rational(l.depth() % 2 ? -q : q));
        }
    }
    return r;
}

Rational counit(const QPoly &p)
{
    for (const auto &[w, q] : p.terms()) {
        if (!w.in_h1()) {
            throw DomainError("word-algebra", "counit needs H^1 support");
        }
    }
    const Rational *c = p.find(Word());
    return c ? *c : Rational(0);
}

QPoly antipode_convolution(const QPoly &p)
{
    QPoly r;
    for (const auto &[pair, q] : coproduct(p)) {
        r += harmonic(antipode(QPoly(pair.first, q)), QPoly(pair.second, Rational(1)));
    }
    return r;
}

} // namespace mzvkit
