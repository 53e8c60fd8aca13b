#include <doctest.h>

#include <random>

#include <mzvkit/errors.hpp>
#include <mzvkit/word_algebra.hpp>

#include "generators.hpp"

using namespace mzvkit;

TEST_CASE("harmonic product of e1 with itself")
{
    const QPoly e1(parse_word("y1"), Rational(1));
    CHECK(to_string(harmonic(e1, e1)) == "2*y1y1 - y1y0");
}

TEST_CASE("index harmonic product (1)*(2)")
{
    const auto c = index_harmonic(Index{1}, Index{2});
    IndexCombination want;
    want.add(Index{1, 2}, 1);
    want.add(Index{2, 1}, 1);
    want.add(Index{3}, 1);
    CHECK(c == want);
}

TEST_CASE("shuffle e1 with e1e0")
{
    const QPoly a(parse_word("y1"), Rational(1));
    const QPoly b(parse_word("y1y0"), Rational(1));
    CHECK(shuffle(a, b) == parse_nc_poly("2*y1y1y0 + y1y0y1"));
}

namespace
{

QPoly P(const std::string &s)
{
    return parse_nc_poly(s);
}

QPoly word(const std::string &s)
{
    return QPoly(parse_word(s), Rational(1));
}

bool same(const SeriesPoly &a, const SeriesPoly &b)
{
    return (a - b).empty();
}

} // namespace

TEST_CASE("embedding and unit laws")
{
    CHECK(embed(Index{}) == word(""));
    CHECK(embed(Index{2}) == P("-y1y0"));
    CHECK(embed(Index{1, 2}) == P("y1y1y0"));
    const QPoly w = P("3*y1y0y1 - y1");
    CHECK(harmonic(word(""), w) == w);
    CHECK(shuffle(w, word("")) == w);
    CHECK(shuffle(word("y1"), word("y1")) == P("2*y1y1"));
    CHECK_THROWS_AS(harmonic(word("y0"), word("y1")), DomainError);
    for (const Index &k : gen::all_indices(5)) {
        CHECK(to_indices(embed(k)) == IndexCombination(k));
    }
}

TEST_CASE("harmonic and shuffle are commutative and associative")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const QPoly a = gen::random_h1(rng, 4);
        const QPoly b = gen::random_h1(rng, 4);
        const QPoly c = gen::random_h1(rng, 3);
        CHECK(harmonic(a, b) == harmonic(b, a));
        CHECK(shuffle(a, b) == shuffle(b, a));
        // total weight stays at most 8 once the two-operand products are capped
        const QPoly x = gen::random_h1(rng, 3);
        const QPoly y = gen::random_h1(rng, 2);
        CHECK(harmonic(harmonic(x, y), c) == harmonic(x, harmonic(y, c)));
        CHECK(shuffle(shuffle(x, y), c) == shuffle(x, shuffle(y, c)));
        CHECK(harmonic(a, b + c) == harmonic(a, b) + harmonic(a, c));
    }
}

TEST_CASE("geometric series and shifted shuffle")
{
    CHECK(same(geometric(+1, Letter::E0, Var::T, Orders{0, 0}), lift(word(""), Orders{0, 0})));
    const Orders o{0, 2};
    SeriesPoly want = lift(word(""), o);
    BiSeries<Rational> t(o), t2(o);
    t.at(0, 1) = -1;
    t2.at(0, 2) = 1;
    want.add(parse_word("y0"), t);
    want.add(parse_word("y0y0"), t2);
    CHECK(same(geometric(+1, Letter::E0, Var::T, o), want));
    const Orders os{1, 0};
    SeriesPoly g = lift(word(""), os);
    BiSeries<Rational> s(os);
    s.at(1, 0) = 1;
    g.add(parse_word("y0"), s);
    CHECK(same(geometric(-1, Letter::E0, Var::S, os), g));

    const QPoly u = P("y1y0 + 2*y1");
    const QPoly v = P("y1y1 - y0");
    CHECK(same(shuffle_shifted(u, v, 0), lift(shuffle(u, v), Orders{0, 0})));
    for (int order = 0; order <= 4; ++order) {
        CHECK(same(shuffle_shifted(word(""), word("y1"), order), lift(word("y1"), Orders{order, 0})));
    }

    // (u sh v) sh_s w = u sh_s (v sh_s w)
    const Orders o2{2, 0};
    const SeriesPoly e1 = lift(word("y1"), o2);
    const SeriesPoly lhs = shuffle_shifted(lift(shuffle(word("y1"), word("y1")), o2), e1, o2);
    const SeriesPoly rhs = shuffle_shifted(e1, shuffle_shifted(e1, e1, o2), o2);
    CHECK(same(lhs, rhs));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const QPoly a = gen::random_h1(rng, 2), b = gen::random_h1(rng, 2), c = gen::random_h1(rng, 2);
        const SeriesPoly l = shuffle_shifted(lift(shuffle(a, b), o2), lift(c, o2), o2);
        const SeriesPoly r = shuffle_shifted(lift(a, o2), shuffle_shifted(lift(b, o2), lift(c, o2), o2), o2);
        CHECK(same(l, r));
    }
}

TEST_CASE("sigma_t is a harmonic homomorphism")
{
    CHECK(same(sigma_t(word(""), 3), lift(word(""), Orders{0, 3})));
    const Orders o{0, 2};
    SeriesPoly want = lift(word("y1"), o);
    BiSeries<Rational> t(o), t2(o);
    t.at(0, 1) = -1;
    t2.at(0, 2) = 1;
    want.add(parse_word("y1y0"), t);
    want.add(parse_word("y1y0y0"), t2);
    CHECK(same(sigma_t(word("y1"), 2), want));

    const auto ks = gen::all_indices(5);
    for (const Index &k : ks) {
        for (const Index &l : ks) {
            if (k.weight() + l.weight() > 6) {
                continue;
            }
            const QPoly u = embed(k), v = embed(l);
            CHECK(same(sigma_t(harmonic(u, v), 3), harmonic(sigma_t(u, 3), sigma_t(v, 3))));
        }
    }
}

TEST_CASE("Hopf structure")
{
    const Tensor d = coproduct(word("y1y1"));
    CHECK(d.size() == 3);
    CHECK(d.at({Word{}, parse_word("y1y1")}) == 1);
    CHECK(d.at({parse_word("y1"), parse_word("y1")}) == 1);
    CHECK(d.at({parse_word("y1y1"), Word{}}) == 1);
    CHECK(antipode(embed(Index{2})) == -embed(Index{2}));
    CHECK(antipode(word("y1y1")) == P("y1y1 - y1y0"));
    CHECK(counit(P("3 + y1")) == 3);
    CHECK_THROWS_AS(counit(word("y0")), DomainError);
    CHECK(antipode_convolution(word("")) == word(""));
    for (const Index &k : gen::all_indices(6)) {
        CHECK(antipode_convolution(embed(k)).empty());
        CHECK(antipode(antipode(embed(k))) == embed(k));
    }
}

TEST_CASE("endomorphisms")
{
    CHECK(endo_tau(word("y1y0")) == word("y0y1"));
    CHECK(endo_eps(word("y1y0")) == word("y0y1"));
    CHECK(endo_eps(word("y1y0y0")) == P("-y0y0y1"));
    CHECK(endo_C(word("y1y0")) == P("y0y1 + y1y0"));
    CHECK(endo_C(word("")).empty());
    CHECK(endo_H(word("y1y0")) == word("y0"));
    CHECK(endo_H(word("y0y1")).empty());
    CHECK(endo_H(word("")).empty());
    CHECK(endo_S(word("y1"), Rational(1)) == P("y1 + y0"));
    CHECK(endo_S(word("y1y1"), Rational(1, 2)) == P("y1y1 + 1/2*y1y0 + 1/2*y0y1 + 1/4*y0y0"));
    CHECK(endo_A(word("y1y0y1"), Rational(3)) == P("9*y0y0y0"));
    CHECK(endo_S(word("y1y0"), Rational(0)) == word("y1y0"));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const QPoly a = gen::random_h1(rng, 5);
        CHECK(endo_tau(endo_tau(a)) == a);
        CHECK(endo_eps(endo_eps(a)) == a);
        const QPoly b = gen::random_h1(rng, 3);
        // S and tau are multiplicative for concatenation
        CHECK(endo_S(a * b, Rational(2, 3)) == endo_S(a, Rational(2, 3)) * endo_S(b, Rational(2, 3)));
        CHECK(endo_eps(a * b) == endo_eps(b) * endo_eps(a));
    }
}

TEST_CASE("telescoping shuffle identity")
{
    const Orders o{2, 2};
    const SeriesPoly inv_t = geometric(+1, Letter::E0, Var::T, o);  // (1 + e0 t)^{-1}
    const SeriesPoly inv_s = geometric(-1, Letter::E0, Var::S, o);  // (1 - e0 s)^{-1}
    const SeriesPoly inv_s_plus = geometric(+1, Letter::E0, Var::S, o);
    const SeriesPoly inv_t_minus = geometric(-1, Letter::E0, Var::T, o);
    const SeriesPoly e1 = lift(word("y1"), o);
    int checked = 0;
    for (int n = 0; n <= 4; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const Word w = Word::from_bits(bits, n);
            SeriesPoly lhs;
            for (int v = 0; v <= n; ++v) {
                const SeriesPoly left = inv_t * e1 * lift(QPoly(w.sub(0, v), Rational(1)), o);
                const SeriesPoly right = inv_s * e1 * lift(QPoly(w.sub(v, n).reversed(), Rational(1)), o);
                const SeriesPoly term = shuffle(left, right);
                lhs = v % 2 ? lhs - term : lhs + term;
            }
            const SeriesPoly lw = lift(QPoly(w, Rational(1)), o);
            const SeriesPoly rw = lift(QPoly(w.reversed(), Rational(1)), o);
            const SeriesPoly a = shuffle(inv_t, inv_s * e1 * rw * e1 * inv_t_minus);
            const SeriesPoly b = shuffle(inv_s, inv_t * e1 * lw * e1 * inv_s_plus);
            CHECK(same(lhs, n % 2 ? a - b : a + b));
            ++checked;
        }
    }
    CHECK(checked == 31);
}
