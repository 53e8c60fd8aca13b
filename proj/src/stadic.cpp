#include <mzvkit/stadic.hpp>

#include <mutex>

#include <mzvkit/errors.hpp>
#include <mzvkit/regularization.hpp>
#include <mzvkit/word_algebra.hpp>

namespace mzvkit
{

Rational sample_T()
{
    return Rational(7, 10);
}
Rational sample_T1()
{
    return Rational(3, 10);
}
Rational sample_T2()
{
    return Rational(-7, 10);
}

namespace
{

std::mutex shift_mutex;

Complex sampled(const Rational &q)
{
    return Complex(q);
}

NumSeries constant(Orders o, const Complex &c)
{
    return NumSeries(o, c);
}

// zeta^{s,.}_shift(k; T) placed along the s-axis.
NumSeries s_factor(const Index &k, Product p, Orders o, const Complex &T, int prec, bool star)
{
    const TSeries f = star ? shifted_mzv_star(k, p, o.s) : shifted_mzv(k, p, o.s);
    const auto c = evaluate(f, Bindings{{TVar::T, T}}, prec);
    NumSeries r(o);
    for (int m = 0; m <= o.s; ++m) {
        r.at(m, 0) = c[static_cast<std::size_t>(m)];
    }
    return r;
}

// zeta^{-t,.}_shift(k; T) placed along the t-axis.
NumSeries t_factor(const Index &k, Product p, Orders o, const Complex &T, int prec, bool star)
{
    const TSeries f = star ? shifted_mzv_star(k, p, o.t) : shifted_mzv(k, p, o.t);
    const auto c = evaluate(f, Bindings{{TVar::T, T}}, prec);
    NumSeries r(o);
    for (int n = 0; n <= o.t; ++n) {
        r.at(0, n) = n % 2 ? Complex(-c[static_cast<std::size_t>(n)]) : c[static_cast<std::size_t>(n)];
    }
    return r;
}

NumSeries sum_over_splits(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec,
                          bool star)
{
    NumSeries total(o);
    for (int i = 0; i <= k.depth(); ++i) {
        const auto [head, tail] = split(k, i);
        NumSeries term = s_factor(head, p, o, T1, prec, star) * t_factor(reverse(tail), p, o, T2, prec, star);
        if (tail.weight() % 2) {
            term = -term;
        }
        total += term;
    }
    return total;
}

void require_weight_above_depth(const Index &k)
{
    if (k.empty() || k.weight() <= k.depth()) {
        throw DomainError("stadic-values", "cyclic sum formula needs weight k greater than r, got " + to_string(k));
    }
}

Complex default_T1()
{
    return sampled(sample_T1());
}
Complex default_T2()
{
    return sampled(sample_T2());
}

int j_limit(Orders o)
{
    return std::max(o.s, o.t);
}

} // namespace

TSeries shifted_mzv(const Index &k, Product p, int t_order, TVar v)
{
    static std::map<std::tuple<Index, Product, int>, TSeries> cache;
    TSeries r;
    bool found = false;
    {
        std::lock_guard lock(shift_mutex);
        if (auto it = cache.find({k, p, t_order}); it != cache.end()) {
            r = it->second;
            found = true;
        }
    }
    if (!found) {
        r = TSeries(t_order);
        for (int n = 0; n <= t_order; ++n) {
            for (const ExponentTuple &e : exponent_tuples(k.depth(), n)) {
                const Rational f = Rational(b_coeff(k, e)) * (n % 2 ? -1 : 1);
                r.c[static_cast<std::size_t>(n)] += zeta_reg(oplus(k, e), p).scaled(f);
            }
        }
        std::lock_guard lock(shift_mutex);
        cache.emplace(std::make_tuple(k, p, t_order), r);
    }
    if (v != TVar::T) {
        for (auto &c : r.c) {
            c = c.rename(TVar::T, v);
        }
    }
    return r;
}

TSeries shifted_mzv_star(const Index &k, Product p, int t_order, TVar v)
{
    TSeries r(t_order);
    for (const Index &l : coarsenings(k)) {
        r = r + shifted_mzv(l, p, t_order, v);
    }
    return r;
}

TSeries shifted_mzv_from_words(const Index &k, Product p, int t_order, TVar v)
{
    TSeries r(t_order);
    const Word ek = word_of_index(k);
    for (int n = 0; n <= t_order; ++n) {
        const ZetaPoly z = Z_reg_full(QPoly(Word::power(Letter::E0, n) * ek, Rational(1)), p, v);
        r.c[static_cast<std::size_t>(n)] = k.depth() % 2 ? -z : z;
    }
    return r;
}

BiSeries<ZetaPoly> stadic_smzv(const Index &k, Product p, Orders o)
{
    BiSeries<ZetaPoly> total(o);
    for (int i = 0; i <= k.depth(); ++i) {
        const auto [head, tail] = split(k, i);
        const TSeries a = shifted_mzv(head, p, o.s, TVar::T1);
        const TSeries b = shifted_mzv(reverse(tail), p, o.t, TVar::T2);
        BiSeries<ZetaPoly> fa(o);
        BiSeries<ZetaPoly> fb(o);
        for (int m = 0; m <= o.s; ++m) {
            fa.at(m, 0) = a.c[static_cast<std::size_t>(m)];
        }
        for (int n = 0; n <= o.t; ++n) {
            fb.at(0, n) = n % 2 ? -b.c[static_cast<std::size_t>(n)] : b.c[static_cast<std::size_t>(n)];
        }
        BiSeries<ZetaPoly> term = fa * fb;
        if (tail.weight() % 2) {
            term = -term;
        }
        total += term;
    }
    return total;
}

BiSeries<ZetaPoly> stadic_smzv_star(const Index &k, Product p, Orders o)
{
    return stadic_smzv_tau(k, Rational(1), p, o);
}

BiSeries<ZetaPoly> stadic_smzv_tau(const Index &k, const Rational &tau, Product p, Orders o)
{
    BiSeries<ZetaPoly> total(o);
    for (const Index &l : coarsenings(k)) {
        Rational w = 1;
        for (int i = 0; i < k.depth() - l.depth(); ++i) {
            w *= tau;
        }
        if (w != 0) {
            total += scale(stadic_smzv(l, p, o), w);
        }
    }
    return total;
}

BiSeries<Complex> evaluate(const BiSeries<ZetaPoly> &s, const Bindings &values, int prec)
{
    return s.map([&](const ZetaPoly &z) { return eval_zeta_poly(z, values, prec).value; });
}

std::vector<Complex> evaluate(const TSeries &s, const Bindings &values, int prec)
{
    std::vector<Complex> out;
    out.reserve(s.c.size());
    for (const auto &z : s.c) {
        out.push_back(eval_zeta_poly(z, values, prec).value);
    }
    return out;
}

Real max_abs(const NumSeries &s)
{
    Real m = 0;
    for (int a = 0; a <= s.orders().s; ++a) {
        for (int b = 0; b <= s.orders().t; ++b) {
            m = std::max(m, abs(s.at(a, b)));
        }
    }
    return m;
}

NumSeries smzv_numeric(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec)
{
    return sum_over_splits(k, p, o, T1, T2, prec, false);
}

NumSeries smzv_star_by_factors(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec)
{
    return sum_over_splits(k, p, o, T1, T2, prec, true);
}

NumSeries smzv_tau_numeric(const Index &k, const Rational &tau, Product p, Orders o, const Complex &T1,
                           const Complex &T2, int prec)
{
    NumSeries total(o);
    for (const Index &l : coarsenings(k)) {
        Rational w = 1;
        for (int i = 0; i < k.depth() - l.depth(); ++i) {
            w *= tau;
        }
        if (w != 0) {
            total += scale(smzv_numeric(l, p, o, T1, T2, prec), w);
        }
    }
    return total;
}

NumSeries smzv_star_numeric(const Index &k, Product p, Orders o, const Complex &T1, const Complex &T2, int prec)
{
    return smzv_tau_numeric(k, Rational(1), p, o, T1, T2, prec);
}

NumSeries smzv_numeric(const IndexCombination &c, Product p, Orders o, const Complex &T1, const Complex &T2,
                       int prec)
{
    NumSeries total(o);
    for (const auto &[k, q] : c.terms()) {
        total += scale(smzv_numeric(k, p, o, T1, T2, prec), q);
    }
    return total;
}

Real check_harmonic(const Index &k, const Index &l, Orders o, int prec)
{
    const Complex T1 = default_T1();
    const Complex T2 = default_T2();
    const auto p = Product::Harmonic;
    const NumSeries lhs = smzv_numeric(index_harmonic(k, l), p, o, T1, T2, prec);
    const NumSeries rhs = smzv_numeric(k, p, o, T1, T2, prec) * smzv_numeric(l, p, o, T1, T2, prec);
    return max_abs(lhs - rhs);
}

Real check_shuffle(const Index &l, const Index &k, Orders o, int prec)
{
    const Complex zero(0);
    const auto p = Product::Shuffle;
    // Left side: zeta_S applied to l sh_s k, read back as indices s-coefficientwise.
    const SeriesPoly u = shuffle_shifted(embed(l), embed(k), o.s);
    NumSeries lhs(o);
    for (const auto &[w, c] : u.terms()) {
        const Index j = index_of_word(w);
        NumSeries coeff(o);
        for (int m = 0; m <= o.s; ++m) {
            const Rational q = j.depth() % 2 ? Rational(-c.at(m, 0)) : c.at(m, 0);
            coeff.at(m, 0) = Complex(q);
        }
        lhs += coeff * smzv_numeric(j, p, o, zero, zero, prec);
    }
    NumSeries rhs(o);
    for (int n = 0; n <= o.t; ++n) {
        for (const ExponentTuple &e : exponent_tuples(l.depth(), n)) {
            const Index j = concat(k, reverse(oplus(l, e)));
            rhs += scale(smzv_numeric(j, p, o, zero, zero, prec), Rational(b_coeff(l, e))).shift(0, n);
        }
    }
    if (l.weight() % 2) {
        rhs = -rhs;
    }
    return max_abs(lhs - rhs);
}

Real check_antipode(const Index &k, int t_order, int prec)
{
    const Orders o{0, t_order};
    const Bindings at{{TVar::T, sampled(sample_T())}};
    auto along_t = [&](const TSeries &s) {
        NumSeries r(o);
        const auto c = evaluate(s, at, prec);
        for (int n = 0; n <= t_order; ++n) {
            r.at(0, n) = c[static_cast<std::size_t>(n)];
        }
        return r;
    };
    NumSeries total(o);
    for (int i = 0; i <= k.depth(); ++i) {
        const auto [head, tail] = split(k, i);
        NumSeries term = along_t(shifted_mzv(reverse(head), Product::Harmonic, t_order))
                         * along_t(shifted_mzv_star(tail, Product::Harmonic, t_order));
        total += i % 2 ? -term : term;
    }
    if (k.empty()) {
        total -= NumSeries(o, Complex(1));
    }
    return max_abs(total);
}

Real check_shifted_harmonic(const Index &k, const Index &l, int t_order, int prec)
{
    const Orders o{0, t_order};
    const Bindings at{{TVar::T, sampled(sample_T())}};
    auto along_t = [&](const TSeries &s) {
        NumSeries r(o);
        const auto c = evaluate(s, at, prec);
        for (int n = 0; n <= t_order; ++n) {
            r.at(0, n) = c[static_cast<std::size_t>(n)];
        }
        return r;
    };
    NumSeries lhs(o);
    const IndexCombination kl = index_harmonic(k, l);
    for (const auto &[j, q] : kl.terms()) {
        lhs += scale(along_t(shifted_mzv(j, Product::Harmonic, t_order)), q);
    }
    const NumSeries rhs = along_t(shifted_mzv(k, Product::Harmonic, t_order))
                          * along_t(shifted_mzv(l, Product::Harmonic, t_order));
    return max_abs(lhs - rhs);
}

Real check_classical_csf(const Index &k, int prec)
{
    require_weight_above_depth(k);
    auto star = [&](const Index &j) {
        Real v = 0;
        for (const Index &l : coarsenings(j)) {
            v += mzv(l, prec).value;
        }
        return v;
    };
    Real lhs = 0;
    for (const Index &rot : cyclic_class(k)) {
        const int u = rot[0];
        const Index rest = split(rot, 1).second;
        for (int j = 0; j <= u - 2; ++j) {
            lhs += star(concat(Index{j + 1}, rest, Index{u - j}));
        }
    }
    const int w = k.weight();
    return boost::multiprecision::abs(lhs - w * star(Index{w + 1}));
}

Real check_shifted_csf(const Index &k, int t_order, int prec)
{
    require_weight_above_depth(k);
    const Orders o{0, t_order};
    const Bindings at{{TVar::T, sampled(sample_T())}};
    auto value = [&](const Index &j) {
        NumSeries r(o);
        const auto c = evaluate(shifted_mzv_star(j, Product::Harmonic, t_order), at, prec);
        for (int n = 0; n <= t_order; ++n) {
            r.at(0, n) = c[static_cast<std::size_t>(n)];
        }
        return r;
    };
    NumSeries lhs(o);
    NumSeries rhs(o);
    for (const Index &rot : cyclic_class(k)) {
        const int u = rot[0];
        const Index rest = split(rot, 1).second;
        for (int j = 0; j <= u - 1; ++j) {
            lhs += value(concat(Index{j + 1}, rest, Index{u - j}));
        }
        for (int j = 0; j <= t_order; ++j) {
            rhs += value(concat(rot, Index{j + 1})).shift(0, j);
        }
    }
    const int w = k.weight();
    rhs += scale(value(Index{w + 1}), static_cast<long>(w));
    return max_abs(lhs - rhs);
}

Real check_csf_tau(const Index &k, const Rational &tau, Orders o, int prec)
{
    require_weight_above_depth(k);
    const Complex T1 = default_T1();
    const Complex T2 = default_T2();
    const auto p = Product::Harmonic;
    auto value = [&](const Index &j) { return smzv_tau_numeric(j, tau, p, o, T1, T2, prec); };
    NumSeries lhs(o);
    NumSeries rhs(o);
    const Rational rest_weight = 1 - tau;
    for (const Index &rot : cyclic_class(k)) {
        const int u = rot[0];
        const Index rest = split(rot, 1).second;
        for (int j = 0; j <= u - 1; ++j) {
            lhs += value(concat(Index{j + 1}, rest, Index{u - j}));
        }
        for (int j = 0; j <= j_limit(o); ++j) {
            NumSeries t_term = value(concat(Index{j + 1}, rot));
            NumSeries s_term = value(concat(rot, Index{j + 1}));
            if (rest_weight != 0) {
                t_term += scale(value(uplus(Index{j + 1}, rot)), rest_weight);
                s_term += scale(value(uplus(rot, Index{j + 1})), rest_weight);
            }
            rhs += t_term.shift(0, j) + s_term.shift(j, 0);
        }
    }
    // k tau^r zeta*(k+1)
    Rational corr = k.weight();
    for (int i = 0; i < k.depth(); ++i) {
        corr *= tau;
    }
    if (corr != 0) {
        lhs -= scale(smzv_star_numeric(Index{k.weight() + 1}, p, o, T1, T2, prec), corr);
    }
    return max_abs(lhs - rhs);
}

Real check_csf_star(const Index &k, Orders o, int prec)
{
    require_weight_above_depth(k);
    const Complex T1 = default_T1();
    const Complex T2 = default_T2();
    const auto p = Product::Harmonic;
    auto value = [&](const Index &j) { return smzv_star_numeric(j, p, o, T1, T2, prec); };
    NumSeries lhs(o);
    NumSeries rhs(o);
    for (const Index &rot : cyclic_class(k)) {
        const int u = rot[0];
        const Index rest = split(rot, 1).second;
        for (int j = 0; j <= u - 1; ++j) {
            lhs += value(concat(Index{j + 1}, rest, Index{u - j}));
        }
        for (int j = 0; j <= j_limit(o); ++j) {
            rhs += value(concat(Index{j + 1}, rot)).shift(0, j) + value(concat(rot, Index{j + 1})).shift(j, 0);
        }
    }
    rhs += scale(value(Index{k.weight() + 1}), static_cast<long>(k.weight()));
    return max_abs(lhs - rhs);
}

Real check_csf_nonstar(const Index &k, Orders o, int prec)
{
    require_weight_above_depth(k);
    const Complex T1 = default_T1();
    const Complex T2 = default_T2();
    const auto p = Product::Harmonic;
    auto value = [&](const Index &j) { return smzv_numeric(j, p, o, T1, T2, prec); };
    NumSeries lhs(o);
    NumSeries rhs(o);
    for (const Index &rot : cyclic_class(k)) {
        const int u = rot[0];
        const Index rest = split(rot, 1).second;
        for (int j = 0; j <= u - 1; ++j) {
            lhs += value(concat(Index{j + 1}, rest, Index{u - j}));
        }
        for (int j = 0; j <= j_limit(o); ++j) {
            const NumSeries t_term = value(concat(Index{j + 1}, rot)) + value(uplus(Index{j + 1}, rot));
            const NumSeries s_term = value(concat(rot, Index{j + 1})) + value(uplus(rot, Index{j + 1}));
            rhs += t_term.shift(0, j) + s_term.shift(j, 0);
        }
    }
    return max_abs(lhs - rhs);
}

Real check_independence(const Index &k, Product p, Orders o, int prec)
{
    const BiSeries<ZetaPoly> z = stadic_smzv(k, p, o);
    const Complex T1 = default_T1();
    const Complex T2 = default_T2();
    const NumSeries a = evaluate(z, Bindings{{TVar::T1, T1}, {TVar::T2, T2}}, prec);
    const NumSeries b = evaluate(z, Bindings{{TVar::T1, Complex(0)}, {TVar::T2, T2 - T1}}, prec);
    return max_abs(a - b);
}

Real check_explicit_reg(const Index &k, int t_order, int prec)
{
    const Orders o{0, t_order};
    const Complex T = sampled(sample_T());
    auto along_t = [&](const TSeries &s, const Complex &at) {
        NumSeries r(o);
        const auto c = evaluate(s, Bindings{{TVar::T, at}}, prec);
        for (int n = 0; n <= t_order; ++n) {
            r.at(0, n) = c[static_cast<std::size_t>(n)];
        }
        return r;
    };
    const NumSeries lhs = along_t(shifted_mzv(k, Product::Shuffle, t_order), Complex(0));
    NumSeries rhs(o);
    for (int i = 0; i <= k.depth(); ++i) {
        const auto [head, tail] = split(k, i);
        const Complex r = eval_zeta_poly(R_poly(tail), Bindings{{TVar::T, T}}, prec).value;
        rhs += along_t(shifted_mzv(head, Product::Harmonic, t_order), T) * constant(o, r);
    }
    return max_abs(lhs - rhs);
}

} // namespace mzvkit
