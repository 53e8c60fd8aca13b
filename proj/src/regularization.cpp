#include <mzvkit/regularization.hpp>

#include <map>
#include <mutex>

#include <mzvkit/mzv_numeric.hpp>

namespace mzvkit
{

namespace
{

std::mutex reg_mutex;

QPoly product_of(Product p, const QPoly &a, const QPoly &b)
{
    return product(p, a, b);
}

// Splits w = u e1^n with u empty or ending in e0.
std::pair<Word, int> strip_trailing_e1(const Word &w)
{
    int n = 0;
    while (n < w.length() && w.at(w.length() - 1 - n) == Letter::E1) {
        ++n;
    }
    return {w.sub(0, w.length() - n), n};
}

void check_h1(const QPoly &w)
{
    if (!w.in_h1()) {
        throw DomainError("regularization", "regularization needs a polynomial supported on H^1");
    }
}

} // namespace

const QPoly &e1_power(Product p, int n)
{
    static std::map<std::pair<Product, int>, QPoly> cache;
    std::lock_guard lock(reg_mutex);
    const auto key = std::make_pair(p, n);
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    QPoly r(Word(), Rational(1));
    const QPoly e1(Word::letter(Letter::E1), Rational(1));
    for (int i = 0; i < n; ++i) {
        r = product_of(p, r, e1);
    }
    return cache.emplace(key, std::move(r)).first->second;
}

QPoly RegDecomposition::reconstruct() const
{
    QPoly r;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        r += product_of(product, coeffs[i], e1_power(product, static_cast<int>(i)));
    }
    return r;
}

QPoly reg_word(const Word &w, Product p)
{
    static std::map<std::pair<Word, Product>, QPoly> cache;
    if (!w.in_h1()) {
        throw DomainError("regularization", "word " + to_string(w) + " is not in H^1");
    }
    {
        std::lock_guard lock(reg_mutex);
        if (auto it = cache.find({w, p}); it != cache.end()) {
            return it->second;
        }
    }
    const auto [u, n] = strip_trailing_e1(w);
    QPoly r(w, Rational(1));
    for (int i = 1; i <= n; ++i) {
        const QPoly lower = reg_word(u * Word::power(Letter::E1, n - i), p);
        r -= product_of(p, lower, e1_power(p, i)).scaled(Rational(1, factorial(i)));
    }
    std::lock_guard lock(reg_mutex);
    return cache.emplace(std::make_pair(w, p), std::move(r)).first->second;
}

RegDecomposition regularize(const QPoly &w, Product p)
{
    check_h1(w);
    RegDecomposition d;
    d.product = p;
    for (const auto &[word, c] : w.terms()) {
        const auto [u, n] = strip_trailing_e1(word);
        if (d.coeffs.size() < static_cast<std::size_t>(n + 1)) {
            d.coeffs.resize(static_cast<std::size_t>(n + 1));
        }
        for (int i = 0; i <= n; ++i) {
            const Rational f = c / Rational(factorial(i));
            d.coeffs[static_cast<std::size_t>(i)] += reg_word(u * Word::power(Letter::E1, n - i), p).scaled(f);
        }
    }
    while (!d.coeffs.empty() && d.coeffs.back().empty()) {
        d.coeffs.pop_back();
    }
    return d;
}

ZetaPoly Z_h0(const QPoly &w)
{
    ZetaPoly r;
    for (const auto &[word, c] : w.terms()) {
        if (!word.in_h0()) {
            throw DomainError("regularization", "Z is only defined on H^0, got " + to_string(word));
        }
        const Index k = index_of_word(word);
        r += ZetaPoly::symbol(k).scaled(k.depth() % 2 ? Rational(-c) : c);
    }
    return r;
}

ZetaPoly Z_reg(const QPoly &w, Product p, TVar v)
{
    const RegDecomposition d = regularize(w, p);
    ZetaPoly r;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
        const int n = static_cast<int>(i);
        r += Z_h0(d.coeffs[i]) * ZetaPoly::var(v, n).scaled(Rational(n % 2 ? -1 : 1));
    }
    return r;
}

ZetaPoly Z_reg_full(const QPoly &w, Product p, TVar v)
{
    ZetaPoly r;
    for (const auto &[word, c] : w.terms()) {
        int n = 0;
        while (n < word.length() && word.at(n) == Letter::E0) {
            ++n;
        }
        if (n == word.length()) {
            if (n == 0) {
                r += ZetaPoly(c);
            }
            continue;
        }
        // e0^n e1 v  ->  (-1)^n e1 (e0^n sh v)
        const Word rest = word.sub(n + 1, word.length());
        const QPoly moved = QPoly(Word::letter(Letter::E1), Rational(1))
                            * shuffle(QPoly(Word::power(Letter::E0, n), Rational(1)), QPoly(rest, Rational(1)));
        r += Z_reg(moved, p, v).scaled(n % 2 ? Rational(-c) : c);
    }
    return r;
}

ZetaPoly zeta_reg(const Index &k, Product p, TVar v)
{
    static std::map<std::pair<Index, Product>, ZetaPoly> cache;
    ZetaPoly value;
    bool found = false;
    {
        std::lock_guard lock(reg_mutex);
        if (auto it = cache.find({k, p}); it != cache.end()) {
            value = it->second;
            found = true;
        }
    }
    if (!found) {
        value = Z_reg(embed(k), p, TVar::T);
        std::lock_guard lock(reg_mutex);
        cache.emplace(std::make_pair(k, p), value);
    }
    return value.rename(TVar::T, v);
}

ZetaPoly zeta_reg_star(const Index &k, Product p, TVar v)
{
    ZetaPoly r;
    for (const Index &l : coarsenings(k)) {
        r += zeta_reg(l, p, v);
    }
    return r;
}

std::vector<ZetaPoly> gamma0_coeffs(int N)
{
    std::vector<ZetaPoly> e(static_cast<std::size_t>(N + 1));
    e[0] = ZetaPoly(1);
    // n E_n = sum_{k=2}^n Z[k] E_{n-k}
    for (int n = 1; n <= N; ++n) {
        ZetaPoly acc;
        for (int k = 2; k <= n; ++k) {
            acc += ZetaPoly::symbol(Index{k}) * e[static_cast<std::size_t>(n - k)];
        }
        e[static_cast<std::size_t>(n)] = acc.scaled(Rational(1, n));
    }
    return e;
}

ZetaPoly rho(const ZetaPoly &p, TVar v)
{
    const auto parts = p.split_by(v);
    const int N = static_cast<int>(parts.size()) - 1;
    const auto gamma = gamma0_coeffs(N);
    ZetaPoly r;
    for (int n = 0; n <= N; ++n) {
        if (parts[static_cast<std::size_t>(n)].empty()) {
            continue;
        }
        // rho(v^n) = sum_b n!/(n-b)! (-1)^b gamma_b v^{n-b}
        ZetaPoly image;
        for (int b = 0; b <= n; ++b) {
            const Rational f = Rational(factorial(n)) / Rational(factorial(n - b)) * (b % 2 ? -1 : 1);
            image += (gamma[static_cast<std::size_t>(b)] * ZetaPoly::var(v, n - b)).scaled(f);
        }
        r += parts[static_cast<std::size_t>(n)] * image;
    }
    return r;
}

ZetaPoly R_poly(const Index &k, TVar v)
{
    for (int x : k.parts()) {
        if (x != 1) {
            return ZetaPoly();
        }
    }
    const int r = k.depth();
    const auto gamma = gamma0_coeffs(r);
    // rho(v^b)|_{v=0} = b! (-1)^b gamma_b, so each term is (-1)^b gamma_b (-v)^a / a!.
    ZetaPoly out;
    for (int a = 0; a <= r; ++a) {
        const int b = r - a;
        const Rational f = Rational((a + b) % 2 ? -1 : 1) / Rational(factorial(a));
        out += (gamma[static_cast<std::size_t>(b)] * ZetaPoly::var(v, a)).scaled(f);
    }
    return out;
}

Real check_reg_theorem(const Index &k, int prec)
{
    const ZetaPoly lhs = zeta_reg(k, Product::Shuffle);
    const ZetaPoly rhs = rho(zeta_reg(k, Product::Harmonic));
    const Bindings at{{TVar::T, Complex(Rational(7, 10))}};
    return abs(eval_zeta_poly(lhs - rhs, at, prec).value);
}

} // namespace mzvkit
