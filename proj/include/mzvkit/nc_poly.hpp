#ifndef MZVKIT_NC_POLY_HPP
#define MZVKIT_NC_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <mzvkit/errors.hpp>
#include <mzvkit/scalar.hpp>
#include <mzvkit/word.hpp>

namespace mzvkit
{

// Integer combination of words; the result type of word-level products.
using WordCounts = std::map<Word, std::int64_t>;

WordCounts shuffle_words(const Word &u, const Word &v);
// Both words must lie in H^1.
WordCounts harmonic_words(const Word &u, const Word &v);

// Finitely supported noncommutative polynomial over e0, e1.
template <ScalarRing R>
class NcPoly
{
public:
    using Terms = std::map<Word, R>;

    NcPoly() = default;
    NcPoly(const Word &w, const R &c) { add(w, c); }

    const Terms &terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add(const Word &w, const R &c)
    {
        if (is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    // Zero when absent; `witness` supplies the ring element shape.
    R coefficient(const Word &w, const R &witness) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? zero_like(witness) : it->second;
    }
    const R *find(const Word &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? nullptr : &it->second;
    }

    NcPoly &operator+=(const NcPoly &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add(w, c);
        }
        return *this;
    }
    NcPoly &operator-=(const NcPoly &o)
    {
        for (const auto &[w, c] : o.terms_) {
            add(w, -c);
        }
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly &b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly &b) { return a -= b; }
    friend NcPoly operator-(const NcPoly &a)
    {
        NcPoly r;
        for (const auto &[w, c] : a.terms_) {
            r.terms_.emplace(w, -c);
        }
        return r;
    }

    // Concatenation product.
    friend NcPoly operator*(const NcPoly &a, const NcPoly &b)
    {
        NcPoly r;
        for (const auto &[u, x] : a.terms_) {
            for (const auto &[v, y] : b.terms_) {
                r.add(u * v, x * y);
            }
        }
        return r;
    }

    // Left scalar multiplication.
    NcPoly scaled(const R &c) const
    {
        NcPoly r;
        for (const auto &[w, x] : terms_) {
            r.add(w, c * x);
        }
        return r;
    }

    template <class F>
    NcPoly map_words(F &&f) const
    {
        NcPoly r;
        for (const auto &[w, x] : terms_) {
            r.add(f(w), x);
        }
        return r;
    }

    bool in_h1() const
    {
        for (const auto &[w, x] : terms_) {
            if (!w.in_h1()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const NcPoly &, const NcPoly &) = default;

private:
    Terms terms_;
};

namespace detail
{

template <ScalarRing R>
NcPoly<R> expand_counts(const NcPoly<R> &a, const NcPoly<R> &b, WordCounts (*kernel)(const Word &, const Word &))
{
    NcPoly<R> r;
    for (const auto &[u, x] : a.terms()) {
        for (const auto &[v, y] : b.terms()) {
            const R xy = x * y;
            for (const auto &[w, n] : kernel(u, v)) {
                r.add(w, scale(xy, static_cast<long>(n)));
            }
        }
    }
    return r;
}

} // namespace detail

template <ScalarRing R>
NcPoly<R> shuffle(const NcPoly<R> &a, const NcPoly<R> &b)
{
    return detail::expand_counts(a, b, &shuffle_words);
}

// DomainError unless both operands are supported on H^1.
template <ScalarRing R>
NcPoly<R> harmonic(const NcPoly<R> &a, const NcPoly<R> &b)
{
    if (!a.in_h1() || !b.in_h1()) {
        throw DomainError("word-algebra", "harmonic product needs operands in H^1");
    }
    return detail::expand_counts(a, b, &harmonic_words);
}

enum class Product { Harmonic, Shuffle };

inline const char *product_name(Product p)
{
    return p == Product::Harmonic ? "harmonic" : "shuffle";
}

template <ScalarRing R>
NcPoly<R> product(Product p, const NcPoly<R> &a, const NcPoly<R> &b)
{
    return p == Product::Harmonic ? harmonic(a, b) : shuffle(a, b);
}

template <ScalarRing R>
std::string to_string(const NcPoly<R> &p)
{
    if (p.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[w, c] : p.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += "(" + to_string(c) + ")*" + to_string(w);
    }
    return s;
}

// "2*y1y1 - y1y0"
std::string to_string(const NcPoly<Rational> &p);
NcPoly<Rational> parse_nc_poly(const std::string &text);

} // namespace mzvkit

#endif
