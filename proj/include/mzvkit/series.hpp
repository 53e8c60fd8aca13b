#ifndef MZVKIT_SERIES_HPP
#define MZVKIT_SERIES_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include <mzvkit/errors.hpp>
#include <mzvkit/scalar.hpp>

namespace mzvkit
{

struct Orders
{
    int s = 0;
    int t = 0;
    friend auto operator<=>(const Orders &, const Orders &) = default;
};

inline std::string to_string(const Orders &o)
{
    return std::to_string(o.s) + "," + std::to_string(o.t);
}

// Power series in s, t truncated above s^Ms and t^Mt.
template <class C>
class BiSeries
{
public:
    explicit BiSeries(Orders o, const C &constant = C{}) : ord_(o), c_(size_for(o))
    {
        c_[0] = constant;
    }

    Orders orders() const noexcept { return ord_; }
    const C &at(int m, int n) const { return c_[pos(m, n)]; }
    C &at(int m, int n) { return c_[pos(m, n)]; }

    // c * s^m t^n, or zero if outside the grid.
    static BiSeries monomial(Orders o, const C &c, int m, int n)
    {
        BiSeries r(o);
        if (m <= o.s && n <= o.t) {
            r.at(m, n) = c;
        }
        return r;
    }

    BiSeries &operator+=(const BiSeries &o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] = c_[i] + o.c_[i];
        }
        return *this;
    }
    BiSeries &operator-=(const BiSeries &o)
    {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] = c_[i] - o.c_[i];
        }
        return *this;
    }
    friend BiSeries operator+(BiSeries a, const BiSeries &b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries &b) { return a -= b; }
    friend BiSeries operator-(const BiSeries &a)
    {
        BiSeries r(a.ord_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            r.c_[i] = -a.c_[i];
        }
        return r;
    }
    friend BiSeries operator*(const BiSeries &a, const BiSeries &b)
    {
        a.check(b);
        BiSeries r(a.ord_);
        for (int m1 = 0; m1 <= a.ord_.s; ++m1) {
            for (int n1 = 0; n1 <= a.ord_.t; ++n1) {
                const C &x = a.at(m1, n1);
                if (is_zero(x)) {
                    continue;
                }
                for (int m2 = 0; m1 + m2 <= a.ord_.s; ++m2) {
                    for (int n2 = 0; n1 + n2 <= a.ord_.t; ++n2) {
                        const C &y = b.at(m2, n2);
                        if (!is_zero(y)) {
                            r.at(m1 + m2, n1 + n2) = r.at(m1 + m2, n1 + n2) + x * y;
                        }
                    }
                }
            }
        }
        return r;
    }
    BiSeries &operator*=(const BiSeries &o) { return *this = *this * o; }
    friend bool operator==(const BiSeries &a, const BiSeries &b) { return a.ord_ == b.ord_ && a.c_ == b.c_; }

    BiSeries scaled(const C &c) const
    {
        BiSeries r(ord_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r.c_[i] = c_[i] * c;
        }
        return r;
    }

    // Multiply by s^a t^b.
    BiSeries shift(int a, int b) const
    {
        BiSeries r(ord_);
        for (int m = 0; m + a <= ord_.s; ++m) {
            for (int n = 0; n + b <= ord_.t; ++n) {
                r.at(m + a, n + b) = at(m, n);
            }
        }
        return r;
    }

    // Substitute s -> sign_s * s and t -> sign_t * t.
    BiSeries flip(int sign_s, int sign_t) const
    {
        BiSeries r(*this);
        for (int m = 0; m <= ord_.s; ++m) {
            for (int n = 0; n <= ord_.t; ++n) {
                const bool neg = (sign_s < 0 && (m % 2)) != (sign_t < 0 && (n % 2));
                if (neg) {
                    r.at(m, n) = -r.at(m, n);
                }
            }
        }
        return r;
    }

    // Re-truncate at smaller or larger orders (new entries are zero).
    BiSeries with_orders(Orders o) const
    {
        BiSeries r(o);
        for (int m = 0; m <= std::min(o.s, ord_.s); ++m) {
            for (int n = 0; n <= std::min(o.t, ord_.t); ++n) {
                r.at(m, n) = at(m, n);
            }
        }
        return r;
    }

    template <class F>
    auto map(F &&f) const -> BiSeries<decltype(f(std::declval<const C &>()))>
    {
        BiSeries<decltype(f(std::declval<const C &>()))> r(ord_);
        for (int m = 0; m <= ord_.s; ++m) {
            for (int n = 0; n <= ord_.t; ++n) {
                r.at(m, n) = f(at(m, n));
            }
        }
        return r;
    }

    bool is_zero_series() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const C &x) { return is_zero(x); });
    }

private:
    static std::size_t size_for(Orders o)
    {
        if (o.s < 0 || o.t < 0) {
            throw DomainError("series", "negative truncation order");
        }
        return static_cast<std::size_t>(o.s + 1) * static_cast<std::size_t>(o.t + 1);
    }
    std::size_t pos(int m, int n) const { return static_cast<std::size_t>(m) * (ord_.t + 1) + n; }
    void check(const BiSeries &o) const
    {
        if (o.ord_ != ord_) {
            throw RingError("series", "series truncated at (" + to_string(ord_) + ") and (" + to_string(o.ord_)
                                          + ") are in different rings");
        }
    }

    Orders ord_;
    std::vector<C> c_;
};

template <class C>
bool is_zero(const BiSeries<C> &a)
{
    return a.is_zero_series();
}
template <class C>
BiSeries<C> zero_like(const BiSeries<C> &a)
{
    return BiSeries<C>(a.orders());
}
template <class C>
BiSeries<C> one_like(const BiSeries<C> &a)
{
    return BiSeries<C>(a.orders(), one_like(C{}));
}
template <class C>
BiSeries<C> scale(const BiSeries<C> &a, long n)
{
    return a.map([n](const C &x) { return C(scale(x, n)); });
}

template <class C>
BiSeries<C> scale(const BiSeries<C> &a, const Rational &q)
{
    return a.map([&q](const C &x) { return C(scale(x, q)); });
}

inline BiSeries<Complex> conj(const BiSeries<Complex> &a)
{
    return a.map([](const Complex &z) { return conj(z); });
}

// Power series in one variable truncated above x^order.
template <class C>
struct UniSeries
{
    std::vector<C> c;

    UniSeries() = default;
    explicit UniSeries(int order) : c(static_cast<std::size_t>(order + 1)) {}
    int order() const noexcept { return static_cast<int>(c.size()) - 1; }

    friend UniSeries operator*(const UniSeries &a, const UniSeries &b)
    {
        if (a.order() != b.order()) {
            throw RingError("series", "series of orders " + std::to_string(a.order()) + " and "
                                          + std::to_string(b.order()) + " are in different rings");
        }
        UniSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            for (int j = 0; i + j <= a.order(); ++j) {
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
            }
        }
        return r;
    }
    friend UniSeries operator+(UniSeries a, const UniSeries &b)
    {
        if (a.order() != b.order()) {
            throw RingError("series", "series orders differ");
        }
        for (int i = 0; i <= a.order(); ++i) {
            a.c[i] = a.c[i] + b.c[i];
        }
        return a;
    }
    friend UniSeries operator-(UniSeries a, const UniSeries &b)
    {
        if (a.order() != b.order()) {
            throw RingError("series", "series orders differ");
        }
        for (int i = 0; i <= a.order(); ++i) {
            a.c[i] = a.c[i] - b.c[i];
        }
        return a;
    }
    friend bool operator==(const UniSeries &, const UniSeries &) = default;
};

} // namespace mzvkit

#endif
