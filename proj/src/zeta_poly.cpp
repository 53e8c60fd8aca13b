#include <mzvkit/zeta_poly.hpp>

#include <mzvkit/errors.hpp>

namespace mzvkit
{

const char *tvar_name(TVar v)
{
    switch (v) {
    case TVar::T:
        return "T";
    case TVar::T1:
        return "T1";
    case TVar::T2:
        return "T2";
    }
    return "?";
}

int ZMonomial::degree() const
{
    int d = t[0] + t[1] + t[2];
    for (const auto &[k, e] : z) {
        d += e;
    }
    return d;
}

bool operator<(const ZMonomial &a, const ZMonomial &b)
{
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) {
        return da < db;
    }
    if (a.z != b.z) {
        return a.z < b.z;
    }
    return a.t < b.t;
}

ZMonomial operator*(const ZMonomial &a, const ZMonomial &b)
{
    ZMonomial r = a;
    for (const auto &[k, e] : b.z) {
        r.z[k] += e;
    }
    for (int i = 0; i < 3; ++i) {
        r.t[i] += b.t[i];
    }
    return r;
}

ZetaPoly::ZetaPoly(const Rational &c)
{
    add(ZMonomial{}, c);
}

ZetaPoly ZetaPoly::symbol(const Index &k)
{
    if (!k.admissible()) {
        throw DomainError("regularization", "Z-symbol needs an admissible index, got " + to_string(k));
    }
    if (k.empty()) {
        return ZetaPoly(1);
    }
    ZMonomial m;
    m.z[k] = 1;
    ZetaPoly p;
    p.add(m, 1);
    return p;
}

ZetaPoly ZetaPoly::var(TVar v, int power)
{
    ZMonomial m;
    m.t[static_cast<int>(v)] = power;
    ZetaPoly p;
    p.add(m, 1);
    return p;
}

void ZetaPoly::add(const ZMonomial &m, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

ZetaPoly &ZetaPoly::operator+=(const ZetaPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add(m, c);
    }
    return *this;
}

ZetaPoly &ZetaPoly::operator-=(const ZetaPoly &o)
{
    for (const auto &[m, c] : o.terms_) {
        add(m, -c);
    }
    return *this;
}

ZetaPoly operator*(const ZetaPoly &a, const ZetaPoly &b)
{
    ZetaPoly r;
    for (const auto &[m1, c1] : a.terms_) {
        for (const auto &[m2, c2] : b.terms_) {
            r.add(m1 * m2, c1 * c2);
        }
    }
    return r;
}

ZetaPoly &ZetaPoly::operator*=(const ZetaPoly &o)
{
    return *this = *this * o;
}

ZetaPoly operator-(const ZetaPoly &a)
{
    ZetaPoly r;
    for (const auto &[m, c] : a.terms_) {
        r.terms_.emplace(m, -c);
    }
    return r;
}

ZetaPoly ZetaPoly::scaled(const Rational &c) const
{
    ZetaPoly r;
    if (c == 0) {
        return r;
    }
    for (const auto &[m, x] : terms_) {
        r.terms_.emplace(m, x * c);
    }
    return r;
}

int ZetaPoly::degree_in(TVar v) const
{
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.t[static_cast<int>(v)]);
    }
    return d;
}

std::vector<ZetaPoly> ZetaPoly::split_by(TVar v) const
{
    std::vector<ZetaPoly> out(static_cast<std::size_t>(degree_in(v) + 1));
    const int i = static_cast<int>(v);
    for (const auto &[m, c] : terms_) {
        ZMonomial rest = m;
        rest.t[i] = 0;
        out[static_cast<std::size_t>(m.t[i])].add(rest, c);
    }
    return out;
}

ZetaPoly ZetaPoly::substitute(TVar v, const ZetaPoly &q) const
{
    const auto parts = split_by(v);
    ZetaPoly r;
    ZetaPoly power(1);
    for (std::size_t n = 0; n < parts.size(); ++n) {
        if (n > 0) {
            power *= q;
        }
        r += parts[n] * power;
    }
    return r;
}

ZetaPoly ZetaPoly::rename(TVar from, TVar to) const
{
    if (from == to) {
        return *this;
    }
    ZetaPoly r;
    const int f = static_cast<int>(from);
    const int g = static_cast<int>(to);
    for (const auto &[m, c] : terms_) {
        ZMonomial n = m;
        n.t[g] += n.t[f];
        n.t[f] = 0;
        r.add(n, c);
    }
    return r;
}

std::set<Index> ZetaPoly::symbols() const
{
    std::set<Index> out;
    for (const auto &[m, c] : terms_) {
        for (const auto &[k, e] : m.z) {
            out.insert(k);
        }
    }
    return out;
}

ZetaPoly pow(const ZetaPoly &p, int n)
{
    ZetaPoly r(1);
    for (int i = 0; i < n; ++i) {
        r *= p;
    }
    return r;
}

std::string to_string(const ZetaPoly &p)
{
    if (p.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[m, c] : p.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += to_string(c);
        for (const auto &[k, e] : m.z) {
            std::string parts;
            for (int x : k.parts()) {
                parts += (parts.empty() ? "" : ",") + std::to_string(x);
            }
            s += " * Z[" + parts + "]^" + std::to_string(e);
        }
        for (int i = 0; i < 3; ++i) {
            if (m.t[i] > 0) {
                s += std::string(" * ") + tvar_name(static_cast<TVar>(i)) + "^" + std::to_string(m.t[i]);
            }
        }
    }
    return s;
}

} // namespace mzvkit
