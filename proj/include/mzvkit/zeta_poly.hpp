#ifndef MZVKIT_ZETA_POLY_HPP
#define MZVKIT_ZETA_POLY_HPP

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <mzvkit/indices.hpp>
#include <mzvkit/rational.hpp>

namespace mzvkit
{

enum class TVar { T = 0, T1 = 1, T2 = 2 };

const char *tvar_name(TVar v);

// Monomial in the formal symbols Z[k] (k admissible, non-empty) and T, T1, T2.
struct ZMonomial
{
    std::map<Index, int> z;
    std::array<int, 3> t{0, 0, 0};

    int degree() const;
    friend bool operator==(const ZMonomial &, const ZMonomial &) = default;
    // Total degree first, then lexicographic on (z, t).
    friend bool operator<(const ZMonomial &a, const ZMonomial &b);
    friend ZMonomial operator*(const ZMonomial &a, const ZMonomial &b);
};

// Q-polynomial in Z-symbols and T-variables. No MZV relations are applied,
// so equality is structural.
class ZetaPoly
{
public:
    using Terms = std::map<ZMonomial, Rational>;

    ZetaPoly() = default;
    ZetaPoly(const Rational &c);
    ZetaPoly(int c) : ZetaPoly(Rational(c)) {}

    // Z[()] is 1; DomainError unless k is admissible.
    static ZetaPoly symbol(const Index &k);
    static ZetaPoly var(TVar v, int power = 1);

    const Terms &terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    void add(const ZMonomial &m, const Rational &c);

    ZetaPoly &operator+=(const ZetaPoly &o);
    ZetaPoly &operator-=(const ZetaPoly &o);
    ZetaPoly &operator*=(const ZetaPoly &o);
    friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly &b) { return a += b; }
    friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly &b) { return a -= b; }
    friend ZetaPoly operator*(const ZetaPoly &a, const ZetaPoly &b);
    friend ZetaPoly operator-(const ZetaPoly &a);
    friend bool operator==(const ZetaPoly &, const ZetaPoly &) = default;

    ZetaPoly scaled(const Rational &c) const;
    int degree_in(TVar v) const;
    // Coefficients c_n with p = sum c_n v^n.
    std::vector<ZetaPoly> split_by(TVar v) const;
    // Replace v by the polynomial q.
    ZetaPoly substitute(TVar v, const ZetaPoly &q) const;
    ZetaPoly rename(TVar from, TVar to) const;
    std::set<Index> symbols() const;

private:
    Terms terms_;
};

ZetaPoly pow(const ZetaPoly &p, int n);

inline bool is_zero(const ZetaPoly &p) { return p.empty(); }
inline ZetaPoly zero_like(const ZetaPoly &) { return ZetaPoly(); }
inline ZetaPoly one_like(const ZetaPoly &) { return ZetaPoly(1); }
inline ZetaPoly scale(const ZetaPoly &p, long n) { return p.scaled(Rational(n)); }
inline ZetaPoly scale(const ZetaPoly &p, const Rational &c) { return p.scaled(c); }

// "1/2 * T^2 + -1/2 * Z[2]^1"; "0" for the zero polynomial.
std::string to_string(const ZetaPoly &p);

} // namespace mzvkit

#endif
