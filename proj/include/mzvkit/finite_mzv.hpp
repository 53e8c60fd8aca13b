#ifndef MZVKIT_FINITE_MZV_HPP
#define MZVKIT_FINITE_MZV_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <mzvkit/indices.hpp>
#include <mzvkit/rational.hpp>

namespace mzvkit
{

// Element of Z/p^n with the factored modulus kept alongside.
class Residue
{
public:
    Residue(std::int64_t p, int n, std::int64_t value = 0);
    static Residue of(const Rational &q, std::int64_t p, int n);

    std::int64_t prime() const noexcept { return p_; }
    int exponent() const noexcept { return n_; }
    std::uint64_t modulus() const noexcept { return m_; }
    std::uint64_t value() const noexcept { return v_; }

    bool is_unit() const noexcept { return v_ % static_cast<std::uint64_t>(p_) != 0; }
    Residue inverse() const;
    Residue pow(unsigned e) const;

    Residue &operator+=(const Residue &o);
    Residue &operator-=(const Residue &o);
    Residue &operator*=(const Residue &o);
    friend Residue operator+(Residue a, const Residue &b) { return a += b; }
    friend Residue operator-(Residue a, const Residue &b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue &b) { return a *= b; }
    Residue operator-() const;
    friend bool operator==(const Residue &a, const Residue &b)
    {
        return a.m_ == b.m_ && a.v_ == b.v_;
    }

private:
    void check(const Residue &o) const;

    std::int64_t p_;
    int n_;
    std::uint64_t m_;
    std::uint64_t v_;
};

std::string to_string(const Residue &r);

bool is_prime(std::int64_t n);
// Primes in [lo, hi] by a sieve.
std::vector<int> primes_between(int lo, int hi);

// sum over ap < n_1 < ... < n_r < (a+1)p of 1/(n_1^{k_1} ... n_r^{k_r}) mod p^n
Residue finite_mzv(const Index &k, int p, int n, int a = 0);
Residue finite_mzv_star(const Index &k, int p, int n, int a = 0);
Residue finite_value(const IndexCombination &c, int p, int n, int a = 0);

struct ScanEntry
{
    int prime;
    std::string params;
    bool pass;
};

struct ScanReport
{
    std::string relation;
    int p_min = 5;
    int p_max = 5;
    int n = 1;
    std::vector<ScanEntry> entries;
    std::vector<ScanEntry> counterexamples;

    bool all_pass() const noexcept { return counterexamples.empty(); }
    std::size_t passed() const noexcept { return entries.size() - counterexamples.size(); }
};

// Header, one row per entry, then "<total>,<passed>,<failed>".
void write_csv(std::ostream &out, const ScanReport &r);

// workers <= 0 uses the hardware concurrency.
ScanReport scan_stuffle(const std::vector<std::pair<Index, Index>> &pairs, int p_max, int n, int workers = 0);
// finite_mzv(k;a) against sum_m b(k;m) finite_mzv(k (+) m) (-ap)^{wt m}, wt m < n
ScanReport scan_shift_expansion(const Index &k, int a, int p_max, int n, int workers = 0);
ScanReport scan_wolstenholme(int p_max, int workers = 0);

} // namespace mzvkit

#endif
