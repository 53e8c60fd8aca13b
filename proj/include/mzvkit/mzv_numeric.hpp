#ifndef MZVKIT_MZV_NUMERIC_HPP
#define MZVKIT_MZV_NUMERIC_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>

#include <mzvkit/indices.hpp>
#include <mzvkit/numeric.hpp>
#include <mzvkit/zeta_poly.hpp>

namespace mzvkit
{

using Bindings = std::map<TVar, Complex>;

// zeta(k) to within 10^{-prec}; DomainError for non-admissible k,
// RangeError for prec outside [min_prec, max_prec].
PrecisionReal mzv(const Index &k, int prec);

// Li_k(1/2) = sum_{0<n_1<...<n_r} 2^{-n_r} / (n_1^{k_1} ... n_r^{k_r}), to 10^{-(prec+5)}.
Real li_half(const Index &k, int prec);

PrecisionComplex eval_zeta_poly(const ZetaPoly &p, const Bindings &values, int prec);

// zeta(4) - 2/5 zeta(2)^2 (k = 2) or zeta(6) - 8/35 zeta(2)^3 (k = 3).
Real euler_check(int k, int prec);

// Decimal strings of computed values, keyed by (index, precision).
// Readers share a lock; writers are serialized.
class ValueCache
{
public:
    struct KeyLess
    {
        bool operator()(const std::pair<Index, int> &a, const std::pair<Index, int> &b) const;
    };
    using Map = std::map<std::pair<Index, int>, std::string, KeyLess>;

    static ValueCache &global();

    std::optional<std::string> lookup(const Index &k, int prec) const;
    // Any stored value of at least the requested precision.
    std::optional<std::pair<int, std::string>> lookup_at_least(const Index &k, int prec) const;
    void store(const Index &k, int prec, const std::string &digits);
    std::size_t size() const;
    void clear();

    void read(std::istream &in);
    void write(std::ostream &out) const;
    void load(const std::string &path);
    void save(const std::string &path) const;

private:
    mutable std::shared_mutex mutex_;
    Map values_;
};

} // namespace mzvkit

#endif
