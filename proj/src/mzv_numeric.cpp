#include <mzvkit/mzv_numeric.hpp>

#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include <mzvkit/errors.hpp>
#include <mzvkit/word.hpp>

namespace mzvkit
{

namespace
{

void check_prec(int prec)
{
    if (prec < min_prec || prec > max_prec) {
        throw RangeError("mzv-numeric", "precision " + std::to_string(prec) + " outside [" + std::to_string(min_prec)
                                            + ", " + std::to_string(max_prec) + "]");
    }
}

// Smallest N >= 6r with 2.5 * 2^{-(N+1)} (1 + ln(N+1))^{r-1} < 10^{-(prec+5)}.
int terms_needed(int depth, int prec)
{
    const double target = -(prec + 5) * std::log(10.0);
    for (int n = std::max(6 * depth, 10);; ++n) {
        const double bound = std::log(2.5) - (n + 1) * std::log(2.0) + (depth - 1) * std::log(1.0 + std::log(n + 1.0));
        if (bound < target) {
            return n;
        }
    }
}

std::mutex li_mutex;
std::map<std::pair<Index, int>, Real> li_memo;

std::shared_mutex mzv_mutex;
std::map<std::pair<Index, int>, Real> mzv_memo;

// I(0; u; 1/2) for a word u that is empty or starts with e1.
Real integral_to_half(const Word &u, int prec)
{
    if (u.empty()) {
        return Real(1);
    }
    const Real v = li_half(index_of_word(u), prec);
    return u.count(Letter::E1) % 2 ? Real(-v) : v;
}

Real compute_mzv(const Index &k, int prec)
{
    // Split the path 0 -> 1 at 1/2. The half [1/2, 1] is mapped back onto
    // [0, 1/2] by t -> 1 - t, which swaps the letters and reverses the word.
    const Word w = word_of_index(k);
    const int n = w.length();
    Real total = 0;
    for (int j = 0; j <= n; ++j) {
        const Word head = w.sub(0, j);
        const Word tail = w.sub(j, n);
        const Real left = integral_to_half(head, prec);
        const Real right = integral_to_half(tail.swapped().reversed(), prec);
        total += (tail.length() % 2 ? Real(-left * right) : Real(left * right));
    }
    // Z(e_k) = (-1)^dep zeta(k)
    return k.depth() % 2 ? Real(-total) : total;
}

} // namespace

Real li_half(const Index &k, int prec)
{
    {
        std::lock_guard lock(li_mutex);
        if (auto it = li_memo.find({k, prec}); it != li_memo.end()) {
            return it->second;
        }
    }
    const int r = k.depth();
    const int N = terms_needed(r, prec);
    // level[n] = sum over 0 < n_1 < ... < n_j = n of prod n_i^{-k_i}
    std::vector<Real> level(static_cast<std::size_t>(N + 1), Real(0));
    for (int n = 1; n <= N; ++n) {
        level[static_cast<std::size_t>(n)] = 1 / boost::multiprecision::pow(Real(n), k[0]);
    }
    for (int j = 1; j < r; ++j) {
        std::vector<Real> next(static_cast<std::size_t>(N + 1), Real(0));
        Real prefix = 0;
        for (int n = 1; n <= N; ++n) {
            next[static_cast<std::size_t>(n)] = prefix / boost::multiprecision::pow(Real(n), k[static_cast<std::size_t>(j)]);
            prefix += level[static_cast<std::size_t>(n)];
        }
        level = std::move(next);
    }
    Real sum = 0;
    Real half_power = 1;
    for (int n = 1; n <= N; ++n) {
        half_power /= 2;
        sum += level[static_cast<std::size_t>(n)] * half_power;
    }
    std::lock_guard lock(li_mutex);
    li_memo.emplace(std::make_pair(k, prec), sum);
    return sum;
}

PrecisionReal mzv(const Index &k, int prec)
{
    check_prec(prec);
    if (!k.admissible()) {
        throw DomainError("mzv-numeric", "zeta" + to_string(k) + " diverges: index is not admissible");
    }
    const Real err = tolerance_for(prec);
    if (k.empty()) {
        return {Real(1), Real(0)};
    }
    {
        std::shared_lock lock(mzv_mutex);
        if (auto it = mzv_memo.find({k, prec}); it != mzv_memo.end()) {
            return {it->second, err};
        }
    }
    Real value;
    if (auto hit = ValueCache::global().lookup_at_least(k, prec)) {
        value = Real(hit->second);
    } else {
        value = compute_mzv(k, prec);
        ValueCache::global().store(k, prec, to_decimal(value, prec + 5));
    }
    std::unique_lock lock(mzv_mutex);
    mzv_memo.emplace(std::make_pair(k, prec), value);
    return {value, err};
}

PrecisionComplex eval_zeta_poly(const ZetaPoly &p, const Bindings &values, int prec)
{
    check_prec(prec);
    std::map<Index, Real> zs;
    for (const Index &k : p.symbols()) {
        zs.emplace(k, mzv(k, prec).value);
    }
    Complex total;
    Real err = 0;
    const Real unit_err = tolerance_for(prec);
    for (const auto &[m, c] : p.terms()) {
        Complex term(c);
        Real size = abs(term);
        int factors = 0;
        for (const auto &[k, e] : m.z) {
            for (int i = 0; i < e; ++i) {
                term *= Complex(zs.at(k));
                size *= std::max(Real(1), zs.at(k));
                ++factors;
            }
        }
        for (int v = 0; v < 3; ++v) {
            if (m.t[v] == 0) {
                continue;
            }
            auto it = values.find(static_cast<TVar>(v));
            if (it == values.end()) {
                throw BindingError("mzv-numeric",
                                   std::string("no value bound to ") + tvar_name(static_cast<TVar>(v)));
            }
            for (int i = 0; i < m.t[v]; ++i) {
                term *= it->second;
                size *= std::max(Real(1), abs(it->second));
            }
        }
        total += term;
        err += size * factors * unit_err;
    }
    return {total, err};
}

Real euler_check(int k, int prec)
{
    const Real z2 = mzv(Index{2}, prec).value;
    if (k == 2) {
        return boost::multiprecision::abs(mzv(Index{4}, prec).value - to_real(Rational(2, 5)) * z2 * z2);
    }
    if (k == 3) {
        return boost::multiprecision::abs(mzv(Index{6}, prec).value - to_real(Rational(8, 35)) * z2 * z2 * z2);
    }
    throw DomainError("mzv-numeric", "euler_check covers k = 2 and k = 3 only");
}

bool ValueCache::KeyLess::operator()(const std::pair<Index, int> &a, const std::pair<Index, int> &b) const
{
    const int wa = a.first.weight();
    const int wb = b.first.weight();
    if (wa != wb) {
        return wa < wb;
    }
    if (a.first != b.first) {
        return a.first < b.first;
    }
    return a.second < b.second;
}

ValueCache &ValueCache::global()
{
    static ValueCache cache;
    return cache;
}

std::optional<std::string> ValueCache::lookup(const Index &k, int prec) const
{
    std::shared_lock lock(mutex_);
    auto it = values_.find({k, prec});
    if (it == values_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::pair<int, std::string>> ValueCache::lookup_at_least(const Index &k, int prec) const
{
    std::shared_lock lock(mutex_);
    auto it = values_.lower_bound({k, prec});
    if (it == values_.end() || it->first.first != k) {
        return std::nullopt;
    }
    return std::make_pair(it->first.second, it->second);
}

void ValueCache::store(const Index &k, int prec, const std::string &digits)
{
    std::unique_lock lock(mutex_);
    values_[{k, prec}] = digits;
}

std::size_t ValueCache::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

void ValueCache::clear()
{
    std::unique_lock lock(mutex_);
    values_.clear();
}

void ValueCache::read(std::istream &in)
{
    Map parsed;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        auto fail = [&](const std::string &why) {
            throw ParseError("mzv-numeric", "cache line " + std::to_string(number) + ": " + why, number);
        };
        if (line.rfind("k=", 0) != 0) {
            fail("expected 'k=' prefix");
        }
        const auto p1 = line.find(";prec=");
        const auto p2 = line.find(";value=");
        if (p1 == std::string::npos || p2 == std::string::npos || p2 < p1) {
            fail("expected 'k=<parts>;prec=<D>;value=<digits>'");
        }
        Index k;
        int prec = 0;
        try {
            k = parse_index("(" + line.substr(2, p1 - 2) + ")");
            std::size_t used = 0;
            const std::string ptext = line.substr(p1 + 6, p2 - p1 - 6);
            prec = std::stoi(ptext, &used);
            if (used != ptext.size()) {
                fail("bad precision '" + ptext + "'");
            }
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &) {
            fail("malformed key");
        }
        const std::string value = line.substr(p2 + 7);
        if (value.empty() || value.find_first_not_of("-+.0123456789eE") != std::string::npos) {
            fail("bad value '" + value + "'");
        }
        parsed[{k, prec}] = value;
    }
    std::unique_lock lock(mutex_);
    for (auto &[key, value] : parsed) {
        values_[key] = std::move(value);
    }
}

void ValueCache::write(std::ostream &out) const
{
    std::shared_lock lock(mutex_);
    for (const auto &[key, value] : values_) {
        std::string parts;
        for (int x : key.first.parts()) {
            parts += (parts.empty() ? "" : ",") + std::to_string(x);
        }
        out << "k=" << parts << ";prec=" << key.second << ";value=" << value << '\n';
    }
}

void ValueCache::load(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        return;
    }
    read(in);
}

void ValueCache::save(const std::string &path) const
{
    std::ofstream out(path);
    if (!out) {
        throw Error("mzv-numeric", "cannot write cache file " + path);
    }
    write(out);
}

} // namespace mzvkit
