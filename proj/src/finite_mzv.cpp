#include <mzvkit/finite_mzv.hpp>

#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include <mzvkit/errors.hpp>
#include <mzvkit/word_algebra.hpp>

namespace mzvkit
{

namespace
{

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t reduce(std::int64_t x, std::uint64_t m)
{
    const std::int64_t r = x % static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

} // namespace

Residue::Residue(std::int64_t p, int n, std::int64_t value) : p_(p), n_(n), m_(1)
{
    if (n < 1) {
        throw RangeError("finite-mzv", "modulus exponent must be at least 1");
    }
    if (!is_prime(p)) {
        throw DomainError("finite-mzv", std::to_string(p) + " is not prime");
    }
    for (int i = 0; i < n; ++i) {
        if (m_ > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p)) {
            throw RangeError("finite-mzv", "modulus " + std::to_string(p) + "^" + std::to_string(n) + " too large");
        }
        m_ *= static_cast<std::uint64_t>(p);
    }
    v_ = reduce(value, m_);
}

Residue Residue::of(const Rational &q, std::int64_t p, int n)
{
    Residue r(p, n);
    const Integer m(static_cast<unsigned long>(r.m_));
    const Integer num = ((Integer(q.get_num()) % m) + m) % m;
    const Integer den = ((Integer(q.get_den()) % m) + m) % m;
    Residue a(p, n, num.get_si());
    const Residue b(p, n, den.get_si());
    if (!b.is_unit()) {
        throw DomainError("finite-mzv", "denominator of " + to_string(q) + " is divisible by " + std::to_string(p));
    }
    return a * b.inverse();
}

void Residue::check(const Residue &o) const
{
    if (o.m_ != m_) {
        throw RingError("finite-mzv", "residues modulo " + std::to_string(m_) + " and " + std::to_string(o.m_));
    }
}

Residue Residue::inverse() const
{
    if (!is_unit()) {
        throw DomainError("finite-mzv", std::to_string(v_) + " is not invertible modulo " + std::to_string(m_));
    }
    // extended gcd on (v, m)
    std::int64_t r0 = static_cast<std::int64_t>(m_), r1 = static_cast<std::int64_t>(v_);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    Residue r(*this);
    r.v_ = reduce(s0, m_);
    return r;
}

Residue Residue::pow(unsigned e) const
{
    Residue r(*this);
    r.v_ = 1 % m_;
    Residue b(*this);
    for (; e; e >>= 1) {
        if (e & 1u) {
            r *= b;
        }
        b *= b;
    }
    return r;
}

Residue &Residue::operator+=(const Residue &o)
{
    check(o);
    v_ += o.v_;
    if (v_ >= m_) {
        v_ -= m_;
    }
    return *this;
}

Residue &Residue::operator-=(const Residue &o)
{
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + m_ - o.v_;
    return *this;
}

Residue &Residue::operator*=(const Residue &o)
{
    check(o);
    v_ = mulmod(v_, o.v_, m_);
    return *this;
}

Residue Residue::operator-() const
{
    Residue r(*this);
    r.v_ = v_ == 0 ? 0 : m_ - v_;
    return r;
}

std::string to_string(const Residue &r)
{
    return std::to_string(r.value()) + " mod " + std::to_string(r.prime()) + "^" + std::to_string(r.exponent());
}

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<int> primes_between(int lo, int hi)
{
    std::vector<int> out;
    if (hi < 2) {
        return out;
    }
    std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
    for (int i = 2; i <= hi; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        if (i >= lo) {
            out.push_back(i);
        }
        for (std::int64_t j = std::int64_t{i} * i; j <= hi; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return out;
}

Residue finite_mzv(const Index &k, int p, int n, int a)
{
    if (a < 0) {
        throw RangeError("finite-mzv", "shift a must be non-negative");
    }
    if (!is_prime(p)) {
        throw DomainError("finite-mzv", std::to_string(p) + " is not prime");
    }
    if (p <= n) {
        throw DomainError("finite-mzv", "prime " + std::to_string(p) + " must exceed the exponent " + std::to_string(n));
    }
    const Residue one(p, n, 1);
    if (k.empty()) {
        return one;
    }
    const std::int64_t base = std::int64_t{a} * p;
    // x[j] = 1/(ap + j), j = 1..p-1
    std::vector<Residue> x;
    x.reserve(static_cast<std::size_t>(p - 1));
    for (int j = 1; j < p; ++j) {
        x.push_back(Residue(p, n, base + j).inverse());
    }
    // level[j] = sum over chains ending at j of the first i factors
    std::vector<Residue> level;
    level.reserve(x.size());
    for (const Residue &xi : x) {
        level.push_back(xi.pow(static_cast<unsigned>(k[0])));
    }
    for (int i = 1; i < k.depth(); ++i) {
        Residue prefix(p, n);
        for (std::size_t j = 0; j < x.size(); ++j) {
            const Residue here = level[j];
            level[j] = prefix * x[j].pow(static_cast<unsigned>(k[static_cast<std::size_t>(i)]));
            prefix += here;
        }
    }
    Residue sum(p, n);
    for (const Residue &v : level) {
        sum += v;
    }
    return sum;
}

Residue finite_mzv_star(const Index &k, int p, int n, int a)
{
    Residue sum(p, n);
    for (const Index &l : coarsenings(k)) {
        sum += finite_mzv(l, p, n, a);
    }
    return sum;
}

Residue finite_value(const IndexCombination &c, int p, int n, int a)
{
    Residue sum(p, n);
    for (const auto &[k, q] : c.terms()) {
        sum += Residue::of(q, p, n) * finite_mzv(k, p, n, a);
    }
    return sum;
}

namespace
{

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

// Runs check(p) for each prime on a pool of workers; rows come back in prime order.
template <class F>
ScanReport run_scan(std::string relation, int p_max, int n, int workers, F check)
{
    if (p_max < 5) {
        throw RangeError("finite-mzv", "scans start at p = 5; p_max " + std::to_string(p_max) + " is too small");
    }
    ScanReport report;
    report.relation = std::move(relation);
    report.p_max = p_max;
    report.n = n;
    const std::vector<int> primes = primes_between(5, p_max);
    std::vector<std::vector<ScanEntry>> rows(primes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
            try {
                rows[i] = check(primes[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                failure = std::current_exception();
                next = primes.size();
            }
        }
    };
    const unsigned count = workers > 0 ? static_cast<unsigned>(workers) : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    for (auto &r : rows) {
        for (auto &e : r) {
            if (!e.pass) {
                report.counterexamples.push_back(e);
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

} // namespace

void write_csv(std::ostream &out, const ScanReport &r)
{
    out << "prime,relation,params,pass\n";
    for (const ScanEntry &e : r.entries) {
        out << e.prime << ',' << csv_field(r.relation) << ',' << csv_field(e.params) << ','
            << (e.pass ? "true" : "false") << '\n';
    }
    out << r.entries.size() << ',' << r.passed() << ',' << r.counterexamples.size() << '\n';
}

ScanReport scan_stuffle(const std::vector<std::pair<Index, Index>> &pairs, int p_max, int n, int workers)
{
    std::vector<IndexCombination> products;
    for (const auto &[k, l] : pairs) {
        products.push_back(index_harmonic(k, l));
    }
    return run_scan("stuffle", p_max, n, workers, [&](int p) {
        std::vector<ScanEntry> out;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto &[k, l] = pairs[i];
            const bool ok = finite_mzv(k, p, n) * finite_mzv(l, p, n) == finite_value(products[i], p, n);
            out.push_back({p, "k=" + to_string(k) + " l=" + to_string(l) + " n=" + std::to_string(n), ok});
        }
        return out;
    });
}

ScanReport scan_shift_expansion(const Index &k, int a, int p_max, int n, int workers)
{
    if (a < 1) {
        throw RangeError("finite-mzv", "shift expansion needs a >= 1");
    }
    return run_scan("shift", p_max, n, workers, [&](int p) {
        Residue rhs(p, n);
        const Residue step = -Residue(p, n, std::int64_t{a} * p);
        for (int w = 0; w < n; ++w) {
            const Residue scale = step.pow(static_cast<unsigned>(w));
            for (const ExponentTuple &m : exponent_tuples(k.depth(), w)) {
                rhs += Residue::of(Rational(b_coeff(k, m)), p, n) * finite_mzv(oplus(k, m), p, n) * scale;
            }
        }
        const bool ok = finite_mzv(k, p, n, a) == rhs;
        return std::vector<ScanEntry>{
            {p, "k=" + to_string(k) + " a=" + std::to_string(a) + " n=" + std::to_string(n), ok}};
    });
}

ScanReport scan_wolstenholme(int p_max, int workers)
{
    return run_scan("wolstenholme", p_max, 2, workers, [](int p) {
        const bool ok = finite_mzv(Index{1}, p, 2).value() == 0;
        return std::vector<ScanEntry>{{p, "k=(1) n=2", ok}};
    });
}

} // namespace mzvkit
