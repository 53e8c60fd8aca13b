// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <mzvkit/associator.hpp>
#include <mzvkit/finite_mzv.hpp>
#include <mzvkit/mzv_numeric.hpp>
#include <mzvkit/regularization.hpp>
#include <mzvkit/stadic.hpp>
#include <mzvkit/word_algebra.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace mzvkit;

namespace
{

constexpr int prec = 40;
const Real tol = tolerance_for(prec);

struct Tally
{
    int checks = 0;
    int failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string &what)
    {
        ++checks;
        if (!ok) {
            ++failed;
            if (first_failure.empty()) {
                first_failure = what;
            }
            std::cerr << "  failed: " << what << '\n';
        }
    }

    void residual(const Real &r, const std::string &what, const Real &bound = tol)
    {
        expect(r < bound, what + " residual=" + to_sci(r));
    }
};

bool same(const SeriesPoly &a, const SeriesPoly &b)
{
    return (a - b).empty();
}

std::vector<Word> h1_words(int length)
{
    if (length == 0) {
        return {Word()};
    }
    std::vector<Word> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (length - 1)); ++bits) {
        out.push_back(Word::from_bits(bits | (std::uint64_t{1} << (length - 1)), length));
    }
    return out;
}

void exact_suite(Tally &t)
{
    for (const Index &k : gen::all_indices(6)) {
        t.expect(antipode_convolution(embed(k)).empty(), "antipode axiom " + to_string(k));
    }

    std::mt19937 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const QPoly a = gen::random_h1(rng, 4), b = gen::random_h1(rng, 4);
        const QPoly x = gen::random_h1(rng, 3), y = gen::random_h1(rng, 3), z = gen::random_h1(rng, 2);
        t.expect(harmonic(a, b) == harmonic(b, a), "harmonic commutativity");
        t.expect(shuffle(a, b) == shuffle(b, a), "shuffle commutativity");
        t.expect(harmonic(harmonic(x, y), z) == harmonic(x, harmonic(y, z)), "harmonic associativity");
        t.expect(shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z)), "shuffle associativity");
    }

    const auto ks = gen::all_indices(5);
    for (const Index &k : ks) {
        for (const Index &l : ks) {
            if (k.weight() + l.weight() <= 6) {
                const QPoly u = embed(k), v = embed(l);
                t.expect(same(sigma_t(harmonic(u, v), 3), harmonic(sigma_t(u, 3), sigma_t(v, 3))),
                         "sigma_t " + to_string(k) + " " + to_string(l));
            }
        }
    }

    for (Product p : {Product::Harmonic, Product::Shuffle}) {
        for (int len = 0; len <= 7; ++len) {
            for (const Word &w : h1_words(len)) {
                const QPoly q(w, Rational(1));
                t.expect(regularize(q, p).reconstruct() == q, "reconstruction " + to_string(w));
            }
        }
    }

    const Orders o{2, 2};
    const SeriesPoly inv_t = geometric(+1, Letter::E0, Var::T, o);
    const SeriesPoly inv_s = geometric(-1, Letter::E0, Var::S, o);
    const SeriesPoly inv_s_plus = geometric(+1, Letter::E0, Var::S, o);
    const SeriesPoly inv_t_minus = geometric(-1, Letter::E0, Var::T, o);
    const SeriesPoly e1 = lift(QPoly(Word::letter(Letter::E1), Rational(1)), o);
    for (int n = 0; n <= 4; ++n) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const Word w = Word::from_bits(bits, n);
            SeriesPoly lhs;
            for (int v = 0; v <= n; ++v) {
                const SeriesPoly term = shuffle(inv_t * e1 * lift(QPoly(w.sub(0, v), Rational(1)), o),
                                                inv_s * e1 * lift(QPoly(w.sub(v, n).reversed(), Rational(1)), o));
                lhs = v % 2 ? lhs - term : lhs + term;
            }
            const SeriesPoly a =
                shuffle(inv_t, inv_s * e1 * lift(QPoly(w.reversed(), Rational(1)), o) * e1 * inv_t_minus);
            const SeriesPoly b = shuffle(inv_s, inv_t * e1 * lift(QPoly(w, Rational(1)), o) * e1 * inv_s_plus);
            t.expect(same(lhs, n % 2 ? a - b : a + b), "telescoping " + to_string(w));
        }
    }

    for (Product p : {Product::Harmonic, Product::Shuffle}) {
        for (const Index &k : gen::all_indices(6)) {
            t.expect(shifted_mzv(k, p, 3) == shifted_mzv_from_words(k, p, 3), "shifted definition " + to_string(k));
        }
    }
}

void reg_theorem(Tally &t)
{
    for (const Index &k : gen::all_indices(6)) {
        t.residual(check_reg_theorem(k, prec), "regularization theorem " + to_string(k));
    }
}

void harmonic_relation(Tally &t)
{
    const auto ks = gen::all_indices(4);
    for (const Index &k : ks) {
        for (const Index &l : ks) {
            if (k.weight() + l.weight() <= 5) {
                t.residual(check_harmonic(k, l, Orders{2, 2}, prec), "harmonic " + to_string(k) + " " + to_string(l));
            }
        }
    }
}

void shuffle_relation(Tally &t)
{
    for (const auto &[l, k] : std::vector<std::pair<Index, Index>>{
             {Index{1}, Index{2}}, {Index{2}, Index{1}}, {Index{1}, Index{1, 2}}}) {
        t.residual(check_shuffle(l, k, Orders{2, 2}, prec), "shuffle " + to_string(l) + " " + to_string(k));
    }
}

void cyclic_sums(Tally &t)
{
    for (const Index &k : {Index{2}, Index{1, 2}, Index{2, 1}, Index{3}}) {
        t.residual(check_classical_csf(k, prec), "classical csf " + to_string(k));
    }
    const Real star12 = mzv(Index{1, 2}, prec).value + mzv(Index{3}, prec).value;
    t.residual(abs(star12 - 2 * oracle::apery()), "zeta*(1,2) = 2 zeta(3)", Real("1e-30"));
    for (const Index &k : {Index{2}, Index{1, 2}, Index{2, 1}, Index{3}, Index{2, 2}}) {
        t.residual(check_shifted_csf(k, 2, prec), "shifted csf " + to_string(k));
    }
    for (const Index &k : {Index{2}, Index{1, 2}, Index{2, 1}, Index{2, 2}}) {
        t.residual(check_csf_star(k, Orders{2, 2}, prec), "star csf " + to_string(k));
        t.residual(check_csf_nonstar(k, Orders{2, 2}, prec), "non-star csf " + to_string(k));
        for (const Rational &tau : {Rational(0), Rational(1, 2), Rational(1)}) {
            t.residual(check_csf_tau(k, tau, Orders{2, 2}, prec), "tau csf " + to_string(k) + " " + to_string(tau));
        }
    }
}

void associator_suite(Tally &t)
{
    t.residual(check_two_cycle(6, prec), "two-cycle D=6");
    t.residual(check_three_cycle(6, prec), "three-cycle D=6");
    const Complex T(sample_T());
    for (int D = 1; D <= 5; ++D) {
        const std::string d = " D=" + std::to_string(D);
        for (Product p : {Product::Harmonic, Product::Shuffle}) {
            t.residual(check_t_part(p, T, D, prec), std::string("t-part ") + product_name(p) + d);
            t.residual(check_ad_independence(p, Complex(sample_T1()), Complex(sample_T2()), D, prec),
                       std::string("ad independence ") + product_name(p) + d);
        }
        t.residual(check_gamma_factor(T, D, prec), "gamma factor" + d);
        t.residual(check_independence_factor(T, D, prec), "independence factor" + d);
        t.residual(check_duality_assoc(D, prec), "associator duality" + d);
    }
}

void refined_duality(Tally &t)
{
    t.expect(hoffman_dual(Index{2}) == Index{1, 1}, "dual of (2)");
    t.expect(hoffman_dual(Index{1, 2}) == Index{2, 1}, "dual of (1,2)");
    t.expect(hoffman_dual(Index{3}) == Index{1, 1, 1}, "dual of (3)");
    for (const Index &k : {Index{2}, Index{3}, Index{1, 2}}) {
        t.residual(check_refined_duality(k, Orders{1, 1}, prec), "refined duality " + to_string(k));
    }
}

void cross_routes(Tally &t)
{
    for (const Index &k : gen::all_indices(4)) {
        for (Product p : {Product::Harmonic, Product::Shuffle}) {
            t.residual(check_smzv_via_assoc(k, p, Orders{1, 1}, prec),
                       std::string("pairing route ") + product_name(p) + " " + to_string(k));
        }
        t.residual(check_rsmzv_routes(k, Orders{1, 1}, prec), "RSMZV routes " + to_string(k));
    }
}

void finite_suite(Tally &t)
{
    std::vector<std::pair<Index, Index>> pairs;
    const std::vector<Index> base{Index{1}, Index{2}, Index{1, 1}};
    for (const Index &x : base) {
        for (const Index &y : base) {
            pairs.emplace_back(x, y);
        }
    }
    for (int n = 1; n <= 3; ++n) {
        const ScanReport r = scan_stuffle(pairs, 500, n);
        t.expect(r.all_pass() && !r.entries.empty(), "stuffle scan n=" + std::to_string(n));
    }
    for (const Index &k : {Index{1}, Index{2}, Index{1, 2}}) {
        for (int a : {1, 2}) {
            const ScanReport r = scan_shift_expansion(k, a, 300, 2);
            t.expect(r.all_pass() && !r.entries.empty(), "shift scan " + to_string(k) + " a=" + std::to_string(a));
        }
    }
    const auto start = std::chrono::steady_clock::now();
    const ScanReport w = scan_wolstenholme(10000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.expect(w.all_pass() && w.entries.size() == primes_between(5, 10000).size(), "Wolstenholme scan");
    t.expect(secs < 60, "Wolstenholme scan time " + std::to_string(secs) + " s");
    for (int p : primes_between(2, 50)) {
        for (const Index &k : gen::all_indices(5)) {
            for (int n = 1; n <= 2; ++n) {
                if (p <= n) {
                    continue;
                }
                t.expect(finite_mzv(k, p, n).value() == oracle::finite_brute(k, p, n, 0),
                         "kernel vs nested loops " + to_string(k) + " p=" + std::to_string(p));
            }
        }
    }
}

void anchors(Tally &t)
{
    const Real digits30("1e-30");
    const Real pi2 = oracle::pi_power(2);
    t.residual(abs(mzv(Index{2}, prec).value - pi2 / 6), "zeta(2) = pi^2/6", digits30);
    t.residual(abs(mzv(Index{1, 2}, prec).value - oracle::apery()), "zeta(1,2) = zeta(3)", digits30);
    t.residual(abs(mzv(Index{1, 3}, prec).value - oracle::pi_power(4) / 360), "zeta(1,3) = pi^4/360", digits30);
    const Real z2 = oracle::zeta(2);
    t.residual(abs(mzv(Index{4}, prec).value - Real(2) / 5 * z2 * z2), "zeta(4) = 2/5 zeta(2)^2", digits30);
}

} // namespace

int main()
{
    struct Criterion
    {
        int number;
        const char *title;
        std::function<void(Tally &)> run;
        double time_limit;
    };
    const std::vector<Criterion> criteria{
        {1, "exact symbolic suite", exact_suite, 180},
        {2, "regularization theorem, weight <= 6", reg_theorem, 120},
        {3, "(s,t)-adic harmonic relation", harmonic_relation, 0},
        {4, "(s,t)-adic shuffle relation", shuffle_relation, 0},
        {5, "cyclic sum formulas", cyclic_sums, 0},
        {6, "associator identities", associator_suite, 300},
        {7, "refined duality", refined_duality, 0},
        {8, "cross-route consistency", cross_routes, 0},
        {9, "finite suite", finite_suite, 0},
        {10, "numeric anchors", anchors, 0},
    };
    bool all = true;
    for (const Criterion &c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(t);
        } catch (const std::exception &e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool slow = c.time_limit > 0 && secs > c.time_limit;
        const bool ok = error.empty() && t.failed == 0 && t.checks > 0 && !slow;
        all = all && ok;
        std::cout << "criterion " << c.number << " (" << c.title << "): " << (ok ? "PASS" : "FAIL") << " ["
                  << t.checks - t.failed << "/" << t.checks << " checks, " << std::fixed;
        std::cout.precision(1);
        std::cout << secs << " s";
        if (!error.empty()) {
            std::cout << ", error: " << error;
        } else if (!t.first_failure.empty()) {
            std::cout << ", first failure: " << t.first_failure;
        } else if (slow) {
            std::cout << ", over the " << c.time_limit << " s budget";
        }
        std::cout << "]" << std::endl;
    }
    return all ? 0 : 1;
}
