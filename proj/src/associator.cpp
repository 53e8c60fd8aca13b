#include <mzvkit/associator.hpp>

#include <map>
#include <mutex>
#include <tuple>

#include <mzvkit/errors.hpp>
#include <mzvkit/mzv_numeric.hpp>
#include <mzvkit/regularization.hpp>
#include <mzvkit/stadic.hpp>

namespace mzvkit
{

NcSeries::NcSeries(int degree) : degree_(degree)
{
    if (degree < 0) {
        throw DomainError("associator", "negative truncation degree");
    }
    c_.resize((std::size_t{1} << (degree + 1)) - 1);
}

NcSeries NcSeries::one(int degree)
{
    NcSeries r(degree);
    r.c_[0] = Complex(1);
    return r;
}

NcSeries NcSeries::linear(const Complex &c0, const Complex &c1, int degree)
{
    NcSeries r(degree);
    if (degree >= 1) {
        r.coeff(Word::letter(Letter::E0)) = c0;
        r.coeff(Word::letter(Letter::E1)) = c1;
    }
    return r;
}

const Complex &NcSeries::coeff(const Word &w) const
{
    if (w.length() > degree_) {
        throw TruncationError("associator", "word " + to_string(w) + " exceeds degree " + std::to_string(degree_));
    }
    return c_[slot(w)];
}

Complex &NcSeries::coeff(const Word &w)
{
    if (w.length() > degree_) {
        throw TruncationError("associator", "word " + to_string(w) + " exceeds degree " + std::to_string(degree_));
    }
    return c_[slot(w)];
}

void NcSeries::check(const NcSeries &o) const
{
    if (o.degree_ != degree_) {
        throw RingError("associator", "series truncated at degrees " + std::to_string(degree_) + " and "
                                          + std::to_string(o.degree_));
    }
}

NcSeries &NcSeries::operator+=(const NcSeries &o)
{
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

NcSeries &NcSeries::operator-=(const NcSeries &o)
{
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

NcSeries operator*(const NcSeries &a, const NcSeries &b)
{
    a.check(b);
    const int D = a.degree_;
    NcSeries r(D);
    for (int la = 0; la <= D; ++la) {
        for (std::uint64_t ua = 0; ua < (std::uint64_t{1} << la); ++ua) {
            const Complex &x = a.c_[(std::size_t{1} << la) - 1 + ua];
            if (is_zero(x)) {
                continue;
            }
            for (int lb = 0; la + lb <= D; ++lb) {
                for (std::uint64_t ub = 0; ub < (std::uint64_t{1} << lb); ++ub) {
                    const Complex &y = b.c_[(std::size_t{1} << lb) - 1 + ub];
                    if (is_zero(y)) {
                        continue;
                    }
                    r.c_[(std::size_t{1} << (la + lb)) - 1 + ((ua << lb) | ub)] += x * y;
                }
            }
        }
    }
    return r;
}

NcSeries NcSeries::scaled(const Complex &c) const
{
    NcSeries r(*this);
    for (auto &x : r.c_) {
        x *= c;
    }
    return r;
}

Real NcSeries::max_abs() const
{
    Real m = 0;
    for (const auto &x : c_) {
        m = std::max(m, abs(x));
    }
    return m;
}

NcSeries nc_exp_letter(const Complex &c0, const Complex &c1, int degree)
{
    const NcSeries x = NcSeries::linear(c0, c1, degree);
    NcSeries term = NcSeries::one(degree);
    NcSeries sum = term;
    for (int n = 1; n <= degree; ++n) {
        term = (term * x).scaled(Complex(Rational(1, n)));
        sum += term;
    }
    return sum;
}

NcSeries nc_subst(const NcSeries &f, const std::array<Complex, 2> &image0, const std::array<Complex, 2> &image1)
{
    NcSeries r(f.degree());
    for (int len = 0; len <= f.degree(); ++len) {
        const std::size_t n = std::size_t{1} << len;
        std::vector<Complex> v(n);
        for (std::uint64_t bits = 0; bits < n; ++bits) {
            v[bits] = f.coeff(Word::from_bits(bits, len));
        }
        // Apply the letter map position by position.
        for (int b = 0; b < len; ++b) {
            const std::uint64_t bit = std::uint64_t{1} << b;
            for (std::uint64_t i = 0; i < n; ++i) {
                if (i & bit) {
                    continue;
                }
                const Complex x0 = v[i];
                const Complex x1 = v[i | bit];
                v[i] = x0 * image0[0] + x1 * image1[0];
                v[i | bit] = x0 * image0[1] + x1 * image1[1];
            }
        }
        for (std::uint64_t bits = 0; bits < n; ++bits) {
            r.coeff(Word::from_bits(bits, len)) = v[bits];
        }
    }
    return r;
}

NcSeries nc_swap(const NcSeries &f)
{
    NcSeries r(f.degree());
    f.for_each([&](const Word &w, const Complex &c) { r.coeff(w.swapped()) = c; });
    return r;
}

NcSeries nc_eps(const NcSeries &f)
{
    NcSeries r(f.degree());
    f.for_each([&](const Word &w, const Complex &c) { r.coeff(w.reversed()) = w.length() % 2 ? -c : c; });
    return r;
}

NcSeries nc_conj(const NcSeries &f)
{
    NcSeries r(f.degree());
    f.for_each([&](const Word &w, const Complex &c) { r.coeff(w) = conj(c); });
    return r;
}

NcSeries nc_reverse(const NcSeries &f)
{
    NcSeries r(f.degree());
    f.for_each([&](const Word &w, const Complex &c) { r.coeff(w.reversed()) = c; });
    return r;
}

namespace
{

std::mutex phi_mutex;

const Complex &pi_i()
{
    static const Complex v(Real(0), pi());
    return v;
}

// X_inf = -X0 - X1
const std::array<Complex, 2> x_inf{Complex(-1), Complex(-1)};
const std::array<Complex, 2> x_0{Complex(1), Complex(0)};
const std::array<Complex, 2> x_1{Complex(0), Complex(1)};

NcSeries exp_inf(const Complex &c, int D)
{
    return nc_exp_letter(-c, -c, D);
}

void check_budget(int needed, int degree)
{
    if (degree < needed) {
        throw TruncationError("associator", "degree " + std::to_string(degree) + " below the budget "
                                                + std::to_string(needed) + " = wt(k)+2+Ms+Mt");
    }
}

BiSeries<Complex> exp_minus_half_pi_i(Orders o)
{
    // exp(-(s+t) pi i/2) = exp(-s pi i/2) exp(-t pi i/2)
    BiSeries<Complex> es(o);
    BiSeries<Complex> et(o);
    const Complex a = -pi_i() * Complex(Rational(1, 2));
    Complex p(1);
    for (int m = 0; m <= o.s; ++m) {
        es.at(m, 0) = p;
        p = p * a * Complex(Rational(1, m + 1));
    }
    p = Complex(1);
    for (int n = 0; n <= o.t; ++n) {
        et.at(0, n) = p;
        p = p * a * Complex(Rational(1, n + 1));
    }
    return es * et;
}

// (1 + e0 s)^{-1} e_k e1 (1 + e0 t)^{-1}
SeriesPoly flanked_word(const Index &k, Orders o)
{
    const QPoly core(word_of_index(k) * Word::letter(Letter::E1), Rational(1));
    return geometric(+1, Letter::E0, Var::S, o) * lift(core, o) * geometric(+1, Letter::E0, Var::T, o);
}

BiSeries<Complex> to_complex(const BiSeries<Rational> &s)
{
    return s.map([](const Rational &q) { return Complex(q); });
}

} // namespace

NcSeries phi(Product p, const Complex &T, int degree, int prec)
{
    static std::map<std::tuple<int, std::string, int, int>, NcSeries> cache;
    const auto key = std::make_tuple(static_cast<int>(p), to_string(T, 60), degree, prec);
    {
        std::lock_guard lock(phi_mutex);
        if (auto it = cache.find(key); it != cache.end()) {
            return it->second;
        }
    }
    NcSeries r(degree);
    const Bindings at{{TVar::T, T}};
    for (int len = 0; len <= degree; ++len) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            const Word x = Word::from_bits(bits, len);
            // X_{a_n}...X_{a_1} carries Z(e_{a_1}...e_{a_n}).
            const ZetaPoly z = Z_reg_full(QPoly(x.reversed(), Rational(1)), p);
            r.coeff(x) = eval_zeta_poly(z, at, prec).value;
        }
    }
    std::lock_guard lock(phi_mutex);
    return cache.emplace(key, std::move(r)).first->second;
}

NcSeries phi_kz(int degree, int prec)
{
    return phi(Product::Shuffle, Complex(0), degree, prec);
}

NcSeries phi_ad(Product p, const Complex &T1, const Complex &T2, int degree, int prec)
{
    const NcSeries x1 = NcSeries::linear(Complex(0), Complex(1), degree);
    return nc_eps(phi(p, T1, degree, prec)) * x1 * phi(p, T2, degree, prec);
}

NcSeries phi_rs(int degree, int prec)
{
    const NcSeries kz = phi_kz(degree, prec);
    const Complex half = pi_i() * Complex(Rational(1, 2));
    const NcSeries e0 = nc_exp_letter(half, Complex(0), degree);
    const NcSeries e1 = nc_exp_letter(Complex(0), pi_i() * Complex(2), degree);
    return e0 * nc_swap(kz) * e1 * kz * e0;
}

NcSeries phi_rs_inf1(int degree, int prec)
{
    return nc_subst(phi_rs(degree, prec), x_inf, x_1);
}

NcSeries phi_rs_inf0(int degree, int prec)
{
    return nc_subst(phi_rs(degree, prec), x_inf, x_0);
}

Complex pair(const NcSeries &f, const QPoly &w)
{
    Complex r;
    for (const auto &[word, q] : w.terms()) {
        r += f.coeff(word) * Complex(q);
    }
    return r;
}

BiSeries<Complex> pair(const NcSeries &f, const SeriesPoly &w)
{
    if (w.empty()) {
        throw DomainError("associator", "pairing with the zero series has no truncation orders");
    }
    const Orders o = w.terms().begin()->second.orders();
    BiSeries<Complex> r(o);
    for (const auto &[word, c] : w.terms()) {
        r += to_complex(c) * BiSeries<Complex>(o, f.coeff(word));
    }
    return r;
}

int degree_budget(int weight, Orders o)
{
    return weight + 2 + o.s + o.t;
}

BiSeries<Complex> smzv_via_assoc(const Index &k, Product p, const Complex &T1, const Complex &T2, Orders o,
                                 int prec, int degree)
{
    if (k.empty()) {
        throw DomainError("associator", "the pairing formula needs a non-empty index");
    }
    const int need = degree_budget(k.weight(), o);
    const int D = degree < 0 ? need : degree;
    check_budget(need, D);
    BiSeries<Complex> r = pair(phi_ad(p, T1, T2, D, prec), flanked_word(k, o));
    return (k.weight() + k.depth()) % 2 ? -r : r;
}

BiSeries<Complex> rsmzv(const Index &k, Orders o, int prec, int degree)
{
    if (k.empty()) {
        return exp_minus_half_pi_i(o);
    }
    const int need = degree_budget(k.weight(), o);
    const int D = degree < 0 ? need : degree;
    check_budget(need, D);
    BiSeries<Complex> r = pair(phi_rs(D, prec), flanked_word(k, o));
    r = r * BiSeries<Complex>(o, Complex(1) / (pi_i() * Complex(2)));
    return (k.weight() + k.depth()) % 2 ? -r : r;
}

BiSeries<Complex> rsmzv_remark(const Index &k, Orders o, int prec)
{
    const Complex half = pi_i() * Complex(Rational(1, 2));
    return exp_minus_half_pi_i(o) * smzv_numeric(k, Product::Harmonic, o, half, -half, prec);
}

BiSeries<Complex> rsmzv_star(const Index &k, Orders o, int prec, int degree)
{
    BiSeries<Complex> r(o);
    for (const Index &l : coarsenings(k)) {
        r += rsmzv(l, o, prec, degree < 0 ? degree_budget(k.weight(), o) : degree);
    }
    return r;
}

BiSeries<Complex> rsmzv_star_via_assoc(const Index &k, Orders o, int prec, int degree)
{
    if (k.empty()) {
        throw DomainError("associator", "star pairing needs a non-empty index");
    }
    const int need = degree_budget(k.weight(), o);
    const int D = degree < 0 ? need : degree;
    check_budget(need, D);
    // e1 w(k) = e_k
    const QPoly omega(word_of_index(k).sub(1, word_of_index(k).length()), Rational(1));
    const QPoly diff = QPoly(Word::letter(Letter::E1), Rational(1)) - QPoly(Word::letter(Letter::E0), Rational(1));
    const SeriesPoly w = geometric(-1, Letter::E0, Var::S, o) * lift(diff * omega * diff, o)
                         * geometric(-1, Letter::E0, Var::T, o);
    return pair(phi_rs_inf1(D, prec), w) * BiSeries<Complex>(o, Complex(1) / (pi_i() * Complex(2)));
}

Real check_two_cycle(int degree, int prec)
{
    const NcSeries kz = phi_kz(degree, prec);
    return (kz * nc_swap(kz) - NcSeries::one(degree)).max_abs();
}

Real check_three_cycle(int degree, int prec)
{
    const NcSeries kz = phi_kz(degree, prec);
    const NcSeries a = kz;
    const NcSeries b = nc_subst(kz, x_inf, x_0); // Phi(X_inf, X0)
    const NcSeries c = nc_subst(kz, x_1, x_inf); // Phi(X1, X_inf)
    const NcSeries e0 = nc_exp_letter(pi_i(), Complex(0), degree);
    const NcSeries e1 = nc_exp_letter(Complex(0), pi_i(), degree);
    const NcSeries einf = exp_inf(pi_i(), degree);
    return (a * e0 * b * einf * c * e1 - NcSeries::one(degree)).max_abs();
}

Real check_t_part(Product p, const Complex &T, int degree, int prec)
{
    const NcSeries lhs = phi(p, T, degree, prec);
    const NcSeries rhs = nc_exp_letter(Complex(0), -T, degree) * phi(p, Complex(0), degree, prec);
    return (lhs - rhs).max_abs();
}

namespace
{

// sum_n g_n X1^n for numeric coefficients g_n
NcSeries series_in_x1(const std::vector<Complex> &g, int degree)
{
    NcSeries r(degree);
    for (int n = 0; n <= degree && n < static_cast<int>(g.size()); ++n) {
        r.coeff(Word::power(Letter::E1, n)) = g[static_cast<std::size_t>(n)];
    }
    return r;
}

} // namespace

Real check_gamma_factor(const Complex &T, int degree, int prec)
{
    std::vector<Complex> g;
    for (const ZetaPoly &z : gamma0_coeffs(degree)) {
        g.push_back(eval_zeta_poly(z, {}, prec).value);
    }
    const NcSeries lhs = phi(Product::Shuffle, T, degree, prec);
    const NcSeries rhs = series_in_x1(g, degree) * phi(Product::Harmonic, T, degree, prec);
    return (lhs - rhs).max_abs();
}

Real check_independence_factor(const Complex &T, int degree, int prec)
{
    // exp(sum_{k>=1} zeta(2k)/k X1^{2k}) by the power-sum recursion n E_n = sum_j j g_j E_{n-j}.
    std::vector<Complex> g(static_cast<std::size_t>(degree + 1));
    for (int k = 1; 2 * k <= degree; ++k) {
        g[static_cast<std::size_t>(2 * k)] = Complex(mzv(Index{2 * k}, prec).value) * Complex(Rational(1, k));
    }
    std::vector<Complex> e(static_cast<std::size_t>(degree + 1));
    e[0] = Complex(1);
    for (int n = 1; n <= degree; ++n) {
        Complex acc;
        for (int j = 1; j <= n; ++j) {
            acc += Complex(j) * g[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(n - j)];
        }
        e[static_cast<std::size_t>(n)] = acc * Complex(Rational(1, n));
    }
    const NcSeries x1 = NcSeries::linear(Complex(0), Complex(1), degree);
    const NcSeries lhs = phi_ad(Product::Shuffle, Complex(0), T, degree, prec);
    const NcSeries rhs = nc_eps(phi(Product::Harmonic, Complex(0), degree, prec)) * x1 * series_in_x1(e, degree)
                         * phi(Product::Harmonic, T, degree, prec);
    return (lhs - rhs).max_abs();
}

Real check_ad_independence(Product p, const Complex &T1, const Complex &T2, int degree, int prec)
{
    return (phi_ad(p, T1, T2, degree, prec) - phi_ad(p, Complex(0), T2 - T1, degree, prec)).max_abs();
}

Real check_duality_assoc(int degree, int prec)
{
    return (phi_rs_inf0(degree, prec) - nc_conj(phi_rs_inf1(degree, prec))).max_abs();
}

Real check_refined_duality(const Index &k, Orders o, int prec)
{
    if (k.empty()) {
        throw DomainError("associator", "refined duality needs a non-empty index");
    }
    const Index dual = hoffman_dual(k);
    const int D = degree_budget(k.weight(), o);
    BiSeries<Complex> lhs(o);
    BiSeries<Complex> rhs(o);
    // Padding {1}^a on the left and {1}^b on the right costs s^a t^b.
    for (int a = 0; a <= o.s; ++a) {
        for (int b = 0; b <= o.t; ++b) {
            const Orders rest{o.s - a, o.t - b};
            const auto left = rsmzv_star(concat(ones(a), k, ones(b)), rest, prec, D);
            const auto right = rsmzv_star(concat(ones(a), dual, ones(b)), rest, prec, D);
            lhs += left.with_orders(o).shift(a, b);
            rhs -= conj(right).with_orders(o).shift(a, b);
        }
    }
    return max_abs(lhs - rhs);
}

Real check_smzv_via_assoc(const Index &k, Product p, Orders o, int prec)
{
    const Complex T1(sample_T1());
    const Complex T2(sample_T2());
    return max_abs(smzv_via_assoc(k, p, T1, T2, o, prec) - smzv_numeric(k, p, o, T1, T2, prec));
}

Real check_rsmzv_routes(const Index &k, Orders o, int prec)
{
    return max_abs(rsmzv(k, o, prec) - rsmzv_remark(k, o, prec));
}

} // namespace mzvkit
