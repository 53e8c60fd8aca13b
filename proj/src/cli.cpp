#include <mzvkit/cli.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <mzvkit/associator.hpp>
#include <mzvkit/finite_mzv.hpp>
#include <mzvkit/mzv_numeric.hpp>
#include <mzvkit/regularization.hpp>
#include <mzvkit/report.hpp>
#include <mzvkit/stadic.hpp>

namespace mzvkit
{

namespace
{

// How many index arguments a target takes.
enum class Arity { None, Singles, Pairs, Any };

struct Target
{
    Verb verb;
    const char *name;
    Arity arity;
};

const std::vector<Target> &targets()
{
    static const std::vector<Target> t{
        {Verb::Eval, "mzv", Arity::Singles},
        {Verb::Eval, "reg", Arity::Singles},
        {Verb::Eval, "smzv", Arity::Singles},
        {Verb::Eval, "rsmzv", Arity::Singles},
        {Verb::Eval, "dual", Arity::Singles},
        {Verb::Eval, "finite", Arity::Singles},
        {Verb::Check, "harmonic", Arity::Pairs},
        {Verb::Check, "shuffle", Arity::Pairs},
        {Verb::Check, "shifted-harmonic", Arity::Pairs},
        {Verb::Check, "antipode", Arity::Singles},
        {Verb::Check, "reg-theorem", Arity::Singles},
        {Verb::Check, "explicit-reg", Arity::Singles},
        {Verb::Check, "independence", Arity::Singles},
        {Verb::Check, "csf", Arity::Singles},
        {Verb::Check, "csf-shifted", Arity::Singles},
        {Verb::Check, "csf-star", Arity::Singles},
        {Verb::Check, "csf-nonstar", Arity::Singles},
        {Verb::Check, "csf-tau", Arity::Singles},
        {Verb::Check, "refined-duality", Arity::Singles},
        {Verb::Check, "assoc-route", Arity::Singles},
        {Verb::Check, "rsmzv-route", Arity::Singles},
        {Verb::Check, "two-cycle", Arity::None},
        {Verb::Check, "three-cycle", Arity::None},
        {Verb::Check, "t-part", Arity::None},
        {Verb::Check, "gamma", Arity::None},
        {Verb::Check, "independence-factor", Arity::None},
        {Verb::Check, "ad-independence", Arity::None},
        {Verb::Check, "duality-assoc", Arity::None},
        {Verb::Check, "anchors", Arity::None},
        {Verb::Scan, "stuffle", Arity::Any},
        {Verb::Scan, "shift", Arity::Singles},
        {Verb::Scan, "wolstenholme", Arity::None},
        {Verb::Cache, "show", Arity::None},
        {Verb::Cache, "size", Arity::None},
        {Verb::Cache, "clear", Arity::None},
        {Verb::Cache, "warm", Arity::Singles},
    };
    return t;
}

const std::map<std::string, Verb> verbs{
    {"eval", Verb::Eval}, {"check", Verb::Check}, {"scan", Verb::Scan}, {"cache", Verb::Cache}};

std::string verb_name(Verb v)
{
    for (const auto &[name, verb] : verbs) {
        if (verb == v) {
            return name;
        }
    }
    return "?";
}

const Target *find_target(Verb v, const std::string &name)
{
    for (const Target &t : targets()) {
        if (t.verb == v && name == t.name) {
            return &t;
        }
    }
    return nullptr;
}

std::string at(std::size_t pos, const std::string &token)
{
    return "argument " + std::to_string(pos + 1) + " '" + token + "'";
}

int parse_int(const std::string &text, std::size_t pos, const std::string &option)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw UsageError(at(pos, text) + ": " + option + " expects an integer");
}

Orders parse_orders(const std::string &text, std::size_t pos)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError(at(pos, text) + ": --orders expects 'a,b'");
    }
    const Orders o{parse_int(text.substr(0, comma), pos, "--orders"), parse_int(text.substr(comma + 1), pos, "--orders")};
    if (o.s < 0 || o.t < 0) {
        throw UsageError(at(pos, text) + ": orders must be non-negative");
    }
    return o;
}

} // namespace

CommandAst parse_command(const std::vector<std::string> &args)
{
    CommandAst a;
    std::size_t i = 0;
    if (args.empty()) {
        throw UsageError("expected: verb target index* option*");
    }
    // "finite scan ..." is accepted for "scan ..."
    if (args[0] == "finite" && args.size() > 1 && args[1] == "scan") {
        i = 1;
    }
    auto v = verbs.find(args[i]);
    if (v == verbs.end()) {
        throw UsageError(at(i, args[i]) + ": unknown verb (eval, check, scan, cache)");
    }
    a.verb = v->second;
    ++i;
    if (i >= args.size()) {
        throw UsageError("missing target after '" + args[i - 1] + "'");
    }
    if (!find_target(a.verb, args[i])) {
        std::string known;
        for (const Target &t : targets()) {
            if (t.verb == a.verb) {
                known += (known.empty() ? "" : ", ") + std::string(t.name);
            }
        }
        throw UsageError(at(i, args[i]) + ": unknown target for " + verb_name(a.verb) + " (" + known + ")");
    }
    a.target = args[i++];
    for (; i < args.size() && !args[i].starts_with("--"); ++i) {
        try {
            a.indices.push_back(parse_index(args[i]));
        } catch (const Error &e) {
            throw UsageError(at(i, args[i]) + ": " + e.what());
        }
    }
    for (; i < args.size(); ++i) {
        const std::string &opt = args[i];
        if (!opt.starts_with("--")) {
            throw UsageError(at(i, opt) + ": indices must come before options");
        }
        if (i + 1 >= args.size()) {
            throw UsageError(at(i, opt) + ": missing value");
        }
        const std::string &val = args[++i];
        if (opt == "--orders") {
            a.orders = parse_orders(val, i);
        } else if (opt == "--prec") {
            a.prec = parse_int(val, i, opt);
        } else if (opt == "--tau") {
            try {
                a.tau = parse_rational(val);
            } catch (const Error &) {
                throw UsageError(at(i, val) + ": --tau expects p/q");
            }
        } else if (opt == "--pmax") {
            a.pmax = parse_int(val, i, opt);
        } else if (opt == "--pow") {
            a.pow = parse_int(val, i, opt);
        } else if (opt == "--shift") {
            a.shift = parse_int(val, i, opt);
        } else if (opt == "--deg") {
            a.deg = parse_int(val, i, opt);
        } else if (opt == "--config") {
            a.config = val;
        } else {
            throw UsageError(at(i - 1, opt) + ": unknown option");
        }
    }
    const Target &t = *find_target(a.verb, a.target);
    const std::size_t n = a.indices.size();
    if (t.arity == Arity::None && n != 0) {
        throw UsageError(a.target + " takes no index arguments");
    }
    if (t.arity == Arity::Singles && n == 0) {
        throw UsageError(a.target + " needs at least one index");
    }
    if ((t.arity == Arity::Pairs && (n == 0 || n % 2)) || (t.arity == Arity::Any && n % 2)) {
        throw UsageError(a.target + " takes indices in pairs");
    }
    return a;
}

std::vector<std::string> render(const CommandAst &a)
{
    std::vector<std::string> out{verb_name(a.verb), a.target};
    for (const Index &k : a.indices) {
        out.push_back(to_string(k));
    }
    auto put = [&](const char *opt, const std::optional<int> &v) {
        if (v) {
            out.push_back(opt);
            out.push_back(std::to_string(*v));
        }
    };
    if (a.orders) {
        out.push_back("--orders");
        out.push_back(to_string(*a.orders));
    }
    put("--prec", a.prec);
    if (a.tau) {
        out.push_back("--tau");
        out.push_back(to_string(*a.tau));
    }
    put("--pmax", a.pmax);
    put("--pow", a.pow);
    put("--shift", a.shift);
    put("--deg", a.deg);
    if (a.config) {
        out.push_back("--config");
        out.push_back(*a.config);
    }
    return out;
}

Config default_config()
{
    Config c;
    c.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return c;
}

Config read_config(std::istream &in)
{
    Config c = default_config();
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        auto fail = [&](const std::string &why) {
            throw ParseError("cli", "config line " + std::to_string(number) + ": " + why, number);
        };
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail("expected key=value");
        }
        auto trim = [](std::string x) {
            const auto b = x.find_first_not_of(" \t");
            return b == std::string::npos ? std::string() : x.substr(b, x.find_last_not_of(" \t") - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "prec") {
                c.prec = parse_int(value, 0, key);
            } else if (key == "orders") {
                c.orders = parse_orders(value, 0);
            } else if (key == "cache_path") {
                c.cache_path = value;
            } else if (key == "workers") {
                c.workers = parse_int(value, 0, key);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const UsageError &) {
            fail("bad value '" + value + "' for " + key);
        }
    }
    if (c.prec < min_prec || c.prec > max_prec) {
        throw ParseError("cli", "config prec " + std::to_string(c.prec) + " outside [" + std::to_string(min_prec) + ", "
                                    + std::to_string(max_prec) + "]",
                         0);
    }
    if (c.workers < 1) {
        throw ParseError("cli", "config workers must be at least 1", 0);
    }
    return c;
}

Config load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        return default_config();
    }
    return read_config(in);
}

Config resolve_config(const CommandAst &a)
{
    if (a.config) {
        return load_config(*a.config);
    }
    if (const char *env = std::getenv("MZVKIT_CONFIG"); env && *env) {
        return load_config(env);
    }
    return default_config();
}

namespace
{

struct Context
{
    const CommandAst &a;
    const Config &cfg;
    std::ostream &out;
    int prec;
    Orders orders;
    Real tol;
    bool failed = false;

    void report(const std::string &name, const std::string &params, const Real &residual)
    {
        const CheckReport r{name, params, residual, tol};
        failed = failed || !r.pass();
        out << render(r) << '\n';
    }

    std::string std_params(const std::string &lead) const
    {
        return lead + " orders=" + to_string(orders) + " prec=" + std::to_string(prec);
    }
};

void print_series(std::ostream &out, const BiSeries<Complex> &s, int digits)
{
    const Orders o = s.orders();
    for (int m = 0; m <= o.s; ++m) {
        for (int n = 0; n <= o.t; ++n) {
            out << "  s^" << m << " t^" << n << ": " << to_string(s.at(m, n), digits) << '\n';
        }
    }
}

void run_eval(Context &c)
{
    const auto &a = c.a;
    for (const Index &k : a.indices) {
        if (a.target == "mzv") {
            c.out << "zeta" << to_string(k) << " = " << to_decimal(mzv(k, c.prec).value, c.prec) << '\n';
        } else if (a.target == "reg") {
            c.out << "zeta^*" << to_string(k) << "(T) = " << to_string(zeta_reg(k, Product::Harmonic)) << '\n';
            c.out << "zeta^sh" << to_string(k) << "(T) = " << to_string(zeta_reg(k, Product::Shuffle)) << '\n';
        } else if (a.target == "smzv") {
            const auto s = stadic_smzv(k, Product::Harmonic, c.orders);
            c.out << "zeta^{s,t,*}" << to_string(k) << "(T1,T2):\n";
            for (int m = 0; m <= c.orders.s; ++m) {
                for (int n = 0; n <= c.orders.t; ++n) {
                    c.out << "  s^" << m << " t^" << n << ": " << to_string(s.at(m, n)) << '\n';
                }
            }
        } else if (a.target == "rsmzv") {
            c.out << "zeta_RS^{s,t}" << to_string(k) << ":\n";
            print_series(c.out, rsmzv(k, c.orders, c.prec, a.deg.value_or(-1)), c.prec - 10);
        } else if (a.target == "dual") {
            c.out << to_string(k) << " dual " << to_string(hoffman_dual(k)) << '\n';
        } else if (a.target == "finite") {
            const int pmax = a.pmax.value_or(50);
            const int n = a.pow.value_or(1);
            const int shift = a.shift.value_or(0);
            for (int p : primes_between(n + 1, pmax)) {
                c.out << "p=" << p << " k=" << to_string(k) << " a=" << shift << " value="
                      << to_string(finite_mzv(k, p, n, shift)) << '\n';
            }
        }
    }
}

void run_check(Context &c)
{
    const auto &a = c.a;
    const std::string &t = a.target;
    const auto &ks = a.indices;
    const int deg = a.deg.value_or(t == "two-cycle" || t == "three-cycle" ? 6 : 5);
    const std::string dparams = "deg=" + std::to_string(deg) + " prec=" + std::to_string(c.prec);
    const Complex T(sample_T());
    if (t == "harmonic" || t == "shuffle" || t == "shifted-harmonic") {
        for (std::size_t i = 0; i + 1 < ks.size(); i += 2) {
            const Index &x = ks[i];
            const Index &y = ks[i + 1];
            if (t == "harmonic") {
                c.report(t, c.std_params("k=" + to_string(x) + " l=" + to_string(y)),
                         check_harmonic(x, y, c.orders, c.prec));
            } else if (t == "shuffle") {
                c.report(t, c.std_params("l=" + to_string(x) + " k=" + to_string(y)),
                         check_shuffle(x, y, c.orders, c.prec));
            } else {
                c.report(t,
                         "k=" + to_string(x) + " l=" + to_string(y) + " t-order=" + std::to_string(c.orders.t)
                             + " prec=" + std::to_string(c.prec),
                         check_shifted_harmonic(x, y, c.orders.t, c.prec));
            }
        }
        return;
    }
    for (const Index &k : ks) {
        const std::string kp = "k=" + to_string(k);
        const std::string tp = kp + " t-order=" + std::to_string(c.orders.t) + " prec=" + std::to_string(c.prec);
        if (t == "antipode") {
            c.report(t, tp, check_antipode(k, c.orders.t, c.prec));
        } else if (t == "reg-theorem") {
            c.report(t, kp + " prec=" + std::to_string(c.prec), check_reg_theorem(k, c.prec));
        } else if (t == "explicit-reg") {
            c.report(t, tp, check_explicit_reg(k, c.orders.t, c.prec));
        } else if (t == "independence") {
            for (Product p : {Product::Harmonic, Product::Shuffle}) {
                c.report(t, c.std_params(kp + " product=" + product_name(p)), check_independence(k, p, c.orders, c.prec));
            }
        } else if (t == "csf") {
            c.report(t, kp + " prec=" + std::to_string(c.prec), check_classical_csf(k, c.prec));
        } else if (t == "csf-shifted") {
            c.report(t, tp, check_shifted_csf(k, c.orders.t, c.prec));
        } else if (t == "csf-star") {
            c.report(t, c.std_params(kp), check_csf_star(k, c.orders, c.prec));
        } else if (t == "csf-nonstar") {
            c.report(t, c.std_params(kp), check_csf_nonstar(k, c.orders, c.prec));
        } else if (t == "csf-tau") {
            const Rational tau = a.tau.value_or(Rational(1, 2));
            c.report(t, c.std_params(kp + " tau=" + to_string(tau)), check_csf_tau(k, tau, c.orders, c.prec));
        } else if (t == "refined-duality") {
            c.report(t, c.std_params(kp + " dual=" + to_string(hoffman_dual(k))),
                     check_refined_duality(k, c.orders, c.prec));
        } else if (t == "assoc-route") {
            for (Product p : {Product::Harmonic, Product::Shuffle}) {
                c.report(t, c.std_params(kp + " product=" + product_name(p)),
                         check_smzv_via_assoc(k, p, c.orders, c.prec));
            }
        } else if (t == "rsmzv-route") {
            c.report(t, c.std_params(kp), check_rsmzv_routes(k, c.orders, c.prec));
        }
    }
    if (t == "two-cycle") {
        c.report(t, dparams, check_two_cycle(deg, c.prec));
    } else if (t == "three-cycle") {
        c.report(t, dparams, check_three_cycle(deg, c.prec));
    } else if (t == "t-part") {
        for (Product p : {Product::Harmonic, Product::Shuffle}) {
            c.report(t, dparams + " product=" + product_name(p), check_t_part(p, T, deg, c.prec));
        }
    } else if (t == "gamma") {
        c.report(t, dparams, check_gamma_factor(T, deg, c.prec));
    } else if (t == "independence-factor") {
        c.report(t, dparams, check_independence_factor(T, deg, c.prec));
    } else if (t == "ad-independence") {
        for (Product p : {Product::Harmonic, Product::Shuffle}) {
            c.report(t, dparams + " product=" + product_name(p),
                     check_ad_independence(p, Complex(sample_T1()), Complex(sample_T2()), deg, c.prec));
        }
    } else if (t == "duality-assoc") {
        c.report(t, dparams, check_duality_assoc(deg, c.prec));
    } else if (t == "anchors") {
        const std::string pp = "prec=" + std::to_string(c.prec);
        const Real pi2 = pi() * pi();
        const Real z2 = mzv(Index{2}, c.prec).value;
        c.report("anchor", "zeta(2)=pi^2/6 " + pp, abs(z2 - pi2 / 6));
        c.report("anchor", "zeta(1,2)=zeta(3) " + pp, abs(mzv(Index{1, 2}, c.prec).value - mzv(Index{3}, c.prec).value));
        c.report("anchor", "zeta(1,3)=pi^4/360 " + pp, abs(mzv(Index{1, 3}, c.prec).value - pi2 * pi2 / 360));
        c.report("anchor", "zeta(4)=2/5*zeta(2)^2 " + pp, euler_check(2, c.prec));
    }
}

void run_scan(Context &c)
{
    const auto &a = c.a;
    const int n = a.pow.value_or(2);
    ScanReport r;
    if (a.target == "stuffle") {
        std::vector<std::pair<Index, Index>> pairs;
        for (std::size_t i = 0; i + 1 < a.indices.size(); i += 2) {
            pairs.emplace_back(a.indices[i], a.indices[i + 1]);
        }
        if (pairs.empty()) {
            const std::vector<Index> base{Index{1}, Index{2}, Index{1, 1}};
            for (const Index &x : base) {
                for (const Index &y : base) {
                    pairs.emplace_back(x, y);
                }
            }
        }
        r = scan_stuffle(pairs, a.pmax.value_or(100), n, c.cfg.workers);
    } else if (a.target == "shift") {
        const int shift = a.shift.value_or(1);
        for (const Index &k : a.indices) {
            const ScanReport part = scan_shift_expansion(k, shift, a.pmax.value_or(100), n, c.cfg.workers);
            r.relation = part.relation;
            r.p_max = part.p_max;
            r.n = part.n;
            r.entries.insert(r.entries.end(), part.entries.begin(), part.entries.end());
            r.counterexamples.insert(r.counterexamples.end(), part.counterexamples.begin(),
                                     part.counterexamples.end());
        }
    } else {
        r = scan_wolstenholme(a.pmax.value_or(10000), c.cfg.workers);
    }
    write_csv(c.out, r);
    c.failed = !r.all_pass();
}

void run_cache(Context &c)
{
    const std::string &path = c.cfg.cache_path;
    if (path.empty()) {
        throw UsageError("no cache_path configured (set it in the config file)");
    }
    ValueCache &cache = ValueCache::global();
    if (c.a.target == "show") {
        cache.write(c.out);
    } else if (c.a.target == "size") {
        c.out << cache.size() << '\n';
    } else if (c.a.target == "clear") {
        cache.clear();
        cache.save(path);
        c.out << "cleared " << path << '\n';
    } else {
        for (const Index &k : c.a.indices) {
            const Real v = mzv(k, c.prec).value;
            if (!cache.lookup(k, c.prec)) {
                cache.store(k, c.prec, to_decimal(v, c.prec + 5));
            }
        }
        c.out << cache.size() << " values in " << path << '\n';
    }
}

} // namespace

int run(const CommandAst &a, const Config &cfg, std::ostream &out, std::ostream &err)
{
    try {
        const int prec = a.prec.value_or(cfg.prec);
        if (prec < min_prec || prec > max_prec) {
            throw UsageError("--prec " + std::to_string(prec) + " outside [" + std::to_string(min_prec) + ", "
                             + std::to_string(max_prec) + "]");
        }
        const Orders orders = a.orders.value_or(cfg.orders);
        if (a.deg && *a.deg < 0) {
            throw UsageError("--deg must be non-negative");
        }
        Context c{a, cfg, out, prec, orders, tolerance_for(prec)};
        if (!cfg.cache_path.empty()) {
            ValueCache::global().load(cfg.cache_path);
        }
        const std::size_t before = ValueCache::global().size();
        switch (a.verb) {
        case Verb::Eval:
            run_eval(c);
            break;
        case Verb::Check:
            run_check(c);
            break;
        case Verb::Scan:
            run_scan(c);
            break;
        case Verb::Cache:
            run_cache(c);
            break;
        }
        if (!cfg.cache_path.empty() && ValueCache::global().size() != before) {
            ValueCache::global().save(cfg.cache_path);
        }
        return c.failed ? 1 : 0;
    } catch (const UsageError &e) {
        err << "usage: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << e.module() << ": " << e.what() << '\n';
        return 1;
    }
}

int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CommandAst a;
    Config cfg;
    try {
        a = parse_command(args);
        cfg = resolve_config(a);
    } catch (const Error &e) {
        err << "usage: " << e.what() << '\n';
        return 2;
    }
    return run(a, cfg, out, err);
}

} // namespace mzvkit
