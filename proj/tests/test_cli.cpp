#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <mzvkit/cli.hpp>
#include <mzvkit/mzv_numeric.hpp>

using namespace mzvkit;

namespace
{

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string> &args, const Config &cfg = Config{})
{
    std::ostringstream out, err;
    int code;
    try {
        code = run(parse_command(args), cfg, out, err);
    } catch (const UsageError &e) {
        err << e.what();
        code = 2;
    }
    return {code, out.str(), err.str()};
}

int count(const std::string &s, const std::string &needle)
{
    int n = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) {
        ++n;
    }
    return n;
}

Index random_index(std::mt19937 &rng)
{
    std::vector<int> parts(rng() % 4);
    for (int &p : parts) {
        p = 1 + static_cast<int>(rng() % 5);
    }
    return Index(parts);
}

} // namespace

TEST_CASE("parse examples")
{
    const CommandAst a = parse_command({"check", "harmonic", "(1)", "(2)", "--orders", "2,2"});
    CHECK(a.verb == Verb::Check);
    CHECK(a.target == "harmonic");
    CHECK(a.indices == std::vector<Index>{Index{1}, Index{2}});
    CHECK(a.orders == Orders{2, 2});
    CHECK_FALSE(a.prec);

    const CommandAst b = parse_command({"eval", "mzv", "(1,2)", "--prec", "40"});
    CHECK(b.verb == Verb::Eval);
    CHECK(b.indices == std::vector<Index>{Index{1, 2}});
    CHECK(b.prec == 40);

    const CommandAst c = parse_command({"finite", "scan", "stuffle", "--pmax", "100", "--pow", "2"});
    CHECK(c.verb == Verb::Scan);
    CHECK(c.pmax == 100);
    CHECK(c.pow == 2);

    CHECK(parse_command({"check", "csf-tau", "(1,2)", "--tau", "1/2"}).tau == Rational(1, 2));
    CHECK(parse_command({"eval", "mzv", "()"}).indices.front().empty());
}

TEST_CASE("usage errors name the token")
{
    auto message = [](const std::vector<std::string> &args) {
        try {
            parse_command(args);
        } catch (const UsageError &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message({"check", "harmonic", "(0,2)", "(1)"}).find("argument 3 '(0,2)'") != std::string::npos);
    CHECK(message({"check", "harmonic", "(0,2)", "(1)"}).find("part 0 < 1") != std::string::npos);
    CHECK(message({"frobnicate", "x"}).find("argument 1") != std::string::npos);
    CHECK(message({"check", "nothing"}).find("argument 2 'nothing'") != std::string::npos);
    CHECK(message({"eval", "mzv", "(2)", "--prec", "forty"}).find("argument 5 'forty'") != std::string::npos);
    CHECK(message({"eval", "mzv", "(2)", "--orders", "2"}).find("'a,b'") != std::string::npos);
    CHECK(message({"eval", "mzv", "(2)", "--bogus", "1"}).find("unknown option") != std::string::npos);
    CHECK(message({"eval", "mzv", "(2)", "--prec"}).find("missing value") != std::string::npos);
    CHECK(message({"check", "harmonic", "(1)"}).find("pairs") != std::string::npos);
    CHECK(message({"check", "two-cycle", "(1)"}).find("no index") != std::string::npos);
    CHECK(message({"check", "csf"}).find("at least one") != std::string::npos);
    CHECK(message({"eval", "mzv", "(2)", "--tau", "x/y"}).find("p/q") != std::string::npos);
    CHECK(message({}) != "no error");
}

TEST_CASE("render is a right inverse of parse")
{
    std::mt19937 rng(20261015);
    const std::vector<std::pair<Verb, std::string>> shapes{
        {Verb::Check, "harmonic"}, {Verb::Eval, "mzv"}, {Verb::Scan, "stuffle"}, {Verb::Cache, "warm"},
        {Verb::Check, "csf-tau"}};
    for (int trial = 0; trial < 300; ++trial) {
        CommandAst a;
        const auto &[verb, target] = shapes[rng() % shapes.size()];
        a.verb = verb;
        a.target = target;
        const int n = 2 * (1 + static_cast<int>(rng() % 2));
        for (int i = 0; i < n; ++i) {
            a.indices.push_back(random_index(rng));
        }
        if (rng() % 2) {
            a.orders = Orders{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
        }
        if (rng() % 2) {
            a.prec = 15 + static_cast<int>(rng() % 60);
        }
        if (rng() % 2) {
            Rational tau(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 7));
            tau.canonicalize();
            a.tau = tau;
        }
        if (rng() % 2) {
            a.pmax = static_cast<int>(rng() % 1000);
        }
        if (rng() % 2) {
            a.pow = 1 + static_cast<int>(rng() % 3);
        }
        if (rng() % 2) {
            a.shift = static_cast<int>(rng() % 5) - 2;
        }
        if (rng() % 2) {
            a.deg = static_cast<int>(rng() % 8);
        }
        if (rng() % 2) {
            a.config = "/tmp/cfg" + std::to_string(rng() % 100);
        }
        std::string shown;
        for (const std::string &t : render(a)) {
            shown += t + " ";
        }
        CAPTURE(shown);
        CHECK(parse_command(render(a)) == a);
    }
}

TEST_CASE("run: report lines and exit codes")
{
    const Outcome h = call({"check", "harmonic", "(1)", "(2)"});
    CHECK(h.code == 0);
    CHECK(count(h.out, "\n") == 1);
    CHECK(count(h.out, "residual=") == 1);
    CHECK(h.out.ends_with(" PASS\n"));

    const Outcome csf = call({"check", "csf", "(1,1)"});
    CHECK(csf.code == 1);
    CHECK(csf.err.find("weight k greater than r") != std::string::npos);

    const Outcome scan = call({"finite", "scan", "stuffle", "--pmax", "100", "--pow", "2"});
    CHECK(scan.code == 0);
    CHECK(scan.out.starts_with("prime,relation,params,pass\n"));
    CHECK(scan.out.ends_with(",0\n"));

    CHECK(call({"check", "harmonic", "(1)", "(2)", "--prec", "5"}).code == 2);
    CHECK(call({"check", "harmonic", "(x)", "(2)"}).code == 2);
    CHECK(call({"scan", "wolstenholme", "--pmax", "3"}).code == 1);

    const Outcome two = call({"check", "two-cycle", "--deg", "3", "--prec", "20"});
    CHECK(two.code == 0);
    CHECK(two.out.find("deg=3 prec=20") != std::string::npos);

    const Outcome ev = call({"eval", "mzv", "(2)", "--prec", "20"});
    CHECK(ev.code == 0);
    CHECK(ev.out.starts_with("zeta(2) = 1.6449340668482264364"));

    const Outcome d = call({"eval", "dual", "(1,2)"});
    CHECK(d.out == "(1,2) dual (2,1)\n");
}

TEST_CASE("run_main exit mapping")
{
    std::ostringstream out, err;
    CHECK(run_main({"check", "antipode", "(1,2)", "--orders", "0,2"}, out, err) == 0);
    CHECK(run_main({"nope"}, out, err) == 2);
    CHECK(run_main({"check", "refined-duality", "(2)", "--orders", "1,1", "--deg", "3"}, out, err) == 0);
    CHECK(run_main({"eval", "rsmzv", "(2)", "--orders", "1,1", "--deg", "3"}, out, err) == 1);
    CHECK(err.str().find("associator:") != std::string::npos);
}

TEST_CASE("config files")
{
    std::istringstream in("prec = 30\n");
    CHECK(read_config(in).prec == 30);

    std::istringstream ok("# defaults\nprec=30\norders=1,3\nworkers=2\ncache_path=/tmp/x  # trailing\n\n");
    const Config c = read_config(ok);
    CHECK(c.prec == 30);
    CHECK(c.orders == Orders{1, 3});
    CHECK(c.workers == 2);
    CHECK(c.cache_path == "/tmp/x");

    std::istringstream bad("prec=30\nwidth=3\n");
    try {
        read_config(bad);
        CHECK(false);
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
    }
    std::istringstream low("prec=5\n");
    CHECK_THROWS_AS(read_config(low), ParseError);

    const Config d = load_config("/nonexistent/mzvkit.conf");
    CHECK(d.prec == 40);
    CHECK(d.orders == Orders{2, 2});
    CHECK(d.workers >= 1);
}

TEST_CASE("cache verbs")
{
    const auto dir = std::filesystem::temp_directory_path() / "mzvkit_cli_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "values.txt").string();
    std::filesystem::remove(path);
    ValueCache::global().clear();

    Config cfg = default_config();
    cfg.cache_path = path;
    CHECK(call({"cache", "warm", "(2)", "(1,2)", "--prec", "20"}, cfg).code == 0);
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first.starts_with("k=2;prec=20;value=1.644934066848226436472415"));

    const Outcome size = call({"cache", "size"}, cfg);
    CHECK(size.out == "2\n");
    CHECK(call({"cache", "show"}, cfg).out.find("k=1,2;prec=20;") != std::string::npos);
    CHECK(call({"cache", "clear"}, cfg).code == 0);
    CHECK(ValueCache::global().size() == 0);

    Config none = default_config();
    CHECK(call({"cache", "size"}, none).code == 2);

    std::ofstream(path) << "k=2;prec=20;value=garbage\n";
    CHECK(call({"eval", "mzv", "(2)"}, cfg).code == 1);
    std::filesystem::remove_all(dir);
    ValueCache::global().clear();
}
