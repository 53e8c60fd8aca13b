#ifndef MZVKIT_CLI_HPP
#define MZVKIT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <mzvkit/errors.hpp>
#include <mzvkit/indices.hpp>
#include <mzvkit/rational.hpp>
#include <mzvkit/series.hpp>

namespace mzvkit
{

class UsageError : public Error
{
public:
    explicit UsageError(const std::string &what) : Error("cli", what) {}
};

enum class Verb { Eval, Check, Scan, Cache };

struct CommandAst
{
    Verb verb = Verb::Check;
    std::string target;
    std::vector<Index> indices;
    std::optional<Orders> orders;
    std::optional<int> prec;
    std::optional<Rational> tau;
    std::optional<int> pmax;
    std::optional<int> pow;
    std::optional<int> shift;
    std::optional<int> deg;
    std::optional<std::string> config;

    friend bool operator==(const CommandAst &, const CommandAst &) = default;
};

struct Config
{
    int prec = 40;
    Orders orders{2, 2};
    std::string cache_path;
    int workers = 1;
};

// argv without the program name. Throws UsageError naming the token and its position.
CommandAst parse_command(const std::vector<std::string> &args);
// Canonical token list; parse_command(render(a)) == a.
std::vector<std::string> render(const CommandAst &a);

Config default_config();
// key=value lines (prec, orders, cache_path, workers); '#' starts a comment.
Config read_config(std::istream &in);
// Missing file gives the defaults.
Config load_config(const std::string &path);
// --config, then MZVKIT_CONFIG, then defaults.
Config resolve_config(const CommandAst &a);

// 0 when every check passes, 1 on a failed check or module error, 2 on usage error.
int run(const CommandAst &a, const Config &cfg, std::ostream &out, std::ostream &err);
int run_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mzvkit

#endif
