#include <mzvkit/nc_poly.hpp>

#include <sstream>
#include <unordered_map>

namespace mzvkit
{

namespace
{

struct PairHash
{
    std::size_t operator()(const std::pair<Word, Word> &p) const noexcept
    {
        return WordHash{}(p.first) * 1000003u ^ WordHash{}(p.second);
    }
};

using ProductCache = std::unordered_map<std::pair<Word, Word>, WordCounts, PairHash>;

constexpr std::size_t cache_limit = 1u << 17;

const WordCounts &remember(ProductCache &cache, const Word &u, const Word &v, WordCounts value)
{
    if (cache.size() > cache_limit) {
        cache.clear();
    }
    return cache.emplace(std::make_pair(u, v), std::move(value)).first->second;
}

void add_appended(WordCounts &out, const WordCounts &in, const Word &suffix, std::int64_t sign)
{
    for (const auto &[w, n] : in) {
        auto &slot = out[w * suffix];
        slot += sign * n;
        if (slot == 0) {
            out.erase(w * suffix);
        }
    }
}

std::vector<int> blocks(const Word &w)
{
    return index_of_word(w).parts();
}

} // namespace

WordCounts shuffle_words(const Word &u, const Word &v)
{
    if (u.empty()) {
        return {{v, 1}};
    }
    if (v.empty()) {
        return {{u, 1}};
    }
    thread_local ProductCache cache;
    if (auto it = cache.find({u, v}); it != cache.end()) {
        return it->second;
    }
    const int n = u.length();
    const int m = v.length();
    std::vector<WordCounts> table(static_cast<std::size_t>((n + 1) * (m + 1)));
    auto at = [&](int i, int j) -> WordCounts & { return table[static_cast<std::size_t>(i * (m + 1) + j)]; };
    at(0, 0)[Word()] = 1;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            if (i == 0 && j == 0) {
                continue;
            }
            auto &cell = at(i, j);
            if (i > 0) {
                add_appended(cell, at(i - 1, j), Word::letter(u.at(i - 1)), 1);
            }
            if (j > 0) {
                add_appended(cell, at(i, j - 1), Word::letter(v.at(j - 1)), 1);
            }
        }
    }
    return remember(cache, u, v, std::move(at(n, m)));
}

WordCounts harmonic_words(const Word &u, const Word &v)
{
    if (u.empty()) {
        return {{v, 1}};
    }
    if (v.empty()) {
        return {{u, 1}};
    }
    thread_local ProductCache cache;
    if (auto it = cache.find({u, v}); it != cache.end()) {
        return it->second;
    }
    const auto k = blocks(u);
    const auto l = blocks(v);
    const int n = static_cast<int>(k.size());
    const int m = static_cast<int>(l.size());
    auto block = [](int a) { return word_of_index(Index{a}); };
    std::vector<WordCounts> table(static_cast<std::size_t>((n + 1) * (m + 1)));
    auto at = [&](int i, int j) -> WordCounts & { return table[static_cast<std::size_t>(i * (m + 1) + j)]; };
    at(0, 0)[Word()] = 1;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            if (i == 0 && j == 0) {
                continue;
            }
            auto &cell = at(i, j);
            if (j > 0) {
                add_appended(cell, at(i, j - 1), block(l[j - 1]), 1);
            }
            if (i > 0) {
                add_appended(cell, at(i - 1, j), block(k[i - 1]), 1);
            }
            if (i > 0 && j > 0) {
                add_appended(cell, at(i - 1, j - 1), block(k[i - 1] + l[j - 1]), -1);
            }
        }
    }
    return remember(cache, u, v, std::move(at(n, m)));
}

std::string to_string(const NcPoly<Rational> &p)
{
    if (p.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[w, c] : p.terms()) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (w.empty()) {
            s += to_string(a);
        } else if (a == 1) {
            s += to_string(w);
        } else {
            s += to_string(a) + "*" + to_string(w);
        }
    }
    return s;
}

NcPoly<Rational> parse_nc_poly(const std::string &text)
{
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) {
        tokens.push_back(tok);
    }
    if (tokens.empty()) {
        throw ParseError("word-algebra", "empty polynomial text");
    }
    NcPoly<Rational> out;
    if (tokens.size() == 1 && tokens[0] == "0") {
        return out;
    }
    int sign = 1;
    bool expect_term = true;
    for (const auto &tok : tokens) {
        if (!expect_term) {
            if (tok != "+" && tok != "-") {
                throw ParseError("word-algebra", "expected '+' or '-' before '" + tok + "'");
            }
            sign = tok == "+" ? 1 : -1;
            expect_term = true;
            continue;
        }
        std::string term = tok;
        int s = sign;
        if (!term.empty() && term[0] == '-') {
            s = -s;
            term.erase(0, 1);
        }
        Rational c = 1;
        Word w;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            c = parse_rational(term.substr(0, star));
            w = parse_word(term.substr(star + 1));
        } else if (!term.empty() && term[0] == 'y') {
            w = parse_word(term);
        } else {
            c = parse_rational(term);
        }
        out.add(w, Rational(c * s));
        expect_term = false;
    }
    if (expect_term) {
        throw ParseError("word-algebra", "dangling operator in '" + text + "'");
    }
    return out;
}

} // namespace mzvkit
