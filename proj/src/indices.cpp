#include <mzvkit/indices.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

#include <mzvkit/errors.hpp>

namespace mzvkit
{

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index::Index(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 1) {
            throw DomainError("indices", "index part " + std::to_string(p) + " < 1");
        }
    }
}

int Index::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

ExponentTuple::ExponentTuple(std::initializer_list<int> parts) : ExponentTuple(std::vector<int>(parts)) {}

ExponentTuple::ExponentTuple(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 0) {
            throw DomainError("indices", "exponent " + std::to_string(p) + " < 0");
        }
    }
}

int ExponentTuple::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

void IndexCombination::add(const Index &k, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Rational IndexCombination::coefficient(const Index &k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

IndexCombination &IndexCombination::operator+=(const IndexCombination &other)
{
    for (const auto &[k, c] : other.terms_) {
        add(k, c);
    }
    return *this;
}

IndexCombination &IndexCombination::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

Index reverse(const Index &k)
{
    std::vector<int> p(k.parts().rbegin(), k.parts().rend());
    return Index(std::move(p));
}

Index concat(const Index &k, const Index &l)
{
    std::vector<int> p = k.parts();
    p.insert(p.end(), l.parts().begin(), l.parts().end());
    return Index(std::move(p));
}

Index concat(const Index &a, const Index &b, const Index &c)
{
    return concat(concat(a, b), c);
}

std::pair<Index, Index> split(const Index &k, int i)
{
    if (i < 0 || i > k.depth()) {
        throw RangeError("indices", "split position " + std::to_string(i) + " outside [0, "
                                        + std::to_string(k.depth()) + "]");
    }
    const auto &p = k.parts();
    return {Index(std::vector<int>(p.begin(), p.begin() + i)), Index(std::vector<int>(p.begin() + i, p.end()))};
}

Index oplus(const Index &k, const ExponentTuple &n)
{
    if (k.depth() != n.depth()) {
        throw ShapeError("indices", "depth mismatch in oplus: " + std::to_string(k.depth()) + " vs "
                                        + std::to_string(n.depth()));
    }
    std::vector<int> p(k.parts());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] += n.parts()[i];
    }
    return Index(std::move(p));
}

Integer b_coeff(const Index &k, const ExponentTuple &n)
{
    if (k.depth() != n.depth()) {
        throw ShapeError("indices", "depth mismatch in b_coeff: " + std::to_string(k.depth()) + " vs "
                                        + std::to_string(n.depth()));
    }
    Integer r = 1;
    for (int i = 0; i < k.depth(); ++i) {
        r *= binomial(k[i] + n.parts()[i] - 1, n.parts()[i]);
    }
    return r;
}

Index hoffman_dual(const Index &k)
{
    if (k.empty()) {
        throw DomainError("indices", "Hoffman dual of the empty index");
    }
    // Separator j sits between the j-th and (j+1)-th 1; true means comma.
    std::vector<bool> comma;
    for (int i = 0; i < k.depth(); ++i) {
        for (int j = 1; j < k[i]; ++j) {
            comma.push_back(false);
        }
        if (i + 1 < k.depth()) {
            comma.push_back(true);
        }
    }
    std::vector<int> out{1};
    for (bool c : comma) {
        // Swapped: a former plus is now a comma.
        if (!c) {
            out.push_back(1);
        } else {
            ++out.back();
        }
    }
    return Index(std::move(out));
}

std::vector<Index> coarsenings(const Index &k)
{
    if (k.empty()) {
        return {Index()};
    }
    const int r = k.depth();
    std::vector<Index> out;
    out.reserve(std::size_t{1} << (r - 1));
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> p{k[0]};
        for (int j = 1; j < r; ++j) {
            if (mask & (1u << (j - 1))) {
                p.back() += k[j];
            } else {
                p.push_back(k[j]);
            }
        }
        out.emplace_back(std::move(p));
    }
    return out;
}

std::vector<Index> cyclic_class(const Index &k)
{
    std::vector<Index> out;
    for (int i = 1; i <= k.depth(); ++i) {
        auto [head, tail] = split(k, i);
        out.push_back(concat(tail, head));
    }
    return out;
}

Index uplus(const Index &k, const Index &l)
{
    if (k.empty() || l.empty()) {
        throw DomainError("indices", "uplus needs non-empty indices");
    }
    std::vector<int> p = k.parts();
    p.back() += l[0];
    p.insert(p.end(), l.parts().begin() + 1, l.parts().end());
    return Index(std::move(p));
}

Index ones(int m)
{
    return Index(std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), 1));
}

namespace
{

void tuples_rec(int depth, int weight, std::vector<int> &cur, std::vector<ExponentTuple> &out)
{
    if (static_cast<int>(cur.size()) == depth - 1) {
        cur.push_back(weight);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 0; a <= weight; ++a) {
        cur.push_back(a);
        tuples_rec(depth, weight - a, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ExponentTuple> exponent_tuples(int depth, int weight)
{
    std::vector<ExponentTuple> out;
    if (depth == 0) {
        if (weight == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<int> cur;
    tuples_rec(depth, weight, cur, out);
    return out;
}

std::string to_string(const Index &k)
{
    std::string s = "(";
    for (int i = 0; i < k.depth(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(k[i]);
    }
    return s + ")";
}

Index parse_index(std::string_view text)
{
    auto fail = [&](const std::string &why) {
        return ParseError("indices", "malformed index '" + std::string(text) + "': " + why);
    };
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw fail("expected \"(k1,k2,...)\"");
    }
    const auto body = text.substr(1, text.size() - 2);
    std::vector<int> parts;
    if (body.empty()) {
        return Index();
    }
    std::size_t pos = 0;
    while (true) {
        const auto comma = body.find(',', pos);
        const auto tok = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (tok.empty() || tok.size() > 6
            || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw fail("part '" + std::string(tok) + "' is not a positive integer");
        }
        const int v = std::stoi(std::string(tok));
        if (v < 1) {
            throw fail("part " + std::to_string(v) + " < 1");
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

std::string to_string(const IndexCombination &c)
{
    if (c.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[k, q] : c.terms()) {
        if (!s.empty()) {
            s += " + ";
        }
        s += to_string(q) + "*" + to_string(k);
    }
    return s;
}

} // namespace mzvkit
