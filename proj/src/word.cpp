#include <mzvkit/word.hpp>

#include <bit>

#include <mzvkit/errors.hpp>

namespace mzvkit
{

namespace
{

void check_length(int len)
{
    if (len > Word::max_length) {
        throw DomainError("word-algebra", "word length " + std::to_string(len) + " exceeds "
                                              + std::to_string(Word::max_length));
    }
}

std::uint64_t mask(int len)
{
    return len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
}

} // namespace

Word Word::from_bits(std::uint64_t bits, int len)
{
    check_length(len);
    Word w;
    w.bits_ = bits & mask(len);
    w.len_ = static_cast<std::uint8_t>(len);
    return w;
}

Word Word::letter(Letter a)
{
    return from_bits(static_cast<std::uint64_t>(a), 1);
}

Word Word::power(Letter a, int n)
{
    return from_bits(a == Letter::E1 ? mask(n) : 0, n);
}

int Word::count(Letter a) const noexcept
{
    const int ones = std::popcount(bits_);
    return a == Letter::E1 ? ones : len_ - ones;
}

Word Word::sub(int from, int to) const
{
    const int n = to - from;
    return from_bits(bits_ >> (len_ - to), n);
}

Word Word::append(Letter a) const
{
    return from_bits((bits_ << 1) | static_cast<std::uint64_t>(a), len_ + 1);
}

Word Word::prepend(Letter a) const
{
    return from_bits(bits_ | (static_cast<std::uint64_t>(a) << len_), len_ + 1);
}

Word operator*(const Word &u, const Word &v)
{
    check_length(u.len_ + v.len_);
    if (v.len_ == 0) {
        return u;
    }
    return Word::from_bits((u.bits_ << v.len_) | v.bits_, u.len_ + v.len_);
}

Word Word::reversed() const
{
    std::uint64_t r = 0;
    for (int i = 0; i < len_; ++i) {
        r |= ((bits_ >> i) & 1u) << (len_ - 1 - i);
    }
    return from_bits(r, len_);
}

Word Word::swapped() const
{
    return from_bits(~bits_, len_);
}

Word word_of_index(const Index &k)
{
    Word w;
    for (int p : k.parts()) {
        w = w * Word::letter(Letter::E1) * Word::power(Letter::E0, p - 1);
    }
    return w;
}

Index index_of_word(const Word &w)
{
    if (!w.in_h1()) {
        throw DomainError("word-algebra", "word " + to_string(w) + " is not in H^1");
    }
    std::vector<int> parts;
    for (int i = 0; i < w.length(); ++i) {
        if (w.at(i) == Letter::E1) {
            parts.push_back(1);
        } else {
            ++parts.back();
        }
    }
    return Index(std::move(parts));
}

std::string to_string(const Word &w)
{
    if (w.empty()) {
        return "1";
    }
    std::string s;
    for (int i = 0; i < w.length(); ++i) {
        s += w.at(i) == Letter::E1 ? "y1" : "y0";
    }
    return s;
}

Word parse_word(const std::string &text)
{
    if (text == "1") {
        return Word();
    }
    if (text.size() % 2 != 0) {
        throw ParseError("word-algebra", "malformed word '" + text + "'");
    }
    Word w;
    for (std::size_t i = 0; i < text.size(); i += 2) {
        if (text[i] != 'y' || (text[i + 1] != '0' && text[i + 1] != '1')) {
            throw ParseError("word-algebra", "malformed word '" + text + "'");
        }
        w = w.append(text[i + 1] == '1' ? Letter::E1 : Letter::E0);
    }
    return w;
}

} // namespace mzvkit
