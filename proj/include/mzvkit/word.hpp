#ifndef MZVKIT_WORD_HPP
#define MZVKIT_WORD_HPP

#include <cstdint>
#include <functional>
#include <string>

#include <mzvkit/indices.hpp>

namespace mzvkit
{

enum class Letter : std::uint8_t { E0 = 0, E1 = 1 };

// A word in e0, e1 of length <= 63, packed into bits; the first letter is
// the most significant of the len low bits.
class Word
{
public:
    static constexpr int max_length = 63;

    Word() = default;
    static Word from_bits(std::uint64_t bits, int len);
    static Word letter(Letter a);
    static Word power(Letter a, int n);

    int length() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }
    std::uint64_t bits() const noexcept { return bits_; }
    Letter at(int i) const noexcept { return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1u); }
    Letter front() const noexcept { return at(0); }
    Letter back() const noexcept { return at(len_ - 1); }
    int count(Letter a) const noexcept;

    // Letters [from, to).
    Word sub(int from, int to) const;
    Word append(Letter a) const;
    Word prepend(Letter a) const;
    friend Word operator*(const Word &u, const Word &v);

    Word reversed() const;
    Word swapped() const;

    // Empty, or starts with e1.
    bool in_h1() const noexcept { return len_ == 0 || front() == Letter::E1; }
    // Empty, or starts with e1 and ends with e0.
    bool in_h0() const noexcept { return len_ == 0 || (front() == Letter::E1 && back() == Letter::E0); }

    // Shorter words first; among equal lengths e1 sorts before e0.
    friend bool operator<(const Word &a, const Word &b) noexcept
    {
        return a.len_ != b.len_ ? a.len_ < b.len_ : a.bits_ > b.bits_;
    }
    friend bool operator==(const Word &, const Word &) = default;

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

// e_k = e1 e0^{k1-1} ... e1 e0^{kr-1}
Word word_of_index(const Index &k);
// Inverse of word_of_index on H^1 words; DomainError otherwise.
Index index_of_word(const Word &w);
// "y1y0" style; "1" for the empty word.
std::string to_string(const Word &w);
Word parse_word(const std::string &text);

struct WordHash
{
    std::size_t operator()(const Word &w) const noexcept
    {
        return std::hash<std::uint64_t>{}(w.bits() * 131u + static_cast<std::uint64_t>(w.length()));
    }
};

} // namespace mzvkit

#endif
