#ifndef MZVKIT_INDICES_HPP
#define MZVKIT_INDICES_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <mzvkit/rational.hpp>

namespace mzvkit
{

// A finite tuple of positive integers (k_1, ..., k_r).
class Index
{
public:
    Index() = default;
    Index(std::initializer_list<int> parts);
    explicit Index(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    // Empty, or last part >= 2.
    bool admissible() const noexcept { return parts_.empty() || parts_.back() >= 2; }

    friend auto operator<=>(const Index &, const Index &) = default;
    friend bool operator==(const Index &, const Index &) = default;

private:
    std::vector<int> parts_;
};

// Nonnegative integer tuple; the n in k (+) n.
class ExponentTuple
{
public:
    ExponentTuple() = default;
    ExponentTuple(std::initializer_list<int> parts);
    explicit ExponentTuple(std::vector<int> parts);

    const std::vector<int> &parts() const noexcept { return parts_; }
    int depth() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;

    friend auto operator<=>(const ExponentTuple &, const ExponentTuple &) = default;
    friend bool operator==(const ExponentTuple &, const ExponentTuple &) = default;

private:
    std::vector<int> parts_;
};

// Finitely supported Q-linear combination of indices.
class IndexCombination
{
public:
    IndexCombination() = default;
    IndexCombination(const Index &k, Rational c = 1) { add(k, std::move(c)); }

    void add(const Index &k, const Rational &c);
    const std::map<Index, Rational> &terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    Rational coefficient(const Index &k) const;

    IndexCombination &operator+=(const IndexCombination &other);
    IndexCombination &operator*=(const Rational &c);
    friend bool operator==(const IndexCombination &, const IndexCombination &) = default;

private:
    std::map<Index, Rational> terms_;
};

Index reverse(const Index &k);
Index concat(const Index &k, const Index &l);
Index concat(const Index &a, const Index &b, const Index &c);
// (k_[i], k^[i]): the first i parts and the rest.
std::pair<Index, Index> split(const Index &k, int i);
Index oplus(const Index &k, const ExponentTuple &n);
Integer b_coeff(const Index &k, const ExponentTuple &n);
Index hoffman_dual(const Index &k);
// All indices obtained by turning commas into pluses; the first entry is k.
std::vector<Index> coarsenings(const Index &k);
// The rotations (k^[i], k_[i]) for i = 1..r, in that order.
std::vector<Index> cyclic_class(const Index &k);
Index uplus(const Index &k, const Index &l);
// {1}^m
Index ones(int m);
// All nonnegative tuples of the given depth and weight.
std::vector<ExponentTuple> exponent_tuples(int depth, int weight);

std::string to_string(const Index &k);
Index parse_index(std::string_view text);
std::string to_string(const IndexCombination &c);

} // namespace mzvkit

#endif
