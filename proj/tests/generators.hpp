#ifndef MZVKIT_TESTS_GENERATORS_HPP
#define MZVKIT_TESTS_GENERATORS_HPP

#include <random>
#include <vector>

#include <mzvkit/indices.hpp>
#include <mzvkit/word_algebra.hpp>

namespace gen
{

// Every index of weight 1..max_wt.
inline std::vector<mzvkit::Index> all_indices(int max_wt)
{
    std::vector<mzvkit::Index> out;
    for (int w = 1; w <= max_wt; ++w) {
        for (const mzvkit::Index &k : mzvkit::coarsenings(mzvkit::ones(w))) {
            out.push_back(k);
        }
    }
    return out;
}

// Random combination of H^1 words (empty or starting with e1) of length <= max_len.
inline mzvkit::QPoly random_h1(std::mt19937 &rng, int max_len)
{
    mzvkit::QPoly p;
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < terms; ++i) {
        const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
        std::uint64_t bits = len ? rng() % (std::uint64_t{1} << len) : 0;
        if (len) {
            bits |= std::uint64_t{1} << (len - 1);
        }
        mzvkit::Rational c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        c.canonicalize();
        p.add(mzvkit::Word::from_bits(bits, len), c);
    }
    return p;
}

} // namespace gen

#endif
