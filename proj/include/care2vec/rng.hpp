#ifndef CARE2VEC_RNG_HPP
#define CARE2VEC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "care2vec/matrix.hpp"

namespace care2vec {

/// Seed-reproducible generator. The algorithm is SplitMix64
/// (Steele/Lea/Vigna): state advances by the 64-bit golden-gamma and
/// the output mixing is fixed integer arithmetic, so identical seeds
/// give identical streams on every platform. The standard library
/// engines/distributions are deliberately not used anywhere random
/// values can reach results: uniform_real_distribution and shuffle are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    static std::string algorithm_id() { return "splitmix64"; }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer in [0, n), n >= 1, by the multiply-high method.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    /// Independent child stream: the child seed is the SplitMix64 mix
    /// of this generator's seed advanced by (stream + 1) gammas. Used
    /// wherever work fans out (CV folds, grid cells, per-epoch
    /// shuffling) so parallel order cannot change results.
    Rng child(std::uint64_t stream) const {
        Rng g(seed_ + (stream + 1) * 0x9E3779B97F4A7C15ULL);
        return Rng(g.next_u64());
    }

    /// Fisher-Yates with the bounded() draw above; std::shuffle is not
    /// reproducible across standard libraries.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// Glorot/uniform initialization: entries ~ U[-L, L] with
/// L = sqrt(6 / (fan_in + fan_out)). Shape is (fan_out x fan_in) to
/// match the (out_dim x in_dim) weight layout.
inline Matrix glorot_uniform(Rng& rng, std::size_t fan_in, std::size_t fan_out) {
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Matrix m(fan_out, fan_in);
    for (double& v : m.data()) v = rng.uniform(-limit, limit);
    return m;
}

} // namespace care2vec

#endif // CARE2VEC_RNG_HPP
