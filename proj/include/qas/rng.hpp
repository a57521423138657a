#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qas {

/// Seeded random source with distribution helpers that depend only on the
/// engine's bit stream, so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Uniform integer in [0, n), unbiased (rejection sampling).
    std::uint64_t integer(std::uint64_t n) {
        if (n == 0) {
            throw std::invalid_argument("Rng::integer: n must be positive");
        }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Draw from a categorical distribution by CDF inversion. The
    /// probabilities are renormalized by their sum, so small numerical
    /// drift from exact 1 is harmless.
    std::size_t categorical(std::span<const double> probs) {
        if (probs.empty()) {
            throw std::invalid_argument("Rng::categorical: empty distribution");
        }
        double total = 0.0;
        for (double p : probs) total += p;
        double u = uniform() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return i;
        }
        return probs.size() - 1;
    }

    /// k distinct indices drawn uniformly from [0, n) (partial Fisher-Yates).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        if (k > n) {
            throw std::invalid_argument("Rng::sample_without_replacement: k exceeds population");
        }
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t j = i + static_cast<std::size_t>(integer(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(integer(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    std::string state() const {
        std::ostringstream oss;
        oss << engine_;
        return oss.str();
    }

    void set_state(const std::string& text) {
        std::istringstream iss(text);
        iss >> engine_;
        if (iss.fail()) {
            throw std::invalid_argument("Rng::set_state: malformed engine state");
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Stable derivation of per-subsystem seeds from one master seed (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace qas
