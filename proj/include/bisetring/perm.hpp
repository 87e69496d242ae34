#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bisetring {

// Permutation of {0..degree-1}, stored as its image array. Composition is
// (a*b)(x) = a(b(x)): b acts first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::uint32_t degree);
    static bool is_valid_image_array(const std::vector<std::uint32_t>& images);

    std::uint32_t degree() const { return std::uint32_t(images_.size()); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

    // disjoint cycle notation on 0-based points, e.g. "(0 1 2)(3 4)";
    // identity renders as "()"
    std::string to_cycles() const;

private:
    std::vector<std::uint32_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p.images()) {
            h ^= x + 0x9e3779b9;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace bisetring
