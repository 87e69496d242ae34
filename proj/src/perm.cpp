#include "bisetring/perm.hpp"

#include <stdexcept>

namespace bisetring {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    if (!is_valid_image_array(images_))
        throw std::invalid_argument("Permutation: image array is not a bijection");
}

bool Permutation::is_valid_image_array(const std::vector<std::uint32_t>& images) {
    std::vector<bool> seen(images.size(), false);
    for (auto x : images) {
        if (x >= images.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Permutation Permutation::identity(std::uint32_t degree) {
    std::vector<std::uint32_t> im(degree);
    for (std::uint32_t i = 0; i < degree; ++i) im[i] = i;
    Permutation p;
    p.images_ = std::move(im);
    return p;
}

bool Permutation::is_identity() const {
    for (std::uint32_t i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::uint32_t i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation p;
    p.images_.resize(a.images_.size());
    for (std::uint32_t i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
    return p;
}

std::string Permutation::to_cycles() const {
    std::string s;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        s += "(";
        std::uint32_t x = i;
        bool first = true;
        do {
            if (!first) s += " ";
            s += std::to_string(x);
            seen[x] = true;
            x = images_[x];
            first = false;
        } while (x != i);
        s += ")";
    }
    return s.empty() ? "()" : s;
}

} // namespace bisetring
