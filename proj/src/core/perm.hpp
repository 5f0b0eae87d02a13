#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "ints.hpp"

namespace esch {

// An element of S3 stored by its image tuple (sigma(1),sigma(2),sigma(3)),
// 1-based. Composition is (sigma*tau)(i) = sigma(tau(i)).
class Perm3 {
public:
    constexpr Perm3() : img_{1, 2, 3} {}
    constexpr explicit Perm3(std::array<int, 3> img) : img_(img) {}

    constexpr int operator()(int i) const { return img_[i - 1]; }
    constexpr const std::array<int, 3>& image() const { return img_; }

    constexpr bool even() const {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv % 2 == 0;
    }

    constexpr Perm3 operator*(const Perm3& tau) const {
        return Perm3({img_[tau.img_[0] - 1], img_[tau.img_[1] - 1], img_[tau.img_[2] - 1]});
    }

    constexpr Perm3 inverse() const {
        std::array<int, 3> inv{};
        for (int i = 0; i < 3; ++i) inv[img_[i] - 1] = i + 1;
        return Perm3(inv);
    }

    constexpr friend bool operator==(const Perm3&, const Perm3&) = default;

    std::string cycles() const {
        if (img_ == std::array<int, 3>{1, 2, 3}) return "id";
        if (img_ == std::array<int, 3>{2, 1, 3}) return "(12)";
        if (img_ == std::array<int, 3>{3, 2, 1}) return "(13)";
        if (img_ == std::array<int, 3>{1, 3, 2}) return "(23)";
        if (img_ == std::array<int, 3>{2, 3, 1}) return "(123)";
        return "(132)";
    }

    static Perm3 from_cycles(const std::string& s) {
        for (const Perm3& p : all())
            if (p.cycles() == s) return p;
        if (s == "Id" || s == "ID" || s == "()") return Perm3();
        throw std::invalid_argument("Perm3: unknown cycle notation '" + s + "'");
    }

    // Fixed iteration order: id, (12), (13), (23), (123), (132).
    static const std::array<Perm3, 6>& all() {
        static const std::array<Perm3, 6> k = {
            Perm3({1, 2, 3}), Perm3({2, 1, 3}), Perm3({3, 2, 1}),
            Perm3({1, 3, 2}), Perm3({2, 3, 1}), Perm3({3, 1, 2})};
        return k;
    }

    int index() const {
        const auto& a = all();
        for (int i = 0; i < 6; ++i)
            if (a[i] == *this) return i;
        return -1;
    }

private:
    std::array<int, 3> img_;
};

using Vec3 = std::array<i64, 3>;

inline Vec3 permute(const Vec3& x, const Perm3& sigma) {
    return {x[sigma(1) - 1], x[sigma(2) - 1], x[sigma(3) - 1]};
}

inline Vec3 sub(const Vec3& x, const Vec3& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

// The two permutations with sigma(i) = j, for 1 <= i,j <= 3. Each pair has
// one even and one odd member; returned as (even, odd).
std::pair<Perm3, Perm3> face_vertices(int i, int j);

}  // namespace esch
