#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzrank/polynomial.hpp"

namespace syzrank {

enum class PointKind { Affine, Projective, Cox };

// A tuple of field elements tagged by how it should be read. Projective
// and Cox points are nonzero vectors up to the relevant torus action.
template <typename F>
struct Point {
    PointKind kind = PointKind::Affine;
    std::vector<typename F::Element> coords;

    std::size_t size() const { return coords.size(); }
};

template <typename F>
bool is_zero_vector(const F& K, const std::vector<typename F::Element>& v) {
    for (const auto& c : v)
        if (!K.is_zero(c)) return false;
    return true;
}

// First index with a nonzero coordinate; throws on the zero vector.
template <typename F>
std::size_t leading_coordinate(const F& K, const Point<F>& p) {
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        if (!K.is_zero(p.coords[i])) return i;
    throw std::invalid_argument("zero vector is not a projective point");
}

// Scales a projective point so its leading coordinate is 1.
template <typename F>
Point<F> normalize_projective(const F& K, const Point<F>& p) {
    std::size_t lead = leading_coordinate(K, p);
    Point<F> q = p;
    auto inv = K.inv(p.coords[lead]);
    for (auto& c : q.coords) c = K.mul(c, inv);
    return q;
}

template <typename F>
std::string point_string(const F& K, const Point<F>& p) {
    bool proj = p.kind == PointKind::Projective;
    std::string s = proj ? "[" : "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += proj ? " : " : ", ";
        s += K.to_string(p.coords[i]);
    }
    s += proj ? "]" : ")";
    return s;
}

}  // namespace syzrank
