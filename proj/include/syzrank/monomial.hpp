#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace syzrank {

// Exponent vector of fixed arity. Total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
        for (auto e : exps_) deg_ += e;
    }

    static Monomial one(std::size_t arity) {
        return Monomial(std::vector<std::uint32_t>(arity, 0));
    }
    static Monomial variable(std::size_t arity, std::size_t i, std::uint32_t e = 1) {
        std::vector<std::uint32_t> v(arity, 0);
        v.at(i) = e;
        return Monomial(std::move(v));
    }

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    Monomial mul(const Monomial& o, std::uint64_t limit) const {
        check_arity(o);
        std::vector<std::uint32_t> v(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            std::uint64_t s = std::uint64_t(exps_[i]) + o.exps_[i];
            if (s > limit) throw std::overflow_error("monomial exponent exceeds ring limit");
            v[i] = static_cast<std::uint32_t>(s);
        }
        return Monomial(std::move(v));
    }

    bool divides(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o, requires o | this
    Monomial quotient(const Monomial& o) const {
        check_arity(o);
        std::vector<std::uint32_t> v(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (o.exps_[i] > exps_[i]) throw std::domain_error("non-divisible monomial quotient");
            v[i] = exps_[i] - o.exps_[i];
        }
        return Monomial(std::move(v));
    }

    Monomial lcm(const Monomial& o) const {
        check_arity(o);
        std::vector<std::uint32_t> v(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            v[i] = std::max(exps_[i], o.exps_[i]);
        return Monomial(std::move(v));
    }

    bool coprime(const Monomial& o) const {
        check_arity(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] != 0 && o.exps_[i] != 0) return false;
        return true;
    }

private:
    void check_arity(const Monomial& o) const {
        if (exps_.size() != o.exps_.size())
            throw std::invalid_argument("monomial arity mismatch");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t deg_ = 0;
};

namespace detail {
inline void enumerate_degree(std::size_t arity, std::uint32_t deg, std::size_t pos,
                             std::vector<std::uint32_t>& cur, std::vector<Monomial>& out) {
    if (pos + 1 == arity) {
        cur[pos] = deg;
        out.emplace_back(std::vector<std::uint32_t>(cur));
        return;
    }
    for (std::uint32_t e = deg;; --e) {
        cur[pos] = e;
        enumerate_degree(arity, deg - e, pos + 1, cur, out);
        if (e == 0) break;
    }
}
}  // namespace detail

// All monomials of the given total degree, first exponent descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t deg) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(arity, 0);
    detail::enumerate_degree(arity, deg, 0, cur, out);
    return out;
}

}  // namespace syzrank
