#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "syzrank/field.hpp"

namespace syzrank {

// Degree of a homogeneous object: one entry under the standard grading,
// r entries under a Picard-group grading.
using DegreeVector = std::vector<long>;

struct StandardGrading {
    bool operator==(const StandardGrading&) const = default;
};

// Z^r-grading of a Cox ring: variable_degrees[i] is deg(x_i), length r.
struct PicGrading {
    std::size_t rank = 0;
    std::vector<DegreeVector> variable_degrees;

    bool operator==(const PicGrading&) const = default;
};

using Grading = std::variant<StandardGrading, PicGrading>;

template <typename F>
class Ring {
public:
    using Field = F;

    Ring(F field, std::vector<std::string> vars, Grading grading = StandardGrading{},
         std::uint64_t exponent_limit = 65536)
        : field_(std::move(field)),
          vars_(std::move(vars)),
          grading_(std::move(grading)),
          exponent_limit_(exponent_limit) {
        if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
        std::set<std::string> seen;
        for (const auto& v : vars_) {
            if (v.empty() || !seen.insert(v).second)
                throw std::invalid_argument("ring variable names must be distinct and nonempty");
        }
        if (const auto* pic = std::get_if<PicGrading>(&grading_)) {
            if (pic->rank == 0 || pic->variable_degrees.size() != vars_.size())
                throw std::invalid_argument("Pic grading shape mismatch");
            for (const auto& d : pic->variable_degrees)
                if (d.size() != pic->rank)
                    throw std::invalid_argument("Pic grading shape mismatch");
        }
        if (exponent_limit_ < 1 || exponent_limit_ > (1u << 30))
            throw std::invalid_argument("exponent limit out of range");
    }

    const F& field() const { return field_; }
    std::size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_.at(i); }
    const Grading& grading() const { return grading_; }
    std::uint64_t exponent_limit() const { return exponent_limit_; }

    bool standard_graded() const { return std::holds_alternative<StandardGrading>(grading_); }
    const PicGrading* pic_grading() const { return std::get_if<PicGrading>(&grading_); }

    std::size_t index_of(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
        return static_cast<std::size_t>(it - vars_.begin());
    }

    bool same_structure(const Ring& o) const {
        return field_ == o.field_ && vars_ == o.vars_ && grading_ == o.grading_ &&
               exponent_limit_ == o.exponent_limit_;
    }

private:
    F field_;
    std::vector<std::string> vars_;
    Grading grading_;
    std::uint64_t exponent_limit_;
};

template <typename F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <typename F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars) {
    return std::make_shared<const Ring<F>>(std::move(field), std::move(vars));
}

template <typename F>
RingPtr<F> make_cox_ring(F field, std::vector<std::string> vars,
                         std::vector<DegreeVector> variable_degrees) {
    if (variable_degrees.empty()) throw std::invalid_argument("empty Pic grading");
    PicGrading g{variable_degrees.front().size(), std::move(variable_degrees)};
    return std::make_shared<const Ring<F>>(std::move(field), std::move(vars), Grading(g));
}

}  // namespace syzrank
