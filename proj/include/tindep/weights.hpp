#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tindep/graph.hpp"

namespace tindep {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "3/4" or "0". Throws InputError on anything else.
Rational parse_rational(std::string_view text);
std::string rational_string(const Rational& r);

/// Nonnegative exact vertex weights.
class WeightFn {
public:
    WeightFn() = default;
    explicit WeightFn(std::vector<Rational> values);

    static WeightFn uniform(int n);
    static WeightFn uniform_on(int n, const VertexSet& support);
    static WeightFn dirac(int n, Vertex v);

    int size() const { return static_cast<int>(w_.size()); }
    const Rational& operator[](Vertex v) const { return w_[static_cast<std::size_t>(v)]; }
    const std::vector<Rational>& values() const { return w_; }

    Rational total() const;
    Rational of(const VertexSet& x) const;
    /// Total weight exactly 1.
    bool normal() const { return total() == 1; }

private:
    std::vector<Rational> w_;
};

}  // namespace tindep
