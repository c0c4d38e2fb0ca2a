#include "tindep/weights.hpp"

#include <cctype>

#include "tindep/error.hpp"

namespace tindep {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("bad rational '" + std::string(text) + "'");
    boost::multiprecision::cpp_int d(std::string{den});
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(boost::multiprecision::cpp_int(std::string{num}), d);
}

std::string rational_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

WeightFn::WeightFn(std::vector<Rational> values) : w_(std::move(values)) {
    for (const auto& x : w_)
        if (x < 0) throw InputError("negative vertex weight");
}

WeightFn WeightFn::uniform(int n) {
    if (n <= 0) throw InputError("uniform weights need at least one vertex");
    return WeightFn(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

WeightFn WeightFn::uniform_on(int n, const VertexSet& support) {
    if (support.empty()) throw InputError("uniform weights on an empty set");
    std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
    Rational share(1, static_cast<long>(support.size()));
    for (Vertex v : support) {
        if (v < 0 || v >= n) throw InputError("weight support out of range");
        w[static_cast<std::size_t>(v)] = share;
    }
    return WeightFn(std::move(w));
}

WeightFn WeightFn::dirac(int n, Vertex v) { return uniform_on(n, {v}); }

Rational WeightFn::total() const {
    Rational sum = 0;
    for (const auto& x : w_) sum += x;
    return sum;
}

Rational WeightFn::of(const VertexSet& x) const {
    Rational sum = 0;
    for (Vertex v : x) sum += w_[static_cast<std::size_t>(v)];
    return sum;
}

}  // namespace tindep
