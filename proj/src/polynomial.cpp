#include "clusterhodge/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int degree, const Integer& c) {
    std::vector<Integer> v(static_cast<std::size_t>(degree + 1), 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::coefficient(int k) const {
    return (k < 0 || k >= static_cast<int>(c_.size())) ? Integer(0) : c_[static_cast<std::size_t>(k)];
}

Integer IntPolynomial::operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Integer> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pow(int e) const {
    IntPolynomial acc = constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k > 0) os << var;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

void BivariatePoly::add(int i, int j, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(std::make_pair(i, j), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Integer BivariatePoly::coefficient(int i, int j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? Integer(0) : it->second;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly out;
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : o.terms) out.add(a.first + b.first, a.second + b.second, ca * cb);
    return out;
}

BivariatePoly BivariatePoly::times_one_plus_xy(int e) const {
    BivariatePoly out = *this;
    for (int t = 0; t < e; ++t) {
        BivariatePoly next = out;
        for (const auto& [k, c] : out.terms) next.add(k.first + 1, k.second + 1, c);
        out = std::move(next);
    }
    return out;
}

BivariatePoly BivariatePoly::divided_by_one_plus_xy(int e) const {
    BivariatePoly out = *this;
    for (int t = 0; t < e; ++t) {
        // Terms sharing x - y form a univariate chain in xy; divide each chain by (1 + t).
        BivariatePoly rest = out;
        BivariatePoly q;
        int top = 0;
        for (const auto& kv : out.terms) top = std::max(top, kv.first.first);
        while (!rest.terms.empty()) {
            auto [key, c] = *rest.terms.begin();  // lowest x-degree, hence lowest in its chain
            if (key.first >= top) throw Error(ErrorKind::InvalidArgument, "inexact division by 1 + xy");
            q.add(key.first, key.second, c);
            rest.add(key.first, key.second, -c);
            rest.add(key.first + 1, key.second + 1, -c);
        }
        out = std::move(q);
    }
    return out;
}

std::string BivariatePoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        first = false;
        Integer mag = abs(c);
        if (mag != 1 || (k.first == 0 && k.second == 0)) os << mag.get_str();
        if (k.first > 0) os << 'x' << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) os << 'y' << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

}  // namespace clusterhodge
