#include "clusterhodge/exterior.hpp"

#include <sstream>

namespace clusterhodge {

int wedge_sign(Mask a, Mask b) {
    if ((a & b) != 0) return 0;
    int inversions = 0;
    for (int x : elements(b)) inversions += count_above(a, x);
    return inversions % 2 == 0 ? 1 : -1;
}

ExteriorForm ExteriorForm::monomial(Mask m, const Rational& c) {
    ExteriorForm f;
    f.add_term(m, c);
    return f;
}

ExteriorForm ExteriorForm::one_form(const SparseVector& coeffs) {
    ExteriorForm f;
    for (const auto& e : coeffs) f.add_term(bit(e.index), e.value);
    return f;
}

Rational ExteriorForm::coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorForm::add_term(Mask m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& o) const {
    ExteriorForm f = *this;
    for (const auto& [m, c] : o.terms_) f.add_term(m, c);
    return f;
}

ExteriorForm ExteriorForm::operator-(const ExteriorForm& o) const { return *this + o * Rational(-1); }

ExteriorForm ExteriorForm::operator*(const Rational& c) const {
    ExteriorForm f;
    if (c == 0) return f;
    for (const auto& [m, v] : terms_) f.terms_.emplace(m, v * c);
    return f;
}

ExteriorForm ExteriorForm::wedge(const ExteriorForm& o) const {
    ExteriorForm f;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            const int s = wedge_sign(a, b);
            if (s != 0) f.add_term(a | b, s > 0 ? ca * cb : Rational(-(ca * cb)));
        }
    return f;
}

ExteriorForm ExteriorForm::contract(int j) const {
    ExteriorForm f;
    for (const auto& [m, c] : terms_) {
        if ((m & bit(j)) == 0) continue;
        f.add_term(m & ~bit(j), count_below(m, j) % 2 == 0 ? c : Rational(-c));
    }
    return f;
}

std::string ExteriorForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i : elements(m)) os << " dx" << i + 1;
    }
    return os.str();
}

}  // namespace clusterhodge
