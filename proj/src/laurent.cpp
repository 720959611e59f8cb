#include "lkit/laurent.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>

#include "lkit/errors.hpp"

namespace lkit {

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
    LaurentPoly p;
    p.add_term(coeff, exponent);
    return p;
}

long long LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long long coeff, int exponent) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& p, long long scale, int shift) {
    if (scale == 0) return;
    for (const auto& [e, c] : p.terms_) add_term(c * scale, e + shift);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(c, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        out << it->second << "*A^" << it->first;
        first = false;
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
    if (text == "0") return LaurentPoly::zero();
    LaurentPoly out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(" + ", pos);
        const std::string term =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        const size_t star = term.find("*A^");
        if (star == std::string::npos)
            fail(ErrorCode::BadReport, "bad polynomial term '" + term + "'");
        try {
            size_t used = 0;
            const long long c = std::stoll(term.substr(0, star), &used);
            if (used != star) fail(ErrorCode::BadReport, "bad coefficient in '" + term + "'");
            const std::string etext = term.substr(star + 3);
            const int e = std::stoi(etext, &used);
            if (used != etext.size()) fail(ErrorCode::BadReport, "bad exponent in '" + term + "'");
            out.add_term(c, e);
        } catch (const std::logic_error&) {
            fail(ErrorCode::BadReport, "bad polynomial term '" + term + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return out;
}

LaurentPoly bracket_delta() {
    LaurentPoly d;
    d.add_term(-1, 2);
    d.add_term(-1, -2);
    return d;
}

}  // namespace lkit
