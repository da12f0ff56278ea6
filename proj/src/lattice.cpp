#include "dp5/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace dp5 {

IntMat SurfaceLattice::gram() const {
    IntMat g = IntMat::Zero(rank(), rank());
    g(0, 0) = 1;
    for (int i = 1; i < rank(); ++i) g(i, i) = -1;
    return g;
}

DivisorClass::DivisorClass(long d, std::vector<long> m) : d_(d) {
    m_ = IntVec(static_cast<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) m_(static_cast<int>(i)) = m[i];
}

DivisorClass DivisorClass::zero(int n) { return DivisorClass(Int(0), IntVec::Zero(n)); }

DivisorClass DivisorClass::line(int n) { return DivisorClass(Int(1), IntVec::Zero(n)); }

DivisorClass DivisorClass::exceptional(int n, int i) {
    if (i < 1 || i > n) throw IndexError("exceptional curve index out of range");
    IntVec m = IntVec::Zero(n);
    m(i - 1) = -1;
    return DivisorClass(Int(0), std::move(m));
}

static void check_same_lattice(const DivisorClass& a, const DivisorClass& b) {
    if (a.blowups() != b.blowups())
        throw DimensionError("divisor classes live on different lattices (" +
                             std::to_string(a.blowups()) + " vs " + std::to_string(b.blowups()) +
                             " blowups)");
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_same_lattice(*this, o);
    return DivisorClass(d_ + o.d_, m_ + o.m_);
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    check_same_lattice(*this, o);
    return DivisorClass(d_ - o.d_, m_ - o.m_);
}

DivisorClass DivisorClass::operator-() const { return DivisorClass(-d_, -m_); }

DivisorClass DivisorClass::operator*(const Int& k) const {
    IntVec m = m_;
    for (int i = 0; i < m.size(); ++i) m(i) *= k;
    return DivisorClass(d_ * k, std::move(m));
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    if (blowups() != o.blowups() || d_ != o.d_) return false;
    for (int i = 0; i < m_.size(); ++i)
        if (m_(i) != o.m_(i)) return false;
    return true;
}

bool DivisorClass::operator<(const DivisorClass& o) const {
    check_same_lattice(*this, o);
    if (d_ != o.d_) return d_ < o.d_;
    for (int i = 0; i < m_.size(); ++i)
        if (m_(i) != o.m_(i)) return m_(i) < o.m_(i);
    return false;
}

bool DivisorClass::is_zero() const {
    if (d_ != 0) return false;
    for (int i = 0; i < m_.size(); ++i)
        if (m_(i) != 0) return false;
    return true;
}

std::string DivisorClass::str() const {
    std::ostringstream out;
    out << "(" << d_ << ";";
    for (int i = 0; i < m_.size(); ++i) {
        if (i) out << ",";
        out << m_(i);
    }
    out << ")";
    return out.str();
}

DivisorClass DivisorClass::parse(const std::string& text) {
    // accepts "(d;m1,m2,...)" or "d;m1,m2,..."
    std::string s = text;
    if (!s.empty() && s.front() == '(') s.erase(s.begin());
    if (!s.empty() && s.back() == ')') s.pop_back();
    const auto semi = s.find(';');
    if (semi == std::string::npos) throw ConfigError("divisor class needs the form d;m1,m2,...: " + text);
    auto parse_int = [&](const std::string& tok) -> Int {
        std::string t = tok;
        t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == '\t'; }), t.end());
        if (t.empty()) throw ConfigError("empty integer in divisor class: " + text);
        try {
            return Int(t);
        } catch (const std::exception&) {
            throw ConfigError("bad integer '" + tok + "' in divisor class: " + text);
        }
    };
    const Int d = parse_int(s.substr(0, semi));
    std::vector<Int> ms;
    std::string rest = s.substr(semi + 1);
    const bool blank = rest.find_first_not_of(" \t") == std::string::npos;
    if (!blank) { // blank tail means zero blowups
        std::string tok;
        for (char c : rest) {
            if (c == ',') {
                ms.push_back(parse_int(tok));
                tok.clear();
            } else {
                tok += c;
            }
        }
        ms.push_back(parse_int(tok));
    }
    IntVec m(static_cast<int>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i) m(static_cast<int>(i)) = ms[i];
    return DivisorClass(d, std::move(m));
}

Int intersect(const DivisorClass& a, const DivisorClass& b) {
    check_same_lattice(a, b);
    return a.degree() * b.degree() - a.mults().dot(b.mults());
}

DivisorClass canonical_class(int n_blowups) {
    IntVec m = IntVec::Constant(n_blowups, Int(-1));
    return DivisorClass(Int(-3), std::move(m));
}

DivisorClass canonical_class(const SurfaceLattice& lat) { return canonical_class(lat.n_blowups); }

Int adjunction_genus(const DivisorClass& d) {
    const DivisorClass k = canonical_class(d.blowups());
    const Int pairing = intersect(d, d + k);
    assert(pairing % 2 == 0 && "D(D+K) must be even");
    return 1 + pairing / 2;
}

DivisorClass halve(const DivisorClass& d) {
    if (d.degree() % 2 != 0)
        throw ParityError("degree component " + d.degree().str() + " of " + d.str() + " is odd");
    IntVec m(d.blowups());
    for (int i = 0; i < m.size(); ++i) {
        if (d.mults()(i) % 2 != 0)
            throw ParityError("component " + std::to_string(i + 1) + " of " + d.str() + " is odd");
        m(i) = d.mults()(i) / 2;
    }
    return DivisorClass(d.degree() / 2, std::move(m));
}

DivisorClass cremona_quadratic(const DivisorClass& d, const std::array<int, 3>& base) {
    const int n = d.blowups();
    for (int idx : base)
        if (idx < 1 || idx > n) throw IndexError("cremona base index out of range: " + std::to_string(idx));
    if (base[0] == base[1] || base[0] == base[2] || base[1] == base[2])
        throw IndexError("cremona base indices must be distinct");

    const Int mi = d.mult(base[0]), mj = d.mult(base[1]), mk = d.mult(base[2]);
    IntVec m = d.mults();
    m(base[0] - 1) = d.degree() - mj - mk;
    m(base[1] - 1) = d.degree() - mi - mk;
    m(base[2] - 1) = d.degree() - mi - mj;
    return DivisorClass(2 * d.degree() - mi - mj - mk, std::move(m));
}

} // namespace dp5
