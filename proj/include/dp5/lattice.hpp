#pragma once

// Integer Picard-lattice arithmetic for blowups of the projective plane.
//
// A class is stored as (d; m_1..m_n) and denotes  D = d*L - sum_i m_i*E_i,
// where L is the pullback of a plane line and E_i the exceptional curves.
// In particular E_i itself is (0; ..., m_i = -1, ...).  Linear equivalence
// is plain vector equality: the lattice is torsion free.

#include <array>
#include <string>
#include <vector>

#include "dp5/numeric.hpp"

namespace dp5 {

struct SurfaceLattice {
    int n_blowups = 0;

    int rank() const { return 1 + n_blowups; }

    // diag(+1, -1, ..., -1), signature (1, n)
    IntMat gram() const;
};

class DivisorClass {
public:
    DivisorClass() : d_(0), m_(IntVec::Zero(0)) {}
    DivisorClass(Int d, IntVec m) : d_(std::move(d)), m_(std::move(m)) {}
    DivisorClass(long d, std::vector<long> m);

    static DivisorClass zero(int n);
    static DivisorClass line(int n);
    // 1-based point index, matching the usual E_1..E_n labels
    static DivisorClass exceptional(int n, int i);

    int blowups() const { return static_cast<int>(m_.size()); }
    const Int& degree() const { return d_; }
    const IntVec& mults() const { return m_; }
    const Int& mult(int i) const { return m_(i - 1); } // 1-based

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(const Int& k) const;

    bool operator==(const DivisorClass& o) const;
    bool operator!=(const DivisorClass& o) const { return !(*this == o); }
    // lexicographic on (d, m_1, ..., m_n); used for deterministic tie breaks
    bool operator<(const DivisorClass& o) const;

    bool is_zero() const;

    std::string str() const; // "(3;1,1,1,0)"
    static DivisorClass parse(const std::string& text);

private:
    Int d_;
    IntVec m_;
};

// Intersection pairing  a.d*b.d - sum a.m_i*b.m_i.
Int intersect(const DivisorClass& a, const DivisorClass& b);

// K = (-3; -1, ..., -1)
DivisorClass canonical_class(const SurfaceLattice& lat);
DivisorClass canonical_class(int n_blowups);

// Arithmetic genus 1 + D(D+K)/2; integral by the parity invariant.
Int adjunction_genus(const DivisorClass& d);

// Componentwise division by two; ParityError on any odd component.
DivisorClass halve(const DivisorClass& d);

// Quadratic Cremona map based at three of the blown-up points (1-based,
// distinct).  An involutive isometry of the lattice fixing K.
DivisorClass cremona_quadratic(const DivisorClass& d, const std::array<int, 3>& base);

} // namespace dp5
