#pragma once

#include <map>

#include "grweyl/modules.hpp"

namespace grweyl {

/// An element of the Grothendieck ring of finitely generated graded
/// C-modules, in coordinates over its Z-basis {[C]} union {u_m = [C({m})]}.
/// The ring structure is the bilinear extension of
///   u_m * u_n = 1 if m = n, and u_m + u_n - 1 otherwise.
class K0Elem {
public:
    K0Elem() = default; // zero

    static K0Elem zero() { return {}; }
    static K0Elem unit(Int c = 1); // c * [C]
    static K0Elem point(std::int64_t m, Int c = 1); // c * u_m

    const Int& unit_coeff() const { return unit_; }
    const std::map<std::int64_t, Int>& point_coeffs() const { return pts_; }
    bool is_zero() const { return unit_ == 0 && pts_.empty(); }

    /// Sum of all coefficients.
    Int rank() const;

    K0Elem operator-() const;
    K0Elem& operator+=(const K0Elem& o);
    K0Elem& operator-=(const K0Elem& o);
    K0Elem& operator*=(const K0Elem& o);
    friend K0Elem operator+(K0Elem a, const K0Elem& b) { return a += b; }
    friend K0Elem operator-(K0Elem a, const K0Elem& b) { return a -= b; }
    friend K0Elem operator*(K0Elem a, const K0Elem& b) { return a *= b; }

    friend bool operator==(const K0Elem&, const K0Elem&) = default;

private:
    Int unit_ = 0;
    std::map<std::int64_t, Int> pts_; // no zero coefficients

    void add_point(std::int64_t m, const Int& c);
};

/// A formal Z-combination of basis symbols u_I, I a finite set: an element
/// of the integral group ring of the grading group. Multiplication is
/// u_I * u_J = u_{I xor J}.
class GroupRingExpr {
public:
    GroupRingExpr() = default;

    static GroupRingExpr u(const FinSet& i, Int c = 1);

    const std::map<FinSet, Int>& terms() const { return terms_; }

    GroupRingExpr operator-() const;
    GroupRingExpr& operator+=(const GroupRingExpr& o);
    GroupRingExpr& operator-=(const GroupRingExpr& o);
    GroupRingExpr& operator*=(const GroupRingExpr& o);
    friend GroupRingExpr operator+(GroupRingExpr a, const GroupRingExpr& b) { return a += b; }
    friend GroupRingExpr operator-(GroupRingExpr a, const GroupRingExpr& b) { return a -= b; }
    friend GroupRingExpr operator*(GroupRingExpr a, const GroupRingExpr& b) { return a *= b; }

    friend bool operator==(const GroupRingExpr&, const GroupRingExpr&) = default;

private:
    std::map<FinSet, Int> terms_; // no zero coefficients

    void add_term(const FinSet& i, const Int& c);
};

/// The quotient map onto basis coordinates: u_I -> sum_{i in I} u_i - (|I|-1).
K0Elem k0_reduce(const GroupRingExpr& e);

/// [C(I_1) + ... ] = sum of reduced u_{I_r}; [X(n)] = 1 - u_n;
/// [Y(n)] = u_n - 1; [O(lambda)] = 0.
K0Elem class_of(const CatModule& m);
K0Elem class_of(const ProjMod& p);
K0Elem class_of(const SimpleMod& s);

/// Writes a rank-zero element as sum c_m * [X(m)]; throws std::domain_error
/// on nonzero rank.
std::map<std::int64_t, Int> p_decompose(const K0Elem& a);

} // namespace grweyl
