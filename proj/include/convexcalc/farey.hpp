#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "convexcalc/checked.hpp"
#include "convexcalc/errors.hpp"
#include "convexcalc/rational.hpp"

namespace convexcalc::farey {

// A slope is a line through the origin of R^2 spanned by a primitive
// integer vector (p, q), taken up to sign.  Its numeric value is q/p, so
// (m,1) has value 1/m, (1,0) is 0 and (0,1) is the slope at infinity.
// Canonical representative: p > 0, or (p, q) = (0, 1).
class Slope {
public:
    // Canonicalizes (p, q): divides by gcd, fixes the sign.
    Slope(std::int64_t p, std::int64_t q);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    bool is_infinity() const { return p_ == 0; }
    bool is_zero() const { return q_ == 0; }

    // Value negation q/p -> -q/p.  Fixes 0 and infinity.
    Slope negated() const { return Slope(p_, q_ == 0 ? 0 : checked_neg(q_)); }

    // Value reciprocal q/p -> p/q on the extended line (1/0 = inf, 1/inf = 0).
    Slope reciprocal() const { return Slope(q_, p_); }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

    // Text form: "inf" for (0,1); a bare integer q when p == 1; else "q/p".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
        return os << s.str();
    }

    static Slope infinity() { return Slope(0, 1); }
    static Slope zero() { return Slope(1, 0); }
    static Slope integer(std::int64_t k) { return Slope(1, k); }
    // 1/m as a slope, i.e. the vector (m, 1); m = 0 gives infinity.
    static Slope one_over(std::int64_t m) { return Slope(m, 1); }

    // Parses "inf", an integer, or "a/b" (numerator/denominator of the
    // value, not necessarily canonical).
    static Slope parse(const std::string& text);

private:
    std::int64_t p_, q_;
};

// Total order of slope VALUES on the extended line with infinity on top:
// -inf < ... < -1 < 0 < 1 < ... < inf.  Used by the circular predicates.
int value_compare(const Slope& a, const Slope& b);

// 2x2 integer matrix acting on slopes; every matrix the engine handles has
// determinant +1 (checked at construction).
class GluingMatrix {
public:
    GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    GluingMatrix inverse() const { return GluingMatrix(d_, checked_neg(b_), checked_neg(c_), a_); }

    friend GluingMatrix operator*(const GluingMatrix& m, const GluingMatrix& n) {
        return GluingMatrix(
            checked_add(checked_mul(m.a_, n.a_), checked_mul(m.b_, n.c_)),
            checked_add(checked_mul(m.a_, n.b_), checked_mul(m.b_, n.d_)),
            checked_add(checked_mul(m.c_, n.a_), checked_mul(m.d_, n.c_)),
            checked_add(checked_mul(m.c_, n.b_), checked_mul(m.d_, n.d_)));
    }

    friend bool operator==(const GluingMatrix& m, const GluingMatrix& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }
    friend bool operator!=(const GluingMatrix& m, const GluingMatrix& n) { return !(m == n); }

    static GluingMatrix identity() { return GluingMatrix(1, 0, 0, 1); }

    // Text form "[[a,b],[c,d]]", also the accepted parse syntax.
    std::string str() const;
    static GluingMatrix parse(const std::string& text);

private:
    std::int64_t a_, b_, c_, d_;
};

// Matrix action on a slope: canonical(A * (p,q)^T).
Slope apply(const GluingMatrix& m, const Slope& s);

// Geometric intersection number |p_s q_t - p_t q_s|; zero iff s == t.
std::int64_t intersection_number(const Slope& s, const Slope& t);

// Mediant of the canonical representatives.
Slope mediant(const Slope& a, const Slope& b);

enum class ArcDirection { clockwise, counterclockwise };

// An oriented arc of the circle Q u {inf}.  "Clockwise" is the direction of
// increasing value; passing infinity wraps around to large negatives.  (The
// counterclockwise direction decreases and wraps from large negatives to
// infinity.)  This is the orientation under which a bypass attached on the
// front face walks the dividing slope to its first Farey neighbor.
struct SlopeArc {
    SlopeArc(Slope from_, Slope to_, ArcDirection dir_);
    Slope from;
    Slope to;
    ArcDirection dir;
};

// Closed-arc membership, wrap through infinity included.
bool arc_contains(const SlopeArc& arc, const Slope& s);
// Same with both endpoints excluded.
bool open_arc_contains(const SlopeArc& arc, const Slope& s);

// Lazy ordered walk over the Farey neighbors of arc.to lying on the open
// arc, starting nearest arc.from and converging toward arc.to.  The walk
// requires arc.to == s; the first element always exists.
class FareyNeighborWalk {
public:
    explicit FareyNeighborWalk(const SlopeArc& arc);
    Slope next();

private:
    Slope s_;
    std::int64_t tp_, tq_; // current neighbor vector, moves by +/- s each step
    int step_;             // +1 toward s for counterclockwise arcs, -1 for clockwise
};

// First Farey neighbor of arc.to on the open arc.
Slope first_farey_neighbor(const SlopeArc& arc);

// First k neighbors, for display and tests.
std::vector<Slope> farey_neighbors(const SlopeArc& arc, int limit);

// Deterministic change of basis B (det +1) with apply(B, s) == target.
// Among all candidates B is chosen with minimal |a|+|b|+|c|+|d|, ties broken
// toward the representative whose first nonzero entry of (a, b) is positive,
// then toward the smaller shear parameter.
GluingMatrix normalize_to(const Slope& s, const Slope& target);

} // namespace convexcalc::farey
