#include "convexcalc/farey.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace convexcalc::farey {

Slope::Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
    if (p_ == 0 && q_ == 0) throw zero_vector_error();
    std::int64_t g = std::gcd(checked_abs(p_), checked_abs(q_));
    if (g > 1) {
        p_ /= g;
        q_ /= g;
    }
    if (p_ < 0 || (p_ == 0 && q_ < 0)) {
        p_ = checked_neg(p_);
        q_ = checked_neg(q_);
    }
}

std::string Slope::str() const {
    if (p_ == 0) return "inf";
    if (p_ == 1) return std::to_string(q_);
    return std::to_string(q_) + "/" + std::to_string(p_);
}

Slope Slope::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty slope");
    if (text == "inf" || text == "-inf" || text == "oo") return infinity();
    auto parse_int = [](const std::string& part) {
        if (part.empty()) throw parse_error("bad slope component");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw parse_error("bad slope '" + part + "'");
        }
        if (pos != part.size()) throw parse_error("bad slope '" + part + "'");
        return static_cast<std::int64_t>(v);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return integer(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (num == 0 && den == 0) throw zero_vector_error();
    // value num/den, i.e. the vector (den, num)
    return Slope(den, num);
}

int value_compare(const Slope& a, const Slope& b) {
    if (a == b) return 0;
    if (a.is_infinity()) return 1;
    if (b.is_infinity()) return -1;
    // q_a/p_a vs q_b/p_b with both p > 0
    return det_sign(a.q(), a.p(), b.q(), b.p());
}

GluingMatrix::GluingMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    __int128 det = static_cast<__int128>(a_) * d_ - static_cast<__int128>(b_) * c_;
    if (det != 1) throw engine_error("gluing matrix must have determinant +1");
}

std::string GluingMatrix::str() const {
    std::ostringstream os;
    os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
    return os.str();
}

GluingMatrix GluingMatrix::parse(const std::string& text) {
    // strict syntax [[a,b],[c,d]], whitespace tolerated
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    std::array<std::int64_t, 4> v{};
    std::size_t i = 0;
    auto expect = [&](char c) {
        if (i >= t.size() || t[i] != c) throw parse_error("bad matrix '" + text + "'");
        ++i;
    };
    auto number = [&]() {
        std::size_t start = i;
        if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        while (i < t.size() && isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == start) throw parse_error("bad matrix '" + text + "'");
        return static_cast<std::int64_t>(std::stoll(t.substr(start, i - start)));
    };
    expect('[');
    expect('[');
    v[0] = number();
    expect(',');
    v[1] = number();
    expect(']');
    expect(',');
    expect('[');
    v[2] = number();
    expect(',');
    v[3] = number();
    expect(']');
    expect(']');
    if (i != t.size()) throw parse_error("bad matrix '" + text + "'");
    return GluingMatrix(v[0], v[1], v[2], v[3]);
}

Slope apply(const GluingMatrix& m, const Slope& s) {
    std::int64_t p = checked_add(checked_mul(m.a(), s.p()), checked_mul(m.b(), s.q()));
    std::int64_t q = checked_add(checked_mul(m.c(), s.p()), checked_mul(m.d(), s.q()));
    return Slope(p, q);
}

std::int64_t intersection_number(const Slope& s, const Slope& t) {
    __int128 det = static_cast<__int128>(s.p()) * t.q() - static_cast<__int128>(t.p()) * s.q();
    if (det < 0) det = -det;
    return narrow_128(det, "intersection_number");
}

Slope mediant(const Slope& a, const Slope& b) {
    return Slope(checked_add(a.p(), b.p()), checked_add(a.q(), b.q()));
}

SlopeArc::SlopeArc(Slope from_, Slope to_, ArcDirection dir_)
    : from(from_), to(to_), dir(dir_) {
    if (from == to) throw equal_slopes_error("slope arc endpoints");
}

bool arc_contains(const SlopeArc& arc, const Slope& s) {
    const Slope& a = arc.dir == ArcDirection::clockwise ? arc.from : arc.to;
    const Slope& b = arc.dir == ArcDirection::clockwise ? arc.to : arc.from;
    // arc from a to b in the increasing direction
    if (value_compare(a, b) < 0)
        return value_compare(a, s) <= 0 && value_compare(s, b) <= 0;
    // wrapped through infinity
    return value_compare(a, s) <= 0 || value_compare(s, b) <= 0;
}

bool open_arc_contains(const SlopeArc& arc, const Slope& s) {
    return s != arc.from && s != arc.to && arc_contains(arc, s);
}

namespace {

// Extended gcd: returns (g, x, y) with x*a + y*b == g.
struct Egcd {
    std::int64_t g, x, y;
};

Egcd egcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a, 1, 0};
    Egcd e = egcd(b, a % b);
    return {e.g, e.y, checked_sub(e.x, checked_mul(a / b, e.y))};
}

// Any Farey neighbor t of s with p_s q_t - p_t q_s == 1.
void base_neighbor(const Slope& s, std::int64_t& tp, std::int64_t& tq) {
    // solve P*q - Q*p = 1 for t = (p, q)
    Egcd e = egcd(s.p(), s.q()); // x*P + y*Q = 1
    if (e.g != 1 && e.g != -1) throw engine_error("non-primitive slope vector");
    std::int64_t sign = e.g == 1 ? 1 : -1;
    tq = checked_mul(sign, e.x);
    tp = checked_mul(sign, checked_neg(e.y));
}

} // namespace

// The neighbors of s form one bi-infinite family t_k = t0 + k*s.  With
// det(s, t_k) = +1 the family marches monotonically around the circle in
// the decreasing (counterclockwise) direction as k grows, approaching s
// from above as k -> +inf and from below as k -> -inf.  On a clockwise arc
// ending at s the members inside the arc are therefore a ray k <= k0, on a
// counterclockwise arc a ray k >= k0; t_{k0} is the first element.
FareyNeighborWalk::FareyNeighborWalk(const SlopeArc& arc) : s_(arc.to), tp_(0), tq_(0) {
    base_neighbor(s_, tp_, tq_);
    auto member = [&](std::int64_t k) {
        Slope t(checked_add(tp_, checked_mul(k, s_.p())),
                checked_add(tq_, checked_mul(k, s_.q())));
        return open_arc_contains(arc, t);
    };
    bool cw = arc.dir == ArcDirection::clockwise;
    // Exponential bracket, then binary search for the extreme member k0.
    std::int64_t inside = 0, outside = 0;
    if (member(0)) {
        inside = 0;
        std::int64_t k = cw ? 1 : -1;
        while (member(k)) {
            inside = k;
            k = checked_mul(k, 2);
        }
        outside = k;
    } else {
        outside = 0;
        std::int64_t k = cw ? -1 : 1;
        while (!member(k)) {
            outside = k;
            k = checked_mul(k, 2);
        }
        inside = k;
    }
    // invariant: member(inside), !member(outside), boundary between them
    while (checked_abs(checked_sub(inside, outside)) > 1) {
        std::int64_t mid = outside + (inside - outside) / 2;
        if (member(mid))
            inside = mid;
        else
            outside = mid;
    }
    tp_ = checked_add(tp_, checked_mul(inside, s_.p()));
    tq_ = checked_add(tq_, checked_mul(inside, s_.q()));
    step_ = cw ? -1 : 1;
}

Slope FareyNeighborWalk::next() {
    Slope out(tp_, tq_);
    tp_ = checked_add(tp_, checked_mul(step_, s_.p()));
    tq_ = checked_add(tq_, checked_mul(step_, s_.q()));
    return out;
}

Slope first_farey_neighbor(const SlopeArc& arc) {
    FareyNeighborWalk walk(arc);
    return walk.next();
}

std::vector<Slope> farey_neighbors(const SlopeArc& arc, int limit) {
    FareyNeighborWalk walk(arc);
    std::vector<Slope> out;
    out.reserve(static_cast<std::size_t>(limit > 0 ? limit : 0));
    for (int i = 0; i < limit; ++i) out.push_back(walk.next());
    return out;
}

namespace {

// U with U * (p,q)^T = (1,0)^T and det U = +1.
GluingMatrix reduce_to_meridian(const Slope& s) {
    Egcd e = egcd(s.p(), s.q());
    std::int64_t sign = e.g == 1 ? 1 : -1;
    std::int64_t x = checked_mul(sign, e.x), y = checked_mul(sign, e.y);
    return GluingMatrix(x, y, checked_neg(s.q()), s.p());
}

std::int64_t abs_sum(const GluingMatrix& m) {
    return checked_add(checked_add(checked_abs(m.a()), checked_abs(m.b())),
                       checked_add(checked_abs(m.c()), checked_abs(m.d())));
}

// Sign representative with the first nonzero of (a, b) positive.
GluingMatrix sign_canonical(const GluingMatrix& m) {
    bool flip;
    if (m.a() != 0)
        flip = m.a() < 0;
    else
        flip = m.b() < 0;
    if (!flip) return m;
    return GluingMatrix(checked_neg(m.a()), checked_neg(m.b()), checked_neg(m.c()),
                        checked_neg(m.d()));
}

} // namespace

GluingMatrix normalize_to(const Slope& s, const Slope& target) {
    GluingMatrix u = reduce_to_meridian(s);
    GluingMatrix vinv = reduce_to_meridian(target).inverse();
    // Candidates: vinv * [[1,t],[0,1]] * u, entries affine in t.  The entry
    // magnitudes are convex piecewise-linear in t, so the minimum sits at an
    // integer near one of the per-entry roots.
    GluingMatrix base = vinv * u;                          // t = 0
    GluingMatrix slope_part(1, 1, 0, 1);                   // placeholder, recomputed below
    // d/dt part: vinv * [[0,1],[0,0]] * u has rows scaled by u's bottom row.
    std::int64_t da = checked_mul(vinv.a(), checked_neg(s.q()));
    std::int64_t db = checked_mul(vinv.a(), s.p());
    std::int64_t dc = checked_mul(vinv.c(), checked_neg(s.q()));
    std::int64_t dd = checked_mul(vinv.c(), s.p());
    (void)slope_part;

    auto at = [&](std::int64_t t) {
        return GluingMatrix(checked_add(base.a(), checked_mul(t, da)),
                            checked_add(base.b(), checked_mul(t, db)),
                            checked_add(base.c(), checked_mul(t, dc)),
                            checked_add(base.d(), checked_mul(t, dd)));
    };

    std::vector<std::int64_t> candidates{0};
    auto add_roots = [&](std::int64_t c0, std::int64_t d0) {
        if (d0 == 0) return;
        std::int64_t t0 = -c0 / d0;
        for (std::int64_t t = t0 - 2; t <= t0 + 2; ++t) candidates.push_back(t);
    };
    add_roots(base.a(), da);
    add_roots(base.b(), db);
    add_roots(base.c(), dc);
    add_roots(base.d(), dd);

    bool have = false;
    std::int64_t best_cost = 0, best_t = 0;
    for (std::int64_t t : candidates) {
        GluingMatrix m = at(t);
        std::int64_t cost = abs_sum(m);
        if (!have || cost < best_cost ||
            (cost == best_cost && (checked_abs(t) < checked_abs(best_t) ||
                                   (checked_abs(t) == checked_abs(best_t) && t > best_t)))) {
            have = true;
            best_cost = cost;
            best_t = t;
        }
    }
    return sign_canonical(at(best_t));
}

} // namespace convexcalc::farey
