#include "convexcalc/seifert.hpp"

#include <sstream>

namespace convexcalc::seifert {

std::string FrameId::str() const {
    switch (kind) {
        case FrameKind::inner: return "inner:" + std::to_string(index);
        case FrameKind::outer: return "outer:" + std::to_string(index);
        case FrameKind::outer_reversed: return "outer-rev:" + std::to_string(index);
        case FrameKind::cut_round: return "cut-round";
    }
    return "?";
}

FrameId FrameId::parse(const std::string& text) {
    if (text == "cut-round") return cut_round();
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string head = text.substr(0, colon);
        std::string tail = text.substr(colon + 1);
        if (tail.size() == 1 && tail[0] >= '1' && tail[0] <= '3') {
            int i = tail[0] - '0';
            if (head == "inner") return inner(i);
            if (head == "outer") return outer(i);
            if (head == "outer-rev") return outer_reversed(i);
        }
    }
    throw parse_error("bad frame '" + text + "'");
}

std::size_t SeifertPreset::check_index(int i) {
    if (i < 1 || i > 3) throw engine_error("fiber index must be 1, 2 or 3");
    return static_cast<std::size_t>(i - 1);
}

SeifertPreset::SeifertPreset(std::array<Rational, 3> invariants,
                             std::array<GluingMatrix, 3> matrices, GluingMatrix monodromy)
    : invariants_(invariants), matrices_(matrices), monodromy_(monodromy) {
    for (std::size_t k = 0; k < 3; ++k) {
        const GluingMatrix& a = matrices_[k];
        const Rational& inv = invariants_[k];
        if (a.a() != inv.den() || a.c() != -inv.num())
            throw engine_error("gluing matrix " + std::to_string(k + 1) +
                               " must have first column (alpha, -beta)");
    }
}

SeifertPreset SeifertPreset::poincare() {
    return SeifertPreset({Rational(-1, 2), Rational(1, 3), Rational(1, 5)},
                         {GluingMatrix(2, -1, 1, 0), GluingMatrix(3, 1, -1, 0),
                          GluingMatrix(5, 1, -1, 0)},
                         GluingMatrix(1, 1, -1, 0));
}

std::string SeifertPreset::serialize() const {
    std::ostringstream os;
    os << "invariants " << invariants_[0] << " " << invariants_[1] << " " << invariants_[2]
       << "\n";
    for (int i = 1; i <= 3; ++i) os << "A" << i << " " << matrix(i).str() << "\n";
    os << "monodromy " << monodromy_.str() << "\n";
    return os.str();
}

SeifertPreset SeifertPreset::parse_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    bool have_inv = false;
    std::array<bool, 3> have_mat{false, false, false};
    bool have_mono = false;
    std::array<Rational, 3> inv{Rational(0), Rational(0), Rational(0)};
    std::array<GluingMatrix, 3> mats{GluingMatrix::identity(), GluingMatrix::identity(),
                                     GluingMatrix::identity()};
    GluingMatrix mono = GluingMatrix::identity();
    int lineno = 0;
    auto parse_rational = [&](const std::string& tok) {
        auto slash = tok.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(tok));
            return Rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
        } catch (const std::exception&) {
            throw parse_error(lineno, "bad rational '" + tok + "'");
        }
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "invariants") {
            std::string a, b, c;
            if (!(ls >> a >> b >> c)) throw parse_error(lineno, "invariants needs 3 values");
            inv = {parse_rational(a), parse_rational(b), parse_rational(c)};
            have_inv = true;
        } else if (key == "A1" || key == "A2" || key == "A3") {
            std::string m;
            if (!(ls >> m)) throw parse_error(lineno, key + " needs a matrix");
            std::size_t idx = static_cast<std::size_t>(key[1] - '1');
            mats[idx] = GluingMatrix::parse(m);
            have_mat[idx] = true;
        } else if (key == "monodromy") {
            std::string m;
            if (!(ls >> m)) throw parse_error(lineno, "monodromy needs a matrix");
            mono = GluingMatrix::parse(m);
            have_mono = true;
        } else {
            throw parse_error(lineno, "unknown preset field '" + key + "'");
        }
    }
    if (!have_inv || !have_mat[0] || !have_mat[1] || !have_mat[2] || !have_mono)
        throw parse_error("incomplete preset (need invariants, A1..A3, monodromy)");
    return SeifertPreset(inv, mats, mono);
}

Slope transport(const SeifertPreset& preset, const Slope& s, const FrameId& from,
                const FrameId& to) {
    if (from == to) return s;
    auto unsupported = [&]() -> Slope {
        throw unsupported_frame_pair_error(from.str() + " -> " + to.str());
    };
    // CutRoundTorus carries the d(M \ V_1) identification.
    FrameId f = from.kind == FrameKind::cut_round ? FrameId::outer_reversed(1) : from;
    FrameId t = to.kind == FrameKind::cut_round ? FrameId::outer_reversed(1) : to;
    if (f == t) return s;
    if (f.index != t.index) return unsupported();
    int i = f.index;
    if (f.kind == FrameKind::inner && t.kind == FrameKind::outer)
        return apply(preset.matrix(i), s);
    if (f.kind == FrameKind::outer && t.kind == FrameKind::inner)
        return apply(preset.matrix(i).inverse(), s);
    if (f.kind == FrameKind::outer && t.kind == FrameKind::outer_reversed) return s.negated();
    if (f.kind == FrameKind::outer_reversed && t.kind == FrameKind::outer) return s.negated();
    return unsupported();
}

GluingMatrix framing_change(const GluingMatrix& a, std::int64_t m) {
    return a * GluingMatrix(1, m, 0, 1);
}

Slope vertical_pullback(const SeifertPreset& preset, int i) {
    return apply(preset.matrix(i).inverse(), Slope::infinity());
}

bool overtwisted_meridian_check(const SeifertPreset& preset, int i, const Slope& s,
                                const FrameId& frame) {
    Slope on_outer = Slope::zero();
    switch (frame.kind) {
        case FrameKind::inner:
            if (frame.index != i) throw unsupported_frame_pair_error(frame.str());
            return s == Slope::zero();
        case FrameKind::outer:
            if (frame.index != i) throw unsupported_frame_pair_error(frame.str());
            on_outer = s;
            break;
        case FrameKind::outer_reversed:
            if (frame.index != i) throw unsupported_frame_pair_error(frame.str());
            on_outer = s.negated();
            break;
        case FrameKind::cut_round:
            if (i != 1) throw unsupported_frame_pair_error(frame.str());
            on_outer = s.negated();
            break;
    }
    return apply(preset.matrix(i).inverse(), on_outer) == Slope::zero();
}

std::pair<Slope, Slope> fiber_boundary_slope(const SeifertPreset& preset) {
    // The fiber is glued from three meridional disks of V_1, two of V_2 and
    // six connecting strips; its boundary class on Outer(3) is the preset
    // constant below, and the Inner(3) slope is its transport.
    Slope outer(6, -1);
    Slope inner = transport(preset, outer, FrameId::outer(3), FrameId::inner(3));
    return {outer, inner};
}

} // namespace convexcalc::seifert
