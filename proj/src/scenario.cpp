#include "convexcalc/scenario.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "convexcalc/fixtures.hpp"
#include <json.hpp>

namespace convexcalc::replay {

namespace {

using seifert::FrameKind;
using seifert::SeifertPreset;
using surface::EulerClass;
using surface::FramedTorus;

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool parse_bool(const std::string& tok, int line) {
    if (tok == "true") return true;
    if (tok == "false") return false;
    throw parse_error(line, "expected true|false, got '" + tok + "'");
}

std::int64_t parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
}

int parse_fiber(const std::string& tok, int line, bool allow_vert = false) {
    if (allow_vert && tok == "vert") return 0;
    if (tok.size() == 1 && tok[0] >= '1' && tok[0] <= '3') return tok[0] - '0';
    throw parse_error(line, "expected a fiber index 1..3" +
                                std::string(allow_vert ? " or 'vert'" : "") + ", got '" +
                                tok + "'");
}

Slope parse_slope_tok(const std::string& tok, int line) {
    try {
        return Slope::parse(tok);
    } catch (const engine_error& e) {
        throw parse_error(line, e.what());
    }
}

std::string sign_str(BypassSign s) { return s == BypassSign::positive ? "+" : "-"; }

} // namespace

std::vector<Step> parse_scenario(const std::string& text) {
    std::vector<Step> steps;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    int branch_depth = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        // citation: trailing [...] block
        std::string citation;
        auto close = line.find_last_of(']');
        if (close != std::string::npos && line.find_first_not_of(" \t", close + 1) ==
                                              std::string::npos) {
            auto open = line.rfind('[', close);
            if (open != std::string::npos) {
                citation = line.substr(open + 1, close - open - 1);
                line = line.substr(0, open);
            }
        }
        // quoted text operand
        std::string quoted;
        auto q1 = line.find('"');
        if (q1 != std::string::npos) {
            auto q2 = line.find('"', q1 + 1);
            if (q2 == std::string::npos) throw parse_error(lineno, "unterminated quote");
            quoted = line.substr(q1 + 1, q2 - q1 - 1);
            line = line.substr(0, q1) + line.substr(q2 + 1);
        }
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;

        Step s;
        s.line = lineno;
        s.citation = citation;
        s.text = quoted;
        const std::string& head = toks[0];
        auto need = [&](std::size_t n) {
            if (toks.size() < n) throw parse_error(lineno, "too few operands for " + head);
        };
        auto expect_kw = [&](std::size_t at) {
            need(at + 1);
            if (toks[at] != "expect")
                throw parse_error(lineno, "expected 'expect', got '" + toks[at] + "'");
        };

        if (head == "preset") {
            need(2);
            s.kind = Step::Kind::set_preset;
            s.text = toks[1];
        } else if (head == "set-twist") {
            need(3);
            s.kind = Step::Kind::set_twist;
            s.fiber = parse_fiber(toks[1], lineno);
            s.int_a = parse_int(toks[2], lineno);
        } else if (head == "assert-outer-slope") {
            need(3);
            s.kind = Step::Kind::assert_outer_slope;
            s.fiber = parse_fiber(toks[1], lineno);
            s.expect_slope = parse_slope_tok(toks[2], lineno);
        } else if (head == "imbalance") {
            need(3);
            if (toks[1] == "raw") {
                s.kind = Step::Kind::imbalance_raw;
                need(4);
                s.int_a = parse_int(toks[2], lineno);
                s.int_b = parse_int(toks[3], lineno);
            } else {
                s.kind = Step::Kind::imbalance;
                s.fiber = parse_fiber(toks[1], lineno, true);
                s.fiber2 = parse_fiber(toks[2], lineno, true);
            }
        } else if (head == "imbalance-scan") {
            need(7);
            s.kind = Step::Kind::imbalance_scan;
            s.fiber = parse_fiber(toks[1], lineno);
            s.fiber2 = parse_fiber(toks[2], lineno);
            if (toks[3] != "from" || toks[5] != "to")
                throw parse_error(lineno, "imbalance-scan needs 'from <lo> to <hi>'");
            s.int_a = parse_int(toks[4], lineno);
            s.int_b = parse_int(toks[6], lineno);
        } else if (head == "apply-twist-lemma") {
            need(2);
            s.kind = Step::Kind::apply_twist_lemma;
            s.fiber = parse_fiber(toks[1], lineno);
            std::size_t at = 2;
            if (at < toks.size() && toks[at] == "ruling") {
                need(at + 2);
                s.slope_a = parse_slope_tok(toks[at + 1], lineno);
                at += 2;
            }
            expect_kw(at);
            if (toks[at + 1] == "blocked")
                s.expect_blocked = true;
            else
                s.expect_int = parse_int(toks[at + 1], lineno);
        } else if (head == "cut-and-round") {
            need(5);
            s.kind = Step::Kind::cut_and_round;
            s.int_a = parse_int(toks[1], lineno);
            s.int_b = parse_int(toks[2], lineno);
            expect_kw(3);
            s.expect_slope = parse_slope_tok(toks[4], lineno);
        } else if (head == "check-overtwisted") {
            need(6);
            s.kind = Step::Kind::check_overtwisted;
            s.fiber = parse_fiber(toks[1], lineno);
            s.slope_a = parse_slope_tok(toks[2], lineno);
            s.frame = FrameId::parse(toks[3]);
            expect_kw(4);
            s.expect_bool = parse_bool(toks[5], lineno);
        } else if (head == "thicken-vertical") {
            need(2);
            s.kind = Step::Kind::thicken_vertical;
            s.fiber = parse_fiber(toks[1], lineno);
        } else if (head == "attach-bypass") {
            need(6);
            s.kind = Step::Kind::attach_bypass;
            s.frame = FrameId::parse(toks[1]);
            s.slope_a = parse_slope_tok(toks[2], lineno);
            if (toks[3] == "front")
                s.side = BypassSide::front;
            else if (toks[3] == "back")
                s.side = BypassSide::back;
            else
                throw parse_error(lineno, "expected front|back, got '" + toks[3] + "'");
            expect_kw(4);
            s.expect_slope = parse_slope_tok(toks[5], lineno);
        } else if (head == "stabilize") {
            need(3);
            s.kind = Step::Kind::stabilize;
            s.fiber = parse_fiber(toks[1], lineno);
            if (toks[2] == "+")
                s.sign = BypassSign::positive;
            else if (toks[2] == "-")
                s.sign = BypassSign::negative;
            else
                throw parse_error(lineno, "expected + or -, got '" + toks[2] + "'");
        } else if (head == "layer-euler") {
            need(2);
            s.kind = Step::Kind::layer_euler;
            if (toks[1] == "+")
                s.sign = BypassSign::positive;
            else if (toks[1] == "-")
                s.sign = BypassSign::negative;
            else
                throw parse_error(lineno, "expected + or -, got '" + toks[1] + "'");
        } else if (head == "assert-euler") {
            need(2);
            if (toks[1] == "class") {
                need(6);
                s.kind = Step::Kind::assert_euler_class;
                s.int_a = parse_int(toks[2], lineno);
                s.int_b = parse_int(toks[3], lineno);
                expect_kw(4);
                s.expect_int = parse_int(toks[5], lineno);
            } else if (toks[1] == "diagram") {
                need(5);
                s.kind = Step::Kind::assert_euler_diagram;
                s.text = toks[2];
                expect_kw(3);
                s.expect_int = parse_int(toks[4], lineno);
            } else {
                throw parse_error(lineno, "assert-euler needs 'class' or 'diagram'");
            }
        } else if (head == "assert-regions") {
            need(5);
            s.kind = Step::Kind::assert_regions;
            s.text = toks[1];
            expect_kw(2);
            s.expect_regions = {static_cast<int>(parse_int(toks[3], lineno)),
                                static_cast<int>(parse_int(toks[4], lineno))};
        } else if (head == "assert-twist") {
            need(5);
            s.kind = Step::Kind::assert_twist;
            s.frame = FrameId::parse(toks[1]);
            s.slope_a = parse_slope_tok(toks[2], lineno);
            expect_kw(3);
            s.expect_int = parse_int(toks[4], lineno);
        } else if (head == "assert-pants") {
            need(4);
            s.kind = Step::Kind::assert_pants;
            s.text = toks[1];
            expect_kw(2);
            s.expect_pants = surface::parse_pants_class(toks[3]);
        } else if (head == "assert-fiber") {
            need(4);
            s.kind = Step::Kind::assert_fiber;
            expect_kw(1);
            s.expect_slope = parse_slope_tok(toks[2], lineno);
            s.expect_slope2 = parse_slope_tok(toks[3], lineno);
        } else if (head == "check-interp" || head == "check-solid") {
            need(7);
            s.kind = head == "check-interp" ? Step::Kind::check_interp
                                            : Step::Kind::check_solid;
            s.slope_a = parse_slope_tok(toks[1], lineno);
            s.slope_b = parse_slope_tok(toks[2], lineno);
            if (toks[3] != "contains")
                throw parse_error(lineno, "expected 'contains', got '" + toks[3] + "'");
            s.text = parse_slope_tok(toks[4], lineno).str(); // the probe slope
            expect_kw(5);
            s.expect_bool = parse_bool(toks[6], lineno);
        } else if (head == "axiom") {
            s.kind = Step::Kind::axiom;
            std::size_t at = 1;
            if (at < toks.size() && toks[at] == "grants") {
                need(at + 2);
                std::string list = toks[at + 1];
                std::string cur;
                for (char ch : list + ",") {
                    if (ch == ',') {
                        if (!cur.empty()) s.grants.push_back(parse_fiber(cur, lineno));
                        cur.clear();
                    } else {
                        cur.push_back(ch);
                    }
                }
            }
            if (s.text.empty()) throw parse_error(lineno, "axiom needs quoted text");
        } else if (head == "begin-branch") {
            need(2);
            s.kind = Step::Kind::begin_branch;
            s.text = toks[1];
            ++branch_depth;
        } else if (head == "end-branch") {
            s.kind = Step::Kind::end_branch;
            if (branch_depth == 0) throw parse_error(lineno, "end-branch without begin");
            --branch_depth;
        } else {
            throw parse_error(lineno, "unknown step '" + head + "'");
        }
        steps.push_back(std::move(s));
    }
    if (branch_depth != 0) throw parse_error(lineno, "unclosed branch");
    if (steps.empty() || steps[0].kind != Step::Kind::set_preset)
        throw parse_error(1, "scenario must begin with a preset step");
    return steps;
}

void lint_scenario(const std::vector<Step>& steps) {
    for (const Step& s : steps) {
        if (s.has_expectation() && s.citation.empty())
            throw parse_error(s.line, "expectation without citation");
        if (s.kind == Step::Kind::axiom && s.citation.empty())
            throw parse_error(s.line, "axiom without citation");
    }
}

namespace {

struct State {
    std::optional<SeifertPreset> preset;
    std::array<std::optional<std::int64_t>, 3> twist;
    std::map<std::pair<int, int>, FramedTorus> torus;
    // last imbalance result: -1 nothing pending, 0 equal counts, i bypass side
    int pending = -1;
    std::set<int> grants;
    std::optional<EulerClass> euler;
    std::optional<bypass::Layer> layer;
};

std::pair<int, int> key(const FrameId& f) { return {static_cast<int>(f.kind), f.index}; }

class Runner {
public:
    Trace run(const std::vector<Step>& steps) {
        Trace trace;
        int index = 0;
        for (const Step& step : steps) {
            StepRecord rec;
            rec.index = ++index;
            rec.citation = step.citation;
            try {
                execute(step, rec);
            } catch (const engine_error& e) {
                rec.status = StepStatus::fail;
                rec.computed = std::string("error: ") + e.what();
            }
            switch (rec.status) {
                case StepStatus::pass: ++trace.passed; break;
                case StepStatus::fail: ++trace.failed; break;
                case StepStatus::axiom: ++trace.axioms; break;
            }
            trace.records.push_back(std::move(rec));
        }
        // the golden endpoint: a passing meridian check closing the run
        for (auto it = trace.records.rbegin(); it != trace.records.rend(); ++it) {
            if (it->status == StepStatus::axiom) continue;
            trace.overtwisted_found = it->kind == "check-overtwisted" &&
                                      it->status == StepStatus::pass &&
                                      it->computed == "true";
            break;
        }
        return trace;
    }

private:
    State st_;
    std::vector<State> branch_stack_;

    const SeifertPreset& preset() {
        if (!st_.preset) throw engine_error("no preset loaded");
        return *st_.preset;
    }

    FramedTorus& torus_at(const FrameId& f) {
        auto it = st_.torus.find(key(f));
        if (it == st_.torus.end())
            throw engine_error("no torus state at frame " + f.str());
        return it->second;
    }

    void put_torus(const FrameId& f, const FramedTorus& t) {
        st_.torus.erase(key(f));
        st_.torus.emplace(key(f), t);
    }

    void sync_from_twist(int i) {
        std::int64_t m = *st_.twist[static_cast<std::size_t>(i - 1)];
        Slope inner = Slope::one_over(m);
        Slope outer = seifert::transport(preset(), inner, FrameId::inner(i),
                                         FrameId::outer(i));
        put_torus(FrameId::inner(i), FramedTorus(FrameId::inner(i), 1, inner));
        put_torus(FrameId::outer(i), FramedTorus(FrameId::outer(i), 1, outer));
        put_torus(FrameId::outer_reversed(i),
                  FramedTorus(FrameId::outer_reversed(i), 1, outer.negated()));
    }

    void sync_outer(int i, const FramedTorus& t) {
        put_torus(FrameId::outer(i), FramedTorus(FrameId::outer(i), t.pairs, t.slope));
        put_torus(FrameId::outer_reversed(i),
                  FramedTorus(FrameId::outer_reversed(i), t.pairs, t.slope.negated()));
    }

    std::int64_t vertical_count(int i) {
        if (i == 0) return 0; // the zero-twist vertical Legendrian curve
        const FramedTorus& t = torus_at(FrameId::outer(i));
        return checked_mul(2 * t.pairs,
                           farey::intersection_number(t.slope, Slope::infinity()));
    }

    static std::string fiber_name(int i) {
        return i == 0 ? std::string("vert") : "V" + std::to_string(i);
    }

    void check(StepRecord& rec, bool ok) {
        rec.status = ok ? StepStatus::pass : StepStatus::fail;
    }

    void execute(const Step& step, StepRecord& rec) {
        using K = Step::Kind;
        switch (step.kind) {
            case K::set_preset: {
                rec.kind = "preset";
                rec.detail = step.text;
                if (step.text == "poincare") {
                    st_.preset = SeifertPreset::poincare();
                } else {
                    std::ifstream in(step.text);
                    if (!in) throw engine_error("cannot open preset '" + step.text + "'");
                    std::stringstream buf;
                    buf << in.rdbuf();
                    st_.preset = SeifertPreset::parse_text(buf.str());
                }
                rec.computed = "loaded";
                break;
            }
            case K::set_twist: {
                rec.kind = "set-twist";
                rec.detail = fiber_name(step.fiber) + " m=" + std::to_string(step.int_a);
                st_.twist[static_cast<std::size_t>(step.fiber - 1)] = step.int_a;
                sync_from_twist(step.fiber);
                rec.computed =
                    "slopes " + torus_at(FrameId::inner(step.fiber)).slope.str() + " / " +
                    torus_at(FrameId::outer(step.fiber)).slope.str();
                break;
            }
            case K::assert_outer_slope: {
                rec.kind = "assert-outer-slope";
                rec.detail = fiber_name(step.fiber);
                Slope got = torus_at(FrameId::outer(step.fiber)).slope;
                rec.computed = got.str();
                rec.expected = step.expect_slope->str();
                check(rec, got == *step.expect_slope);
                break;
            }
            case K::imbalance: {
                rec.kind = "imbalance";
                rec.detail = fiber_name(step.fiber) + " vs " + fiber_name(step.fiber2);
                std::int64_t l = vertical_count(step.fiber);
                std::int64_t r = vertical_count(step.fiber2);
                auto side = bypass::imbalance_bypass(l, r);
                int who = !side ? 0
                          : *side == bypass::ImbalanceSide::left ? step.fiber
                                                                 : step.fiber2;
                st_.pending = who;
                rec.computed = "counts (" + std::to_string(l) + "," + std::to_string(r) +
                               ") -> " + (who == 0 ? "none" : "bypass for " + fiber_name(who));
                break;
            }
            case K::imbalance_raw: {
                rec.kind = "imbalance";
                rec.detail = "raw counts";
                auto side = bypass::imbalance_bypass(step.int_a, step.int_b);
                rec.computed = "counts (" + std::to_string(step.int_a) + "," +
                               std::to_string(step.int_b) + ") -> " +
                               (!side ? "none"
                                      : *side == bypass::ImbalanceSide::left ? "left"
                                                                             : "right");
                break;
            }
            case K::imbalance_scan: {
                rec.kind = "imbalance-scan";
                rec.detail = fiber_name(step.fiber) + " twists [" +
                             std::to_string(step.int_a) + "," + std::to_string(step.int_b) +
                             "] vs " + fiber_name(step.fiber2);
                std::int64_t rcount = vertical_count(step.fiber2);
                bool all = true;
                std::int64_t bad = 0;
                for (std::int64_t m = step.int_a; m <= step.int_b; ++m) {
                    Slope outer = seifert::transport(preset(), Slope::one_over(m),
                                                     FrameId::inner(step.fiber),
                                                     FrameId::outer(step.fiber));
                    std::int64_t lcount =
                        2 * farey::intersection_number(outer, Slope::infinity());
                    if (!bypass::imbalance_bypass(lcount, rcount)) {
                        all = false;
                        bad = m;
                        break;
                    }
                }
                rec.computed =
                    all ? "imbalance at every twist" : "counts equal at m=" + std::to_string(bad);
                check(rec, all);
                break;
            }
            case K::apply_twist_lemma: {
                rec.kind = "apply-twist-lemma";
                int i = step.fiber;
                Slope ruling = step.slope_a ? *step.slope_a
                                            : seifert::vertical_pullback(preset(), i);
                rec.detail = fiber_name(i) + " ruling " + ruling.str();
                bool available = st_.pending == i || st_.grants.count(i) > 0;
                if (st_.pending == i) st_.pending = -1;
                std::int64_t n = *st_.twist[static_cast<std::size_t>(i - 1)];
                auto result = bypass::twist_number_lemma(n, ruling);
                if (!available) {
                    rec.computed = "no bypass available";
                    rec.expected = step.expect_blocked
                                       ? "blocked"
                                       : std::to_string(*step.expect_int);
                    check(rec, false);
                    break;
                }
                if (result) {
                    st_.twist[static_cast<std::size_t>(i - 1)] = *result;
                    sync_from_twist(i);
                }
                rec.computed = result ? "twist " + std::to_string(*result) : "blocked";
                if (step.expect_blocked) {
                    rec.expected = "blocked";
                    check(rec, !result.has_value());
                } else {
                    rec.expected = "twist " + std::to_string(*step.expect_int);
                    check(rec, result.has_value() && *result == *step.expect_int);
                }
                break;
            }
            case K::cut_and_round: {
                rec.kind = "cut-and-round";
                rec.detail = "m2=" + std::to_string(step.int_a) +
                             " m3=" + std::to_string(step.int_b);
                if (st_.pending != 0)
                    throw engine_error(
                        "cut-and-round needs the no-bypass annulus (equal counts)");
                st_.pending = -1;
                if (st_.twist[1] != step.int_a || st_.twist[2] != step.int_b)
                    throw engine_error("cut-and-round twists disagree with the state");
                Slope s = bypass::cut_and_round_pants(step.int_a, step.int_b);
                put_torus(FrameId::cut_round(), FramedTorus(FrameId::cut_round(), 1, s));
                rec.computed = s.str();
                rec.expected = step.expect_slope->str();
                check(rec, s == *step.expect_slope);
                break;
            }
            case K::check_overtwisted: {
                rec.kind = "check-overtwisted";
                rec.detail = fiber_name(step.fiber) + " slope " + step.slope_a->str() +
                             " on " + step.frame->str();
                auto it = st_.torus.find(key(*step.frame));
                if (it != st_.torus.end() && it->second.slope != *step.slope_a)
                    throw engine_error("state slope " + it->second.slope.str() +
                                       " disagrees with step slope " + step.slope_a->str());
                bool got = seifert::overtwisted_meridian_check(preset(), step.fiber,
                                                               *step.slope_a, *step.frame);
                rec.computed = got ? "true" : "false";
                rec.expected = *step.expect_bool ? "true" : "false";
                check(rec, got == *step.expect_bool);
                break;
            }
            case K::thicken_vertical: {
                rec.kind = "thicken-vertical";
                rec.detail = fiber_name(step.fiber) +
                             (step.text.empty() ? "" : " (" + step.text + ")");
                FramedTorus t = torus_at(FrameId::outer(step.fiber));
                std::string path = t.slope.str();
                int moves = 0;
                while (t.slope != Slope::infinity()) {
                    if (vertical_count(step.fiber) == 0)
                        throw engine_error("no imbalance against the vertical curve");
                    t = bypass::attach_bypass_torus(
                        t, {Slope::infinity(), BypassSide::front, BypassSign::positive});
                    sync_outer(step.fiber, t);
                    path += " -> " + t.slope.str();
                    if (++moves > 32) throw engine_error("thickening walk did not converge");
                }
                rec.computed = std::to_string(moves) + " bypasses: " + path;
                check(rec, t.slope == Slope::infinity());
                break;
            }
            case K::attach_bypass: {
                rec.kind = "attach-bypass";
                rec.detail = step.frame->str() + " ruling " + step.slope_a->str() +
                             (step.side == BypassSide::front ? " front" : " back");
                FramedTorus t = torus_at(*step.frame);
                bool trivial = bypass::is_trivial_bypass(
                    t, {*step.slope_a, step.side, BypassSign::positive});
                FramedTorus moved = bypass::attach_bypass_torus(
                    t, {*step.slope_a, step.side, BypassSign::positive});
                if (step.frame->kind == FrameKind::outer)
                    sync_outer(step.frame->index, moved);
                else if (step.frame->kind == FrameKind::outer_reversed)
                    sync_outer(step.frame->index,
                               FramedTorus(*step.frame, moved.pairs, moved.slope.negated()));
                else
                    put_torus(*step.frame, moved);
                rec.computed = moved.slope.str() + (trivial ? " (trivial bypass)" : "");
                rec.expected = step.expect_slope->str();
                check(rec, moved.slope == *step.expect_slope);
                break;
            }
            case K::stabilize: {
                rec.kind = "stabilize";
                rec.detail = fiber_name(step.fiber) + " sign " + sign_str(step.sign);
                FramedTorus t = torus_at(FrameId::inner(step.fiber));
                auto [inner, layer] = bypass::stabilize(t, step.sign);
                st_.layer = layer;
                rec.computed = "core slope " + inner.slope.str() + ", layer [" +
                               inner.slope.str() + " -> " + t.slope.str() + "]";
                break;
            }
            case K::layer_euler: {
                rec.kind = "layer-euler";
                rec.detail = std::string("sign ") + sign_str(step.sign);
                st_.euler = EulerClass::single_bypass_layer(
                    step.sign == BypassSign::positive ? 1 : -1);
                rec.computed = "e(mu)=" + std::to_string(st_.euler->on_mu()) +
                               " e(lambda)=" + std::to_string(st_.euler->on_lambda());
                break;
            }
            case K::assert_euler_class: {
                rec.kind = "assert-euler";
                rec.detail = "class " + std::to_string(step.int_a) + "*mu+" +
                             std::to_string(step.int_b) + "*lambda";
                if (!st_.euler) throw engine_error("no layer euler class set");
                std::int64_t v = surface::euler_linear_extend(*st_.euler, step.int_a,
                                                              step.int_b);
                rec.computed = std::to_string(v);
                rec.expected = std::to_string(*step.expect_int);
                check(rec, v == *step.expect_int);
                break;
            }
            case K::assert_euler_diagram: {
                rec.kind = "assert-euler";
                rec.detail = "diagram " + step.text;
                auto ds = surface::fixture(step.text);
                std::int64_t v = ds.signed_euler();
                rec.computed = std::to_string(v);
                rec.expected = std::to_string(*step.expect_int);
                check(rec, v == *step.expect_int);
                break;
            }
            case K::assert_regions: {
                rec.kind = "assert-regions";
                rec.detail = step.text;
                auto ds = surface::fixture(step.text);
                auto [pos, neg] = ds.region_counts();
                rec.computed = std::to_string(pos) + "+/" + std::to_string(neg) + "-";
                rec.expected = std::to_string(step.expect_regions->first) + "+/" +
                               std::to_string(step.expect_regions->second) + "-";
                check(rec, pos == step.expect_regions->first &&
                               neg == step.expect_regions->second);
                break;
            }
            case K::assert_twist: {
                rec.kind = "assert-twist";
                rec.detail = step.frame->str() + " curve " + step.slope_a->str();
                FramedTorus t = torus_at(*step.frame);
                std::int64_t v = surface::twist_of_curve(t, *step.slope_a);
                rec.computed = std::to_string(v);
                rec.expected = std::to_string(*step.expect_int);
                check(rec, v == *step.expect_int);
                break;
            }
            case K::assert_pants: {
                rec.kind = "assert-pants";
                rec.detail = step.text;
                auto ds = surface::fixture(step.text);
                auto cls = surface::classify_pants(ds);
                bool consistent =
                    (cls == PantsClass::A) == ds.boundary_parallel_arcs().empty();
                rec.computed = surface::pants_class_name(cls) +
                               std::string(consistent ? "" : " (inconsistent)");
                rec.expected = surface::pants_class_name(*step.expect_pants);
                check(rec, consistent && cls == *step.expect_pants);
                break;
            }
            case K::assert_fiber: {
                rec.kind = "assert-fiber";
                rec.detail = "punctured-torus fiber boundary";
                auto [outer, inner] = seifert::fiber_boundary_slope(preset());
                rec.computed = outer.str() + " / " + inner.str();
                rec.expected = step.expect_slope->str() + " / " + step.expect_slope2->str();
                check(rec, outer == *step.expect_slope && inner == *step.expect_slope2);
                break;
            }
            case K::check_interp: {
                rec.kind = "check-interp";
                Slope probe = Slope::parse(step.text);
                rec.detail = "[" + step.slope_b->str() + ", " + step.slope_a->str() +
                             "] contains " + probe.str();
                bool got = bypass::interp_contains(*step.slope_a, *step.slope_b, probe);
                rec.computed = got ? "true" : "false";
                rec.expected = *step.expect_bool ? "true" : "false";
                check(rec, got == *step.expect_bool);
                break;
            }
            case K::check_solid: {
                rec.kind = "check-solid";
                Slope probe = Slope::parse(step.text);
                rec.detail = "boundary " + step.slope_a->str() + " meridian " +
                             step.slope_b->str() + " contains " + probe.str();
                bool got = bypass::solid_contains(*step.slope_a, *step.slope_b, probe);
                rec.computed = got ? "true" : "false";
                rec.expected = *step.expect_bool ? "true" : "false";
                check(rec, got == *step.expect_bool);
                break;
            }
            case K::axiom: {
                rec.kind = "axiom";
                rec.detail = step.text;
                for (int g : step.grants) st_.grants.insert(g);
                rec.computed = step.grants.empty() ? "recorded" : "recorded (grants bypasses)";
                rec.status = StepStatus::axiom;
                break;
            }
            case K::begin_branch: {
                rec.kind = "begin-branch";
                rec.detail = step.text;
                branch_stack_.push_back(st_);
                rec.computed = "state saved";
                break;
            }
            case K::end_branch: {
                rec.kind = "end-branch";
                if (branch_stack_.empty()) throw engine_error("no open branch");
                st_ = branch_stack_.back();
                branch_stack_.pop_back();
                rec.computed = "state restored";
                break;
            }
        }
    }
};

} // namespace

Trace run(const std::vector<Step>& steps) {
    Runner runner;
    return runner.run(steps);
}

namespace {

const char* kReset = "\033[0m";

std::string paint(const std::string& text, const char* code, bool color) {
    if (!color) return text;
    return std::string(code) + text + kReset;
}

std::string status_str(StepStatus s) {
    switch (s) {
        case StepStatus::pass: return "pass";
        case StepStatus::fail: return "FAIL";
        case StepStatus::axiom: return "axiom";
    }
    return "?";
}

} // namespace

std::string Trace::render(bool color) const {
    std::ostringstream os;
    std::size_t wk = 4, wd = 6, wc = 8, we = 8;
    for (const auto& r : records) {
        wk = std::max(wk, r.kind.size());
        wd = std::max(wd, r.detail.size());
        wc = std::max(wc, r.computed.size());
        we = std::max(we, r.expected.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    for (const auto& r : records) {
        const char* code = r.status == StepStatus::pass    ? "\033[32m"
                           : r.status == StepStatus::fail  ? "\033[31m"
                                                           : "\033[33m";
        os << pad(std::to_string(r.index), 4) << paint(pad(status_str(r.status), 6), code,
                                                       color)
           << pad(r.kind, wk + 2) << pad(r.detail, wd + 2) << pad(r.computed, wc + 2)
           << pad(r.expected, we + 2) << (r.citation.empty() ? "" : "[" + r.citation + "]")
           << "\n";
    }
    std::string verdict = ok() ? "PASS" : "FAIL";
    os << "RESULT: " << paint(verdict, ok() ? "\033[32m" : "\033[31m", color) << " ("
       << passed << " checked, " << failed << " failed, " << axioms << " axioms)";
    if (overtwisted_found) os << " -- overtwisted disk found";
    os << "\n";
    return os.str();
}

std::string Trace::to_json() const {
    nlohmann::json j;
    j["steps"] = nlohmann::json::array();
    for (const auto& r : records) {
        j["steps"].push_back({{"index", r.index},
                              {"kind", r.kind},
                              {"detail", r.detail},
                              {"computed", r.computed},
                              {"expected", r.expected},
                              {"status", status_str(r.status)},
                              {"citation", r.citation}});
    }
    j["summary"] = {{"passed", passed},
                    {"failed", failed},
                    {"axioms", axioms},
                    {"result", ok() ? "pass" : "fail"},
                    {"overtwisted_found", overtwisted_found}};
    return j.dump(2) + "\n";
}

std::vector<MutationPoint> expectation_points(const std::vector<Step>& steps) {
    std::vector<MutationPoint> out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step& s = steps[i];
        if (s.expect_slope) out.push_back({i, "slope"});
        if (s.expect_slope2) out.push_back({i, "slope2"});
        if (s.expect_int) out.push_back({i, "int"});
        if (s.expect_bool) out.push_back({i, "bool"});
        if (s.expect_pants) out.push_back({i, "pants"});
        if (s.expect_regions) out.push_back({i, "regions"});
        if (s.expect_blocked) out.push_back({i, "blocked"});
    }
    return out;
}

std::vector<Step> perturb(const std::vector<Step>& steps, const MutationPoint& point) {
    std::vector<Step> out = steps;
    Step& s = out[point.step_index];
    auto other_slope = [](const Slope& s0) {
        return s0 == Slope::infinity() ? Slope(7, 3) : Slope::infinity();
    };
    if (point.which == "slope")
        s.expect_slope = other_slope(*s.expect_slope);
    else if (point.which == "slope2")
        s.expect_slope2 = other_slope(*s.expect_slope2);
    else if (point.which == "int")
        s.expect_int = *s.expect_int + 1;
    else if (point.which == "bool")
        s.expect_bool = !*s.expect_bool;
    else if (point.which == "pants")
        s.expect_pants = static_cast<PantsClass>((static_cast<int>(*s.expect_pants) + 1) % 4);
    else if (point.which == "regions")
        s.expect_regions = {s.expect_regions->first + 1, s.expect_regions->second};
    else if (point.which == "blocked") {
        s.expect_blocked = false;
        s.expect_int = 99;
    } else {
        throw engine_error("unknown mutation point");
    }
    return out;
}

std::vector<Step> builtin_etnyre_honda() { return parse_scenario(builtin_scenario_text()); }

} // namespace convexcalc::replay
