#include "padicspec/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>

#include "padicspec/errors.hpp"

namespace padicspec {

namespace {

constexpr double kPitch = 1.2;  // vertical distance between closed-point slots
constexpr unsigned long kMaxDiagramPrime = 199;  // p slots per fiber; keep it drawable

std::string paren(const std::string& s) { return "(" + s + ")"; }

struct Planner {
    DiagramSpec spec;
    std::map<std::pair<int, long>, int> slot_contact;
    std::map<int, std::set<long>> used;
    long max_slot = 0;

    int add_contact(int fiber, double y, const char* style, double scale = 1.0) {
        spec.contacts.push_back({fiber, y, style, scale});
        return static_cast<int>(spec.contacts.size()) - 1;
    }
    void add_label(const std::string& text, double x, double y, const char* placement) {
        spec.labels.push_back({text, x, y, placement});
    }
    /// Contact at an integer slot of a fiber, shared between curves: the slot
    /// is one ideal, so it gets one marker and at most one label. A tangent
    /// landing on an existing dot upgrades its style, except at the base
    /// point (p,T), which stays a dot and is met doubly.
    int slot_point(int fiber, long slot, const char* style, const std::string& label,
                   bool labeled, const char* placement) {
        auto key = std::make_pair(fiber, slot);
        if (auto it = slot_contact.find(key); it != slot_contact.end()) {
            int idx = it->second;
            if (std::string_view(style) == "tangent" && spec.contacts[idx].style == "dot" &&
                slot != 0)
                spec.contacts[idx].style = "tangent";
            return idx;
        }
        const char* eff = (std::string_view(style) == "tangent" && slot == 0) ? "dot" : style;
        int idx = add_contact(fiber, slot * kPitch, eff);
        slot_contact[key] = idx;
        used[fiber].insert(slot);
        max_slot = std::max(max_slot, slot);
        if (labeled) add_label(label, spec.fibers[fiber].x, slot * kPitch, placement);
        return idx;
    }
    long lowest_free(int fiber) {
        long s = 1;
        while (used[fiber].count(s)) ++s;
        return s;
    }
};

struct Unit {
    int contact;
    double y;
    bool shared;  // branches keep a common direction through this point
};

std::vector<Unit> row_units(Planner& pl, int fiber, const FiberBehavior& row, double lane,
                            bool global_view) {
    std::vector<Unit> units;
    if (row.verdict == FiberVerdict::ContainedInFiber) return units;
    const unsigned long pv = row.fiber.value();
    for (const auto& ff : row.factors) {
        const int d = ff.factor.degree();
        const bool repeated = ff.multiplicity >= 2;
        if (d == 1) {
            const long c = static_cast<long>(ff.factor.coeff(0).get_ui());
            const char* style = repeated ? "tangent" : "dot";
            std::string label = c == 0
                ? "(" + std::to_string(pv) + ",T)"
                : "(" + std::to_string(pv) + ",T+" + std::to_string(c) + ")";
            int idx = pl.slot_point(fiber, c, style, label, true,
                                    c == 0 ? "below" : (global_view ? "right" : "left"));
            for (unsigned u = 0; u < ff.multiplicity; ++u)
                units.push_back({idx, pl.spec.contacts[idx].y, repeated});
        } else {
            const char* style = repeated ? "tangent"
                              : (row.verdict == FiberVerdict::Blip ? "blip" : "dot");
            int idx;
            double y;
            if (global_view) {
                y = lane;
                idx = pl.add_contact(fiber, y, style);
            } else {
                long s = pl.lowest_free(fiber);
                y = s * kPitch;
                std::string label =
                    "(" + std::to_string(pv) + "," + ff.factor.to_string() + ")";
                idx = pl.slot_point(fiber, s, style, label, true, "left");
            }
            const unsigned cap = static_cast<unsigned>(d) * ff.multiplicity;
            for (unsigned u = 0; u < cap; ++u) units.push_back({idx, y, repeated});
        }
    }
    std::stable_sort(units.begin(), units.end(),
                     [](const Unit& a, const Unit& b) { return a.y < b.y; });
    return units;
}

void add_baseline(Planner& pl, const std::vector<double>& fiber_xs,
                  const std::vector<unsigned long>& ps) {
    DiagramSpec::Curve base;
    base.label = "(T)";
    base.uncertified = false;
    base.straight = true;
    DiagramSpec::Strand s;
    s.points.push_back({pl.spec.x_min, 0.0, -1, false});
    for (std::size_t i = 0; i < fiber_xs.size(); ++i) {
        int idx = pl.slot_point(static_cast<int>(i), 0, "dot",
                                "(" + std::to_string(ps[i]) + ",T)", true, "below");
        s.points.push_back({fiber_xs[i], 0.0, idx, false});
    }
    for (double ex : pl.spec.ellipsis_xs) s.points.push_back({ex, 0.0, -1, false});
    int endf = pl.add_contact(-1, 0.0, "fuzzy");
    pl.add_label("(T)", pl.spec.axis_x, 0.0, "below-right");
    base.end_contact = endf;
    s.points.push_back({pl.spec.axis_x, 0.0, endf, false});
    s.points.push_back({pl.spec.x_max, 0.0, -1, false});
    base.strands.push_back(std::move(s));
    pl.spec.curves.push_back(std::move(base));
}

void add_anchor_curve(Planner& pl, const FiberReport& rep, int lane_index, bool global_view,
                      const std::vector<double>& fiber_xs) {
    const double lane =
        global_view ? 1.75 * lane_index : 1.8 + 1.05 * (lane_index - 1);
    const unsigned m = static_cast<unsigned>(rep.anchor.degree());
    DiagramSpec::Curve curve;
    curve.label = paren(rep.anchor.to_string());
    curve.uncertified = rep.generic.verdict == QpVerdict::Undecided;
    curve.straight = false;

    std::vector<std::vector<Unit>> per_fiber;
    per_fiber.reserve(rep.rows.size());
    for (std::size_t fi = 0; fi < rep.rows.size(); ++fi)
        per_fiber.push_back(row_units(pl, static_cast<int>(fi), rep.rows[fi], lane, global_view));

    int end_idx = pl.add_contact(-1, lane, "fuzzy");
    pl.add_label(curve.label, pl.spec.axis_x, lane, "below-right");
    curve.end_contact = end_idx;

    for (unsigned j = 0; j < m; ++j) {
        DiagramSpec::Strand s;
        bool touched = false;
        for (std::size_t fi = 0; fi < per_fiber.size(); ++fi) {
            const auto& units = per_fiber[fi];
            if (j < units.size()) {
                s.points.push_back({fiber_xs[fi], units[j].y, units[j].contact, units[j].shared});
                touched = true;
            } else if (global_view) {
                s.points.push_back({fiber_xs[fi], lane, -1, false});
            }
        }
        if (!global_view && !touched)
            s.points.push_back({pl.spec.x_min, lane, -1, false});
        for (double ex : pl.spec.ellipsis_xs) s.points.push_back({ex, lane, -1, false});
        s.points.push_back({pl.spec.axis_x, lane, end_idx, false});
        curve.strands.push_back(std::move(s));
    }
    pl.spec.curves.push_back(std::move(curve));
}

void finish_heights(Planner& pl, double floor_height, double max_lane) {
    double h = std::max({floor_height, kPitch * pl.max_slot + 1.2, max_lane + 1.15});
    pl.spec.height = h;
    for (std::size_t i = 0; i < pl.spec.fibers.size(); ++i) {
        pl.add_contact(static_cast<int>(i), h, "fuzzy");
        pl.add_label(pl.spec.fibers[i].label, pl.spec.fibers[i].x, h, "above-left");
    }
    pl.add_contact(-1, h, "fuzzy", 1.5);
    pl.add_label(pl.spec.axis_label, pl.spec.axis_x, h, "above-right");
}

const IntPoly& t_poly() {
    static const IntPoly t({0, 1});
    return t;
}

std::vector<IntPoly> dedupe_anchors(const std::vector<IntPoly>& anchors) {
    std::vector<IntPoly> out;
    for (const auto& a : anchors) {
        if (a == t_poly()) continue;  // the baseline is the (T) curve
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    return out;
}

DiagramSpec plan_zp_core(const Prime& p, const std::vector<FiberReport>& reps) {
    if (p.value() > kMaxDiagramPrime)
        throw SizeError("diagram fibers carry one slot per residue; p > 199 is not drawable");
    Planner pl;
    pl.spec.global = false;
    pl.spec.fibers.push_back({paren(std::to_string(p.value())), 6.0});
    pl.spec.axis_label = "(0)";
    pl.spec.axis_x = 13.0;
    pl.spec.x_min = 5.0;
    pl.spec.x_max = 14.0;
    add_baseline(pl, {6.0}, {p.value()});
    double max_lane = 0.0;
    int lane = 0;
    for (const auto& rep : reps) {
        ++lane;
        add_anchor_curve(pl, rep, lane, false, {6.0});
        max_lane = 1.8 + 1.05 * (lane - 1);
    }
    finish_heights(pl, 4.0, max_lane);
    return std::move(pl.spec);
}

DiagramSpec plan_global_core(const std::vector<Prime>& primes,
                             const std::vector<FiberReport>& reps, unsigned budget) {
    if (primes.empty())
        throw std::invalid_argument("global diagram needs at least one prime");
    for (const Prime& p : primes)
        if (p.value() > kMaxDiagramPrime)
            throw SizeError("diagram fibers carry one slot per residue; p > 199 is not drawable");
    Planner pl;
    pl.spec.global = true;
    std::vector<double> xs;
    std::vector<unsigned long> ps;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        xs.push_back(4.0 + 2.0 * static_cast<double>(i));
        ps.push_back(primes[i].value());
        pl.spec.fibers.push_back({paren(std::to_string(ps[i])), xs[i]});
    }
    const double xlast = xs.back();
    pl.spec.ellipsis_xs = {xlast + 1.5, xlast + 2.0, xlast + 2.3, xlast + 2.5};
    pl.spec.axis_x = xlast + 6.0;
    pl.spec.axis_label = "(0)";
    pl.spec.x_min = 3.5;
    pl.spec.x_max = pl.spec.axis_x + 1.0;
    add_baseline(pl, xs, ps);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (unsigned long k = 1; k < ps[i]; ++k) {
            pl.slot_point(static_cast<int>(i), static_cast<long>(k), "dot",
                          "(" + std::to_string(ps[i]) + ",T+" + std::to_string(k) + ")",
                          k < budget, "right");
        }
    }
    double max_lane = 0.0;
    int lane = 0;
    for (const auto& rep : reps) {
        ++lane;
        add_anchor_curve(pl, rep, lane, true, xs);
        max_lane = 1.75 * lane;
    }
    finish_heights(pl, 5.0, max_lane);
    return std::move(pl.spec);
}

} // namespace

DiagramSpec plan_zp_diagram(const FiberReport& report, const std::vector<IntPoly>& anchors) {
    if (report.global)
        throw std::invalid_argument("plan_zp_diagram expects a single-prime report");
    const Prime p = report.primes.at(0);
    std::vector<IntPoly> list = dedupe_anchors(anchors);
    if (report.anchor != t_poly() &&
        std::find(list.begin(), list.end(), report.anchor) == list.end())
        list.insert(list.begin(), report.anchor);
    std::vector<FiberReport> reps;
    for (const auto& a : list)
        reps.push_back(a == report.anchor ? report : zp_fiber_report(a, p));
    return plan_zp_core(p, reps);
}

DiagramSpec plan_zp_diagram(const Prime& p, const std::vector<IntPoly>& anchors) {
    std::vector<FiberReport> reps;
    for (const auto& a : dedupe_anchors(anchors)) reps.push_back(zp_fiber_report(a, p));
    return plan_zp_core(p, reps);
}

DiagramSpec plan_global_diagram(const FiberReport& report, const std::vector<IntPoly>& anchors,
                                unsigned closed_point_budget) {
    if (!report.global)
        throw std::invalid_argument("plan_global_diagram expects a Spec Z report");
    std::vector<IntPoly> list = dedupe_anchors(anchors);
    if (report.anchor != t_poly() &&
        std::find(list.begin(), list.end(), report.anchor) == list.end())
        list.insert(list.begin(), report.anchor);
    std::vector<FiberReport> reps;
    for (const auto& a : list)
        reps.push_back(a == report.anchor ? report : z_fiber_report(a, report.primes));
    return plan_global_core(report.primes, reps, closed_point_budget);
}

DiagramSpec plan_global_diagram(const std::vector<Prime>& primes,
                                const std::vector<IntPoly>& anchors,
                                unsigned closed_point_budget) {
    std::vector<FiberReport> reps;
    for (const auto& a : dedupe_anchors(anchors)) reps.push_back(z_fiber_report(a, primes));
    return plan_global_core(primes, reps, closed_point_budget);
}

void validate_diagram(const DiagramSpec& spec) {
    auto fail = [](const std::string& what) { throw std::invalid_argument("diagram: " + what); };
    if (!(spec.height > 0)) fail("non-positive height");
    if (!(spec.x_min < spec.x_max)) fail("empty x range");
    if (!(spec.axis_x > spec.x_min && spec.axis_x <= spec.x_max)) fail("axis outside bounds");
    const int nf = static_cast<int>(spec.fibers.size());
    for (const auto& f : spec.fibers)
        if (f.x <= spec.x_min || f.x >= spec.axis_x) fail("fiber outside bounds");
    for (const auto& c : spec.contacts) {
        if (c.fiber < -1 || c.fiber >= nf) fail("contact references a missing fiber");
        if (c.style != "dot" && c.style != "blip" && c.style != "tangent" && c.style != "fuzzy")
            fail("unknown contact style " + c.style);
        if (c.y < -1e-9 || c.y > spec.height + 1e-9) fail("contact outside the fiber");
        if (!(c.scale > 0)) fail("non-positive contact scale");
    }
    const int nc = static_cast<int>(spec.contacts.size());
    for (const auto& curve : spec.curves) {
        if (curve.end_contact < 0 || curve.end_contact >= nc) fail("dangling end contact");
        const auto& ec = spec.contacts[curve.end_contact];
        if (ec.fiber != -1 || ec.style != "fuzzy") fail("end contact must be fuzzy on the axis");
        if (curve.strands.empty()) fail("curve without strands");
        for (const auto& s : curve.strands) {
            if (s.points.size() < 2) fail("strand needs two points");
            bool ends_on_axis = false;
            double last_x = -1e18;
            for (const auto& w : s.points) {
                if (w.contact < -1 || w.contact >= nc) fail("dangling strand contact");
                if (w.x < last_x - 1e-9) fail("strand runs backwards");
                last_x = w.x;
                if (w.contact >= 0) {
                    const auto& c = spec.contacts[w.contact];
                    const double cx = c.fiber == -1 ? spec.axis_x : spec.fibers[c.fiber].x;
                    if (std::abs(w.x - cx) > 1e-9 || std::abs(w.y - c.y) > 1e-9)
                        fail("strand waypoint detached from its contact");
                    if (w.contact == curve.end_contact) ends_on_axis = true;
                }
            }
            if (!ends_on_axis) fail("strand misses the curve's end contact");
        }
    }
    for (const auto& l : spec.labels)
        if (l.text.empty()) fail("empty label");
}

nlohmann::ordered_json diagram_spec_json(const DiagramSpec& spec) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["view"] = spec.global ? "Z" : "Zp";
    ordered_json fibers = ordered_json::array();
    for (const auto& f : spec.fibers) fibers.push_back({{"label", f.label}, {"x", f.x}});
    j["fibers"] = std::move(fibers);
    j["axis"] = {{"label", spec.axis_label}, {"x", spec.axis_x}};
    j["ellipsis"] = spec.ellipsis_xs;
    j["bounds"] = {{"x_min", spec.x_min}, {"x_max", spec.x_max}, {"height", spec.height}};
    ordered_json contacts = ordered_json::array();
    for (const auto& c : spec.contacts) {
        ordered_json cj = {{"fiber", c.fiber}, {"y", c.y}, {"style", c.style}};
        if (c.scale != 1.0) cj["scale"] = c.scale;
        contacts.push_back(std::move(cj));
    }
    j["contacts"] = std::move(contacts);
    ordered_json curves = ordered_json::array();
    for (const auto& curve : spec.curves) {
        ordered_json cj;
        cj["label"] = curve.label;
        cj["uncertified"] = curve.uncertified;
        cj["straight"] = curve.straight;
        cj["end_contact"] = curve.end_contact;
        ordered_json strands = ordered_json::array();
        for (const auto& s : curve.strands) {
            ordered_json pts = ordered_json::array();
            for (const auto& w : s.points) {
                ordered_json wj = {{"x", w.x}, {"y", w.y}, {"contact", w.contact}};
                if (w.shared_tangent) wj["shared_tangent"] = true;
                pts.push_back(std::move(wj));
            }
            strands.push_back({{"points", std::move(pts)}});
        }
        cj["strands"] = std::move(strands);
        curves.push_back(std::move(cj));
    }
    j["curves"] = std::move(curves);
    ordered_json labels = ordered_json::array();
    for (const auto& l : spec.labels)
        labels.push_back({{"text", l.text},
                          {"x", l.x},
                          {"y", l.y},
                          {"placement", l.placement}});
    j["labels"] = std::move(labels);
    return j;
}

} // namespace padicspec
