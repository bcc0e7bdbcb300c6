#ifndef PADICSPEC_DIAGRAM_HPP
#define PADICSPEC_DIAGRAM_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "padicspec/poly.hpp"
#include "padicspec/prime.hpp"
#include "padicspec/spectrum.hpp"

namespace padicspec {

/// Declarative picture of Spec Z_p[T] or Spec Z[T]: vertical fiber lines, a
/// vertical generic axis at the right, marked contact points, and horizontal
/// anchor curves drawn as one strand per degree. All coordinates are layout
/// units (the renderer scales them); y grows upward from the baseline at 0.
struct DiagramSpec {
    struct Fiber {
        std::string label;  // "(7)"
        double x;
    };

    /// style: "dot" (closed rational point), "blip" (big empty circle, inert
    /// irreducible contact), "tangent" (doubled contact), "fuzzy" (generic
    /// point with volume).
    struct Contact {
        int fiber;  // index into fibers; -1 = on the generic axis
        double y;
        std::string style;
        double scale;  // marker size multiplier; the (0) blob uses 1.5
    };

    struct Waypoint {
        double x, y;
        int contact;  // index into contacts, or -1 for a plain crossing
        bool shared_tangent;  // branches leave this point with one direction
    };

    struct Strand {
        std::vector<Waypoint> points;  // left to right; last point on the axis
    };

    struct Curve {
        std::string label;  // "(T^2+1)"
        std::vector<Strand> strands;
        bool uncertified;  // undecided generic verdict: dashed rendering
        bool straight;     // the (T) baseline; no wobble
        int end_contact;   // fuzzy endpoint contact on the axis
    };

    struct Label {
        std::string text;
        double x, y;
        std::string placement;  // below, below-right, above-left, above-right, left, right
    };

    bool global = false;  // multi-fiber Spec Z[T] view
    std::vector<Fiber> fibers;
    std::string axis_label;  // "(0)"
    double axis_x = 0;
    std::vector<double> ellipsis_xs;  // unlabeled fiber lines, no contacts
    std::vector<Contact> contacts;
    std::vector<Curve> curves;
    std::vector<Label> labels;
    double x_min = 0, x_max = 0, height = 0;
};

struct RenderOptions {
    enum class Format { Svg, Tikz };
    Format format = Format::Svg;
    /// SVG width/height attribute overrides in px; 0 derives both from layout.
    double width = 0, height = 0;
    /// Horizontal stretch anchor: layout fiber pitch is 2.0 units; other
    /// values rescale all x distances by fiber_spacing / 2.0.
    double fiber_spacing = 2.0;
    /// Wobble/control-offset anchor: 0.375 is the drawn-figure amplitude;
    /// other values rescale every curve offset proportionally.
    double curve_amplitude = 0.375;
    double label_font_size = 11.0;
};

/// One-fiber view. The report's anchor joins `anchors` (deduplicated, order
/// kept); extra anchors get their own reports at the same prime. The plain
/// (T) baseline, the fiber and axis lines, and the (p,T) dot are always
/// present; an anchor equal to T is absorbed by the baseline.
DiagramSpec plan_zp_diagram(const FiberReport& report, const std::vector<IntPoly>& anchors);
DiagramSpec plan_zp_diagram(const Prime& p, const std::vector<IntPoly>& anchors);

/// Multi-fiber view with ambient closed points (p,T+k) on every fiber,
/// labeled up to the budget, plus trailing unlabeled ellipsis lines.
DiagramSpec plan_global_diagram(const FiberReport& report, const std::vector<IntPoly>& anchors,
                                unsigned closed_point_budget);
DiagramSpec plan_global_diagram(const std::vector<Prime>& primes,
                                const std::vector<IntPoly>& anchors,
                                unsigned closed_point_budget);

/// Throws std::invalid_argument on dangling contact references, bad styles,
/// or out-of-range geometry. render() calls this before emitting anything.
void validate_diagram(const DiagramSpec& spec);

std::string render_svg(const DiagramSpec& spec, const RenderOptions& opts);
std::string render_tikz(const DiagramSpec& spec, const RenderOptions& opts);
std::string render(const DiagramSpec& spec, const RenderOptions& opts);

nlohmann::ordered_json diagram_spec_json(const DiagramSpec& spec);

} // namespace padicspec

#endif
