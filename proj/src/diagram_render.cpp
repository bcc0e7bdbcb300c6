#include "padicspec/diagram.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace padicspec {

namespace {

void f2(std::string& out, double v) {
    if (v < 0 && v > -0.005) v = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    out += buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

/// "(T^12+1)" -> "$(T^{12}+1)$": TikZ labels are math mode, and multi-digit
/// exponents need braces there.
std::string math_label(const std::string& s) {
    std::string out = "$";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j > i + 2) {
                out += "^{";
                out.append(s, i + 1, j - i - 1);
                out += "}";
                i = j - 1;
            } else {
                out += '^';
            }
        } else {
            out += s[i];
        }
    }
    return out + "$";
}

struct Seg {
    double c1x, c1y, c2x, c2y, x, y;
};

struct PathGeom {
    double sx, sy;
    std::vector<Seg> segs;
};

/// Control-point geometry for one strand, in layout units.
///
/// Straight curves interpolate linearly. Two-point strands (the single-fiber
/// view) leave their start with a style-dependent direction: branches of a
/// tangency share one direction with staggered lengths, strands fanning out
/// of a blip diverge, lone contacts leave flat. Longer strands wobble between
/// waypoints with horizontal tangents at every waypoint, the drawn-figure
/// convention, with per-strand amplitude sign so branch pairs separate and
/// rejoin.
PathGeom strand_geometry(const DiagramSpec::Curve& curve, std::size_t si, double amp_unit) {
    const auto& pts = curve.strands[si].points;
    PathGeom g{pts[0].x, pts[0].y, {}};
    const double sc = amp_unit / 0.375;

    if (curve.straight) {
        for (std::size_t i = 1; i < pts.size(); ++i) {
            const auto &a = pts[i - 1], &b = pts[i];
            g.segs.push_back({a.x + (b.x - a.x) / 3.0, a.y + (b.y - a.y) / 3.0,
                              a.x + 2.0 * (b.x - a.x) / 3.0, a.y + 2.0 * (b.y - a.y) / 3.0,
                              b.x, b.y});
        }
        return g;
    }

    if (pts.size() == 2) {
        const auto &S = pts[0], &E = pts[1];
        int shared_count = 0, ordinal = 0;
        if (S.contact >= 0) {
            for (std::size_t k = 0; k < curve.strands.size(); ++k) {
                const auto& o = curve.strands[k].points;
                if (!o.empty() && o[0].contact == S.contact) {
                    if (k == si) ordinal = shared_count;
                    ++shared_count;
                }
            }
        }
        double dx, dy, len;
        if (S.shared_tangent) {
            dx = 2.0;
            dy = 1.0 * sc;
            len = 1.2 + 0.7 * ordinal;
        } else if (shared_count > 1) {
            const double t = static_cast<double>(ordinal) / (shared_count - 1);
            dx = 2.0;
            dy = (1.0 - 2.0 * t) * sc;
            len = 1.4;
        } else {
            dx = 1.0;
            dy = 0.0;
            len = 1.6;
        }
        const double n = std::sqrt(dx * dx + dy * dy);
        const double m = static_cast<double>(curve.strands.size());
        const double vfan = 0.9 * sc * (static_cast<double>(si) - (m - 1.0) / 2.0);
        g.segs.push_back({S.x + dx / n * len, S.y + dy / n * len,
                          E.x - 2.2, E.y + vfan, E.x, E.y});
        return g;
    }

    const double sign = (si % 2 == 0) ? -1.0 : 1.0;
    const double amp = sign * amp_unit * (1.0 + static_cast<double>(si / 2));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto &a = pts[i - 1], &b = pts[i];
        const double dx = (b.x - a.x) / 4.0;
        if (i + 1 == pts.size()) {
            g.segs.push_back({a.x + dx, a.y, b.x - dx, b.y, b.x, b.y});
        } else {
            const double mx = (a.x + b.x) / 2.0;
            const double my = (a.y + b.y) / 2.0 + amp;
            g.segs.push_back({a.x + dx, a.y, mx - dx, my, mx, my});
            g.segs.push_back({mx + dx, my, b.x - dx, b.y, b.x, b.y});
        }
    }
    return g;
}

double contact_x(const DiagramSpec& spec, const DiagramSpec::Contact& c) {
    return c.fiber == -1 ? spec.axis_x : spec.fibers[c.fiber].x;
}

} // namespace

std::string render_svg(const DiagramSpec& spec, const RenderOptions& opts) {
    validate_diagram(spec);
    const double fsr = opts.fiber_spacing / 2.0;
    const double ml = 60, mr = 80, mt = 30, mb = 30;
    const double wpx = (spec.x_max - spec.x_min) * 40.0 * fsr + ml + mr;
    const double hpx = spec.height * 40.0 + mt + mb;
    auto sx = [&](double x) { return (x - spec.x_min) * 40.0 * fsr + ml; };
    auto sy = [&](double y) { return (spec.height - y) * 40.0 + mt; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 ";
    f2(out, wpx);
    out += " ";
    f2(out, hpx);
    out += "\" width=\"";
    f2(out, opts.width > 0 ? opts.width : wpx);
    out += "\" height=\"";
    f2(out, opts.height > 0 ? opts.height : hpx);
    out += "\">\n<style>\n"
           ".fiber,.axis,.ellipsis{stroke:#1a1a1a;stroke-width:1.6;fill:none}\n"
           ".strand{stroke:#1a1a1a;stroke-width:1.4;fill:none}\n"
           ".uncertified{stroke-dasharray:7 5}\n"
           ".dot{fill:#1a1a1a;stroke:none}\n"
           ".tangent{fill:#1a1a1a;stroke:none}\n"
           ".blip{fill:#ffffff;stroke:#1a1a1a;stroke-width:1.6}\n"
           ".fuzzy{stroke:#3c3c3c;stroke-width:1.3;fill:none;opacity:0.8}\n"
           ".label{font-family:Georgia,serif;font-size:";
    f2(out, opts.label_font_size);
    out += "px;fill:#111111}\n</style>\n";

    auto line = [&](const char* cls, double x1, double y1, double x2, double y2) {
        out += "<line class=\"";
        out += cls;
        out += "\" x1=\"";
        f2(out, sx(x1));
        out += "\" y1=\"";
        f2(out, sy(y1));
        out += "\" x2=\"";
        f2(out, sx(x2));
        out += "\" y2=\"";
        f2(out, sy(y2));
        out += "\"/>\n";
    };
    for (const auto& f : spec.fibers) line("fiber", f.x, 0, f.x, spec.height);
    for (double ex : spec.ellipsis_xs) line("ellipsis", ex, 0, ex, spec.height);
    line("axis", spec.axis_x, 0, spec.axis_x, spec.height);

    for (const auto& curve : spec.curves) {
        for (std::size_t si = 0; si < curve.strands.size(); ++si) {
            PathGeom gm = strand_geometry(curve, si, opts.curve_amplitude);
            out += curve.uncertified ? "<path class=\"strand uncertified\" d=\"M "
                                     : "<path class=\"strand\" d=\"M ";
            f2(out, sx(gm.sx));
            out += " ";
            f2(out, sy(gm.sy));
            for (const auto& s : gm.segs) {
                out += " C ";
                f2(out, sx(s.c1x));
                out += " ";
                f2(out, sy(s.c1y));
                out += ", ";
                f2(out, sx(s.c2x));
                out += " ";
                f2(out, sy(s.c2y));
                out += ", ";
                f2(out, sx(s.x));
                out += " ";
                f2(out, sy(s.y));
            }
            out += "\"/>\n";
        }
    }

    for (const auto& c : spec.contacts) {
        const double cx = sx(contact_x(spec, c));
        const double cy = sy(c.y);
        if (c.style == "fuzzy") {
            const double r = 9.0 * c.scale;
            out += "<g class=\"fuzzy\">\n";
            const double off[3][8] = {
                {-1.0, 0.35, -0.5, -0.6, 0.4, -0.7, 1.0, -0.1},
                {-0.9, -0.45, -0.2, 0.5, 0.3, 0.55, 0.95, 0.25},
                {-0.7, 0.7, -0.1, 0.1, 0.5, 0.9, 0.8, -0.5},
            };
            for (const auto& o : off) {
                out += "<path d=\"M ";
                f2(out, cx + o[0] * r);
                out += " ";
                f2(out, cy + o[1] * r);
                out += " C ";
                f2(out, cx + o[2] * r);
                out += " ";
                f2(out, cy + o[3] * r);
                out += ", ";
                f2(out, cx + o[4] * r);
                out += " ";
                f2(out, cy + o[5] * r);
                out += ", ";
                f2(out, cx + o[6] * r);
                out += " ";
                f2(out, cy + o[7] * r);
                out += "\"/>\n";
            }
            out += "</g>\n";
        } else {
            const double r = (c.style == "blip" ? 6.5 : 3.2) * c.scale;
            out += "<circle class=\"";
            out += c.style;
            out += "\" cx=\"";
            f2(out, cx);
            out += "\" cy=\"";
            f2(out, cy);
            out += "\" r=\"";
            f2(out, r);
            out += "\"/>\n";
        }
    }

    for (const auto& l : spec.labels) {
        double dx = 0, dy = 0;
        const char* anchor = "middle";
        if (l.placement == "below") {
            dy = 14;
        } else if (l.placement == "below-right") {
            dx = 7;
            dy = 14;
            anchor = "start";
        } else if (l.placement == "below-left") {
            dx = -7;
            dy = 14;
            anchor = "end";
        } else if (l.placement == "above-left") {
            dx = -6;
            dy = -8;
            anchor = "end";
        } else if (l.placement == "above-right") {
            dx = 6;
            dy = -8;
            anchor = "start";
        } else if (l.placement == "left") {
            dx = -9;
            dy = 4;
            anchor = "end";
        } else if (l.placement == "right") {
            dx = 9;
            dy = 4;
            anchor = "start";
        }
        out += "<text class=\"label\" x=\"";
        f2(out, sx(l.x) + dx);
        out += "\" y=\"";
        f2(out, sy(l.y) + dy);
        out += "\" text-anchor=\"";
        out += anchor;
        out += "\">";
        out += xml_escape(l.text);
        out += "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

std::string render_tikz(const DiagramSpec& spec, const RenderOptions& opts) {
    validate_diagram(spec);
    const double fsr = opts.fiber_spacing / 2.0;
    auto tx = [&](double x) { return spec.x_min + (x - spec.x_min) * fsr; };
    auto xy = [&](std::string& o, double x, double y) {
        o += "(";
        f2(o, tx(x));
        o += ",";
        f2(o, y);
        o += ")";
    };

    std::string out = "\\begin{tikzpicture}[font=\\tiny]\n"
                      "\\tikzset{\n"
                      "  dot/.style={circle, fill, inner sep=1.4pt},\n"
                      "  big dot/.style={circle, draw, thick, inner sep=2.8pt},\n"
                      "  fuzzy/.style={circle, fill=gray!55, inner sep=4pt}\n"
                      "}\n";

    for (const auto& f : spec.fibers) {
        out += "\\draw[thick] ";
        xy(out, f.x, 0);
        out += " -- ";
        xy(out, f.x, spec.height);
        out += ";\n";
    }
    for (double ex : spec.ellipsis_xs) {
        out += "\\draw[thick] ";
        xy(out, ex, 0);
        out += " -- ";
        xy(out, ex, spec.height);
        out += ";\n";
    }
    out += "\\draw[thick] ";
    xy(out, spec.axis_x, 0);
    out += " -- ";
    xy(out, spec.axis_x, spec.height);
    out += ";\n";

    for (const auto& curve : spec.curves) {
        for (std::size_t si = 0; si < curve.strands.size(); ++si) {
            PathGeom gm = strand_geometry(curve, si, opts.curve_amplitude);
            out += curve.uncertified ? "\\draw[thick, dashed] " : "\\draw[thick] ";
            if (curve.straight) {
                xy(out, gm.sx, gm.sy);
                out += " -- ";
                xy(out, gm.segs.back().x, gm.segs.back().y);
            } else {
                xy(out, gm.sx, gm.sy);
                for (const auto& s : gm.segs) {
                    out += " .. controls ";
                    xy(out, s.c1x, s.c1y);
                    out += " and ";
                    xy(out, s.c2x, s.c2y);
                    out += " .. ";
                    xy(out, s.x, s.y);
                }
            }
            out += ";\n";
        }
    }

    for (const auto& c : spec.contacts) {
        out += "\\path ";
        xy(out, contact_x(spec, c), c.y);
        if (c.style == "fuzzy") {
            out += c.scale > 1.0 ? " node[fuzzy, inner sep=6pt] {}" : " node[fuzzy] {}";
        } else if (c.style == "blip") {
            out += " node[big dot] {}";
        } else {
            out += " node[dot] {}";
        }
        out += ";\n";
    }

    for (const auto& l : spec.labels) {
        std::string place = l.placement;
        for (auto& ch : place)
            if (ch == '-') ch = ' ';
        out += "\\node[" + place + "] at ";
        xy(out, l.x, l.y);
        out += " {" + math_label(l.text) + "};\n";
    }

    out += "\\end{tikzpicture}\n";
    return out;
}

std::string render(const DiagramSpec& spec, const RenderOptions& opts) {
    return opts.format == RenderOptions::Format::Tikz ? render_tikz(spec, opts)
                                                      : render_svg(spec, opts);
}

} // namespace padicspec
