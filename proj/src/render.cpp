#include "invwilf/render.hpp"

#include <algorithm>
#include <sstream>

namespace invwilf {

namespace {

const char* kSlotColors[] = {"blue", "green", "red", "orange", "violet", "teal"};
const char* kSlotRgb[] = {"#2b6cb8", "#2f9e44", "#c92a2a", "#e8590c", "#9c36b5", "#0b7285"};
constexpr int kSlotCount = 6;

const char* slot_color(int slot) { return kSlotColors[slot % kSlotCount]; }
const char* slot_rgb(int slot) { return kSlotRgb[slot % kSlotCount]; }

void check_highlights(const PathDiagram& d) {
    for (const auto& h : d.highlights)
        for (int i : h.positions)
            if (!window_matches(h.pattern, d.sequence, i)) throw InvalidHighlight(i, h.pattern.str());
}

// Fixed-point decimal so output is byte-stable across platforms.
std::string dec1(double v) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << v;
    return os.str();
}

std::string render_tikz(const PathDiagram& d) {
    const Word& e = d.sequence;
    const int n = static_cast<int>(e.size());
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale = .5]\n";
    for (const auto& h : d.highlights) {
        const char* color = slot_color(h.style_slot);
        const int r = h.pattern.length();
        for (int i : h.positions) {
            os << "\\draw[thick, " << color << "] (" << dec1(i - 1 + 0.1)
               << ", -.3) to[out=-30,in=210] (" << dec1(i - 1 + r - 0.1) << ", -.3);\n";
            os << "\\draw[" << color << "] (" << dec1(i - 1 + r / 2.0) << ",-1.3) node{$"
               << h.label << "$};\n";
            for (int k = 0; k < r; ++k) {
                const int x = i - 1 + k;
                const int hgt = e[x];
                os << "\\filldraw[" << color << ", opacity=.3] (" << x << ", 0) -- (" << x << ", "
                   << hgt << ") -- (" << x + 1 << ", " << hgt << ") -- (" << x + 1 << ", 0);\n";
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            os << "\\draw (0," << e[0] << ") -- (1, " << e[0] << ");\n";
        else
            os << "\\draw (" << i << "," << e[i - 1] << ") -- (" << i << ", " << e[i] << ") -- ("
               << i + 1 << ", " << e[i] << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string render_svg(const PathDiagram& d) {
    const Word& e = d.sequence;
    const int n = static_cast<int>(e.size());
    const int u = 24;                 // pixels per unit
    const int margin = 12;
    const int max_h = std::max(1, *std::max_element(e.begin(), e.end()));
    const int y0 = margin + max_h * u;           // y of height 0
    const int width = 2 * margin + n * u;
    const int height = y0 + 2 * u + margin;      // room for arcs and labels
    auto x_of = [&](int pos) { return margin + (pos - 1) * u; };  // 1-based position
    auto y_of = [&](int h) { return y0 - h * u; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (const auto& h : d.highlights) {
        const char* rgb = slot_rgb(h.style_slot);
        const int r = h.pattern.length();
        for (int i : h.positions) {
            for (int k = 0; k < r; ++k) {
                const int pos = i + k;
                os << "  <rect x=\"" << x_of(pos) << "\" y=\"" << y_of(e[pos - 1]) << "\" width=\""
                   << u << "\" height=\"" << e[pos - 1] * u << "\" fill=\"" << rgb
                   << "\" fill-opacity=\"0.3\"/>\n";
            }
            const int xa = x_of(i), xb = x_of(i) + r * u;
            os << "  <path d=\"M " << xa + 2 << ' ' << y0 + 6 << " Q " << (xa + xb) / 2 << ' '
               << y0 + u << ' ' << xb - 2 << ' ' << y0 + 6 << "\" fill=\"none\" stroke=\"" << rgb
               << "\" stroke-width=\"2\"/>\n";
            os << "  <text x=\"" << (xa + xb) / 2 << "\" y=\"" << y0 + u + 14
               << "\" text-anchor=\"middle\" font-size=\"14\" fill=\"" << rgb << "\">" << h.label
               << "</text>\n";
        }
    }
    os << "  <polyline points=\"";
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            os << x_of(1) << ',' << y_of(e[0]);
        else
            os << ' ' << x_of(i + 1) << ',' << y_of(e[i - 1]) << ' ' << x_of(i + 1) << ','
               << y_of(e[i]);
        os << ' ' << x_of(i + 1) + u << ',' << y_of(e[i]);
    }
    os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace

DiagramFormat parse_diagram_format(const std::string& name) {
    if (name == "svg" || name == "SVG") return DiagramFormat::Svg;
    if (name == "tikz" || name == "TikZ" || name == "tex") return DiagramFormat::TikZ;
    throw UnknownFormat(name);
}

std::string render_diagram(const PathDiagram& d, DiagramFormat format) {
    if (d.sequence.empty()) throw InvalidSequence("cannot render an empty sequence");
    check_highlights(d);
    switch (format) {
        case DiagramFormat::Svg: return render_svg(d);
        case DiagramFormat::TikZ: return render_tikz(d);
    }
    throw UnknownFormat("?");
}

std::string render_exchange_diagram(const Word& before, const Word& mid, const Word& after,
                                    ExchangeFamily family) {
    if (exchange(before, family) != mid)
        throw InconsistentTriple("second row is not the image of the first");
    if (exchange(mid, family) != after)
        throw InconsistentTriple("third row is not the image of the second");
    const int n = static_cast<int>(before.size());
    const Word* rows[3] = {&before, &mid, &after};
    const char* row_label[3] = {"$\\epsilon$", "$\\epsilon'$", "$\\epsilon''$"};

    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=1]\n\\draw\n";
    for (int r = 0; r < 3; ++r) {
        const std::string y = dec1(r == 0 ? 0.0 : -1.5 * r);
        os << "(-1," << y << ") node {" << row_label[r] << "}\n";
        for (int i = 1; i <= n; ++i)
            os << "(" << i - 1 << "," << y << ") node (r" << r << "p" << i << "){"
               << (*rows[r])[i - 1] << "}\n";
    }
    os << ";\n";

    // Edges from the two audit logs. For a replacement at position i
    // triggered by the occurrence at j = i-2:
    //   original p:  dotted j ~ i on the source row, copy from j+1;
    //   original q:  dotted j+1 ~ i on the source row, copy from j (current);
    //   transient p: dotted (next row) j ~ i, copy of the displaced entry at j.
    std::ostringstream dotted, solid;
    for (int pass = 0; pass < 2; ++pass) {
        const AuditReport log = audit_pass(*rows[pass], family);
        for (const auto& rep : log.replacements) {
            const int i = rep.position, j = rep.position - 2;
            switch (rep.kind) {
                case OccurrenceKind::OriginalP:
                    dotted << "(r" << pass << "p" << j << ") edge[bend right=40] (r" << pass << "p"
                           << i << ")\n";
                    solid << "(r" << pass << "p" << j + 1 << ") edge (r" << pass + 1 << "p" << i
                          << ")\n";
                    break;
                case OccurrenceKind::OriginalQ:
                    dotted << "(r" << pass << "p" << j + 1 << ") edge (r" << pass << "p" << i
                           << ")\n";
                    solid << "(r" << pass + 1 << "p" << j << ") edge (r" << pass + 1 << "p" << i
                          << ")\n";
                    break;
                case OccurrenceKind::TransientP:
                    dotted << "(r" << pass + 1 << "p" << j << ") edge (r" << pass << "p" << i
                           << ")\n";
                    solid << "(r" << pass << "p" << j << ") edge (r" << pass + 1 << "p" << i
                          << ")\n";
                    break;
                case OccurrenceKind::TransientQ:
                    break;  // never recorded
            }
        }
    }
    os << "\\path[line width = .7mm, dotted, magenta]\n" << dotted.str() << ";\n";
    os << "\\path[line width = .7mm, ->,>=stealth, cyan]\n" << solid.str() << ";\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace invwilf
