#pragma once

#include <string>
#include <vector>

#include "invwilf/core.hpp"
#include "invwilf/exchange.hpp"

namespace invwilf {

enum class DiagramFormat { Svg, TikZ };
DiagramFormat parse_diagram_format(const std::string& name);  // throws UnknownFormat

/// One highlighted pattern: its occurrences are shaded and annotated with an
/// under-path arc. style_slot selects the color (0 = blue, 1 = green, ...).
struct Highlight {
    Pattern pattern;
    std::string label;
    OccurrenceSet positions;
    int style_slot = 0;
};

/// Underdiagonal lattice path: a horizontal segment at height e_i over
/// x in [i-1, i], with vertical connectors between consecutive heights.
struct PathDiagram {
    Word sequence;
    std::vector<Highlight> highlights;
};

/// Byte-deterministic SVG 1.1 document or TikZ picture. Every highlight
/// window is re-verified as a true occurrence (InvalidHighlight otherwise).
std::string render_diagram(const PathDiagram& d, DiagramFormat format);

/// Three rows of entries (before, mid, after) with solid copy edges and
/// dotted equality-trigger edges taken from the audit logs of the two passes.
/// Requires mid = exchange(before) and after = exchange(mid).
std::string render_exchange_diagram(const Word& before, const Word& mid, const Word& after,
                                    ExchangeFamily family);

}  // namespace invwilf
