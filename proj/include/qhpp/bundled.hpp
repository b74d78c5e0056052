#pragma once

// The two bundled intersection graphs, embedded as documents in the same
// format the file parser consumes (no privileged construction path). S1 is
// the 16-curve configuration obtained from a self-product Kummer surface by
// a Lieberman involution; S2 the 12-curve configuration from a Kondo-Mukai
// involution. Copies of the same documents ship in data/.

#include "io.hpp"

namespace qhpp {

// S1: two interleaved octagons of F- and L-curves, a doubled complete graph
// on the four D-curves, and doubled edges joining each D to two opposite
// F-curves.
inline const char* const kBundledS1 = R"json({
  "name": "S1",
  "vertices": ["F11", "F12", "F13", "F14", "F31", "F32", "F33", "F34",
               "L12", "L34", "L'12", "L'34", "D1", "D2", "D3", "D4"],
  "edges": [
    ["F11", "L12"], ["L12", "F14"], ["F14", "L'34"], ["L'34", "F33"],
    ["F33", "L34"], ["L34", "F32"], ["F32", "L'12"], ["L'12", "F11"],

    ["L'12", "F12"], ["F12", "L12"], ["L12", "F13"], ["F13", "L'34"],
    ["L'34", "F34"], ["F34", "L34"], ["L34", "F31"], ["F31", "L'12"],

    ["D1", "D2", 2], ["D1", "D3", 2], ["D1", "D4", 2],
    ["D2", "D3", 2], ["D2", "D4", 2], ["D3", "D4", 2],

    ["D1", "F11", 2], ["D1", "F33", 2],
    ["D2", "F14", 2], ["D2", "F32", 2],
    ["D3", "F13", 2], ["D3", "F31", 2],
    ["D4", "F12", 2], ["D4", "F34", 2]
  ]
}
)json";

// S2: a hexagon of L- and F-curves with inscribed chords, plus the two
// doubled edges to D1 and B.
inline const char* const kBundledS2 = R"json({
  "name": "S2",
  "vertices": ["L44", "L33", "L12", "L21", "F11", "F13", "F14", "F23",
               "F24", "F34", "D1", "B"],
  "edges": [
    ["L44", "F34"], ["F34", "L33"], ["L33", "F13"], ["F13", "L12"],
    ["L12", "F14"], ["F14", "L44"], ["L12", "F11"], ["F11", "L21"],
    ["L21", "F23"], ["F23", "L33"], ["L44", "F24"], ["F24", "L21"],

    ["F11", "D1", 2], ["L12", "B", 2]
  ]
}
)json";

inline const char* bundled_graph_text(const std::string& name) {
    if (name == "S1") return kBundledS1;
    if (name == "S2") return kBundledS2;
    throw std::invalid_argument("unknown bundled graph '" + name + "' (have S1, S2)");
}

inline CurveGraph bundled_graph(const std::string& name) {
    return parse_graph_document(bundled_graph_text(name));
}

} // namespace qhpp
