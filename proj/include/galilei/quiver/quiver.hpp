#pragma once

// The three blocks of the category of g-Harish-Chandra modules with a fixed
// radical central character, presented by quivers with relations.
//
// Block 1: V(odd), chain ... V(7) - V(3) - V(1) - V(5) - V(9) ..., all
//          2-cycles zero.
// Block 2: V(n), n = 2 mod 4, loop at V(2), arrows V(n) <-> V(n+4); 2-cycles
//          between distinct vertices zero and loop^2 = 0.
// Block 3: V'(0), V'(2), V(4k); a: V'(0)->V(4), b: V(4)->V'(0),
//          c: V'(2)->V(4), d: V(4)->V'(2), V(n) <-> V(n+4) for n >= 4.
//          Composing right to left: ab = cd, da = bc = 0, and every other
//          2-cycle is zero.

#include <galilei/sl2/harish_chandra.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace galilei::quiver {

using sl2::HCMultiset;
using sl2::SimpleHC;

int block_of(SimpleHC s);

// 1 iff the block quiver has an arrow s -> t.
int ext_dim(SimpleHC s, SimpleHC t);

struct Arrow {
    std::string name;
    SimpleHC source;
    SimpleHC target;
};

// Arrow pairs are written in path order: (first, second) means first
// followed by second.
using ArrowPair = std::pair<size_t, size_t>;

struct QuiverPresentation {
    int block = 0;
    int max_index = 0;  // vertices with index above this are cut off
    std::vector<SimpleHC> vertices;
    std::vector<Arrow> arrows;
    std::vector<ArrowPair> zero_relations;
    // Each rule replaces the left pair by the right one.
    std::vector<std::pair<ArrowPair, ArrowPair>> rewrites;

    std::vector<size_t> arrows_from(SimpleHC v) const;
    // Human-readable relations, e.g. "V(4)->V(8)->V(4) = 0", "d c = b a".
    std::vector<std::string> relation_strings() const;
};

QuiverPresentation presentation(int block, int max_index);

struct RadicalFiltration {
    SimpleHC top;
    int depth = 0;
    std::vector<HCMultiset> layers;  // layers[0] = {top}
};

// Layer l holds the endpoints of the nonzero length-l paths from top, taken
// modulo the relations. The quiver is cut at index top + 4 * (depth + 2).
RadicalFiltration radical_filtration(SimpleHC top, int depth);
RadicalFiltration radical_filtration(SimpleHC top, int depth, int max_index);

std::string to_string(const RadicalFiltration& f);

}  // namespace galilei::quiver
