#pragma once

#include "fincat/structure.hpp"

namespace fincat {

/// One vertex "*" with a single loop "1".
FiniteGraph point_graph();

/// Two vertices u, v and one edge a : u -> v; no loops.
FiniteGraph bare_arrow_graph();

/// The walking arrow category: objects 0, 1; arrows 1_0, 1_1 and a : 0 -> 1.
OriginalGraph walking_arrow();

/// Three objects 0, 1, 2 with f : 0 -> 1, g : 1 -> 2 and their composite.
OriginalGraph composable_pair();

/// One object, arrows {1, g} with g.g = 1.
OriginalGraph z2_category();

/// First table found by the canonical search: unital magmas on {1,a,b}
/// (unit first), free cells filled lexicographically, first table whose
/// contact fails associativity.
OriginalGraph m3_magma();

/// Enumerates all unital magma tables of the given order (element 0 is the
/// unit) in lexicographic order of the free cells. The callback receives
/// the full order x order table.
void enumerate_unital_magmas(
    std::size_t order, Budget& budget,
    const std::function<bool(const std::vector<std::vector<std::size_t>>&)>& fn);

/// All labeled posets on n elements, lexicographic in the relation matrix.
std::vector<FinitePoset> enumerate_posets(std::size_t n);

/// All graphs on `vertices` fixed vertices with hom sizes up to
/// max_edges_per_hom, lexicographic in the hom-size table.
void enumerate_graphs(std::size_t vertices, std::size_t max_edges_per_hom,
                      Budget& budget,
                      const std::function<bool(const FiniteGraph&)>& fn);

/// All total contact tables on a graph, lexicographic.
void enumerate_contact_tables(
    GraphPtr g, Budget& budget,
    const std::function<bool(const ContactTable&)>& fn);

/// All characters over X with every value set of exactly the given sizes
/// (one size per vertex), all possible actions.
void enumerate_characters(const OriginalGraph& X,
                          const std::vector<std::size_t>& value_sizes,
                          Budget& budget,
                          const std::function<bool(const Character&)>& fn);

}  // namespace fincat
