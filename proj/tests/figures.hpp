#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tnnlag/cells.hpp"
#include "tnnlag/plabic.hpp"

// Plabic graphs transcribed from the drawings, vertex coordinates included.
namespace figures {

// Reduced graph whose strands give (4,3,6,7,8,11).  Same graph as the left two-graphs network.
tnnlag::PlabicNetwork permutation_graph();
// Reduced, not ρ-symmetric network for X.
tnnlag::PlabicNetwork two_graphs_left();
// ρ-symmetric, non-reduced network for X.
tnnlag::PlabicNetwork two_graphs_right();
tnnlag::PlabicGraph top_cell_2();
tnnlag::PlabicGraph top_cell_3();

// Hasse diagram of the n = 2 cell structure as drawn, edges (upper, lower) with labels like "2A":
// the digit is the row (1 = top cell, 4 = points), the letter the position in the row.
// `corrected` replaces the drawn edge 2A-3E by 2B-3E.
std::vector<std::pair<std::string, std::string>> cell_structure_edges(bool corrected);
// Windows of the labels in rows 1 to 3, read off the drawing.
const std::vector<std::pair<std::string, std::vector<int>>>& cell_structure_labels();
// Is there a rank-preserving bijection from labels to nodes carrying the edges onto the Hasse
// edges?  With use_labels, labelled nodes must go to their recorded windows.
bool cell_structure_matches(const tnnlag::CellPoset& P, const std::vector<std::pair<std::string, std::string>>& edges,
                            bool use_labels);

}  // namespace figures
