#pragma once

#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

enum class BlockKind { Clique, OddCycle, Other };

struct Block {
  /// Vertices of the block, increasing.
  std::vector<Vertex> vertices;
  BlockKind kind = BlockKind::Other;
};

struct BlockDecomposition {
  std::vector<Vertex> cut_vertices;
  /// Blocks sorted by their vertex lists.
  std::vector<Block> blocks;
};

/// Cut vertices and blocks (maximal 2-connected pieces, bridges and
/// isolated vertices included) of any graph.
BlockDecomposition block_decomposition(const Graph& g);

struct GallaiVerdict {
  bool gallai_tree = false;
  BlockDecomposition decomposition;
};

/// A connected graph is a Gallai tree when every block is a clique (a
/// bridge counts as K2) or an odd cycle. Throws PreconditionError on
/// disconnected input.
GallaiVerdict is_gallai_tree(const Graph& g);

}  // namespace kempe
