#pragma once

#include "verlinde/weights.hpp"

#include <string>
#include <vector>

namespace verlinde {

/// Set partition of a vertex set: sorted blocks, ordered by smallest element.
using SetPartition = std::vector<std::vector<int>>;

/// Connected components of the graph on `vertices` with the given edges.
SetPartition components_on(const std::vector<int>& vertices,
                           const std::vector<Root>& edges);

/// Partition flag of an ordered basis on a vertex set: entry j-1 is the
/// component partition induced by the last j roots, j = 1..size.
std::vector<SetPartition> partition_sequence_on(
    const std::vector<int>& vertices, const OrderedBasis& B);

std::vector<SetPartition> partition_sequence(const OrderedBasis& B);

/// B separates C: C's flag differs from the flag of every reordering of B.
bool dashv_on(const std::vector<int>& vertices, const OrderedBasis& B,
              const OrderedBasis& C);

/// Diagonal family: (n-1)! full bases on the vertex set, pairwise separating.
bool is_diagonal_on(const std::vector<int>& vertices,
                    const std::vector<OrderedBasis>& family);

bool is_diagonal(int r, const std::vector<OrderedBasis>& family);

/// Path bases indexed by the permutations fixing the start vertex m:
/// entry t of the basis for sigma is the root (sigma(n-t), sigma(n-t+1))
/// on a vertex list of length n. Family size (n-1)!.
std::vector<OrderedBasis> hamiltonian_family_on(
    int r, const std::vector<int>& vertices, int start);

std::vector<OrderedBasis> hamiltonian_family(int r, int start);

/// Linear order on the positively oriented edges of the complete graph.
using EdgeOrder = std::vector<Root>;

EdgeOrder lex_edge_order(const std::vector<int>& vertices);

EdgeOrder lex_edge_order(int r);

/// Edge order adapted to a wall partition: the link edge first, then the
/// remaining crossing edges, then edges internal to each block.
EdgeOrder wall_adapted_order(const Partition& p);

Root link_edge(const Partition& p);

/// Parses "13,14,23,24,12,34" into an edge order; validates that it is a
/// permutation of all edges on {1..r} in positive orientation.
EdgeOrder parse_edge_order(const std::string& text, int r);

/// Broken-circuit-free bases for the edge order, each listed ascending by the
/// order. Family size (n-1)! on n vertices.
std::vector<OrderedBasis> nbc_family_on(int r, const std::vector<int>& vertices,
                                        const EdgeOrder& order);

std::vector<OrderedBasis> nbc_family(int r, const EdgeOrder& order);

/// Members with exactly one root crossing the partition; dropping that root
/// splits the spanning tree into the partition's two blocks.
std::vector<OrderedBasis> restrict_to_wall(
    const std::vector<OrderedBasis>& family, const Partition& p);

/// (link, left basis on the prime block, right basis on the complement).
OrderedBasis compose_wall_basis(int r, const Root& link,
                                const OrderedBasis& left,
                                const OrderedBasis& right);

/// Diagonal families on a wall's two blocks (broken-circuit-free under the
/// lexicographic edge order), for the factorized crossing term.
struct WallBases {
  Root link;
  std::vector<OrderedBasis> left;
  std::vector<OrderedBasis> right;
};

WallBases wall_bases(const Partition& p);

/// Relabels every root through sigma (1-based image array).
OrderedBasis permute_basis(const OrderedBasis& B,
                           const std::vector<int>& sigma);

std::vector<OrderedBasis> permute_family(const std::vector<OrderedBasis>& fam,
                                         const std::vector<int>& sigma);

/// Canonical comparison key: the (i,j) entries in order.
std::vector<std::pair<int, int>> basis_key(const OrderedBasis& B);

/// True when the two families contain the same ordered bases as sets.
bool same_family(const std::vector<OrderedBasis>& a,
                 const std::vector<OrderedBasis>& b);

}  // namespace verlinde
