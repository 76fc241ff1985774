#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcpeq/morphism.hpp"
#include "pcpeq/words.hpp"

namespace pcpeq {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Directed edge labelled by a positive letter; reading it backwards spells
/// the inverse letter.
struct Edge {
    EdgeId id = 0;
    VertexId source = 0;
    VertexId target = 0;
    std::uint32_t label = 0;
};

struct PathStep {
    EdgeId edge = 0;
    bool forward = true;

    bool operator==(const PathStep&) const = default;
};

/// Closed path at the base spelling the image of one domain generator.
struct Petal {
    std::size_t generator = 0;
    std::vector<PathStep> path;
};

/// Base-pointed directed graph with edges labelled over a group alphabet.
///
/// Vertex and edge ids are arbitrary (subgraphs keep the ids of the graph
/// they were cut from) but are kept sorted.
class StallingsGraph {
public:
    StallingsGraph(Alphabet labels, std::vector<VertexId> vertices, std::vector<Edge> edges,
                   VertexId base, std::optional<std::vector<Petal>> petals = std::nullopt);

    const Alphabet& labels() const { return labels_; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexId base() const { return base_; }
    const std::optional<std::vector<Petal>>& petals() const { return petals_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_vertex(VertexId v) const;
    const Edge& edge(EdgeId id) const;

    /// Loops count twice.
    std::size_t degree(VertexId v) const;
    const std::vector<EdgeId>& outgoing(VertexId v) const;
    const std::vector<EdgeId>& incoming(VertexId v) const;

    /// The unique step from v reading `letter`, if any. Only meaningful on a
    /// folded graph; on an unfolded graph the first match is returned.
    std::optional<PathStep> step(VertexId v, Letter letter) const;

    VertexId endpoint(PathStep s) const;
    Letter step_label(PathStep s) const;

private:
    std::size_t position(VertexId v) const;

    Alphabet labels_;
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    VertexId base_;
    std::optional<std::vector<Petal>> petals_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

/// One petal per generator spelling f(a). Group mode; rejects empty images.
StallingsGraph bouquet(const Morphism& f);

/// No vertex has two outgoing (or two incoming) edges with equal labels.
bool is_folded_both_ways(const StallingsGraph& g);

/// Label-synchronised product with base (base1, base2). Edge and vertex
/// provenance is recorded so the projections back onto the factors can be
/// read off.
struct ProductGraph {
    StallingsGraph graph;
    std::vector<std::pair<VertexId, VertexId>> vertex_pairs; // indexed by product vertex id
    std::vector<std::pair<EdgeId, EdgeId>> edge_pairs;       // indexed by product edge id
};

ProductGraph product(const StallingsGraph& g1, const StallingsGraph& g2);

/// Repeatedly removes degree-1 vertices other than v, then keeps only the
/// connected component of v. Ids are preserved; petal data is dropped.
StallingsGraph core_at(const StallingsGraph& g, VertexId v);

/// Core of the product of two bouquets at the pair of base vertices, with the
/// projections of its edges onto each bouquet.
struct PairCore {
    StallingsGraph core;
    StallingsGraph gamma_g;
    StallingsGraph gamma_h;
    std::map<EdgeId, EdgeId> delta_g;
    std::map<EdgeId, EdgeId> delta_h;
};

/// Requires both morphisms to be immersions with a common codomain.
PairCore core_of_pair(const Morphism& g, const Morphism& h);

/// Closed reduced paths at the base of a bouquet-shaped graph, one per petal,
/// each oriented so its first letter is the smaller of the two possible first
/// letters, sorted by that letter.
std::vector<std::vector<PathStep>> canonical_petals(const StallingsGraph& g);

Word path_label(const StallingsGraph& g, const std::vector<PathStep>& path);

struct PetalMaps {
    Morphism g_prime;
    Morphism h_prime;
    std::vector<Word> petal_labels;
};

/// One fresh generator p0, p1, ... per core petal (canonical order);
/// g'(p) is the word read by pushing the petal through delta_g and collapsing
/// bouquet petal traversals to generators. Verifies g g' = h h'.
PetalMaps petals_to_morphisms(const PairCore& pair, const Morphism& g, const Morphism& h);

/// True iff w labels a closed path at the base. Requires a folded graph.
bool membership(const StallingsGraph& g, const Word& w);

/// Deterministic Graphviz rendering.
std::string export_dot(const StallingsGraph& g);

} // namespace pcpeq
