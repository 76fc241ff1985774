#include "pcpeq/stallings.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pcpeq {

StallingsGraph::StallingsGraph(Alphabet labels, std::vector<VertexId> vertices,
                               std::vector<Edge> edges, VertexId base,
                               std::optional<std::vector<Petal>> petals)
    : labels_(std::move(labels)), vertices_(std::move(vertices)), edges_(std::move(edges)),
      base_(base), petals_(std::move(petals)) {
    if (labels_.mode() != Mode::group) {
        throw ModeError("Stallings graphs are labelled over a group alphabet");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw std::invalid_argument("duplicate vertex id");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    if (!has_vertex(base_)) {
        throw std::invalid_argument("base vertex is not in the graph");
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (i > 0 && edges_[i - 1].id == e.id) {
            throw std::invalid_argument("duplicate edge id");
        }
        if (e.label >= labels_.size()) {
            throw AlphabetMismatch("edge label outside the label alphabet");
        }
        out_[position(e.source)].push_back(e.id);
        in_[position(e.target)].push_back(e.id);
    }
}

bool StallingsGraph::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t StallingsGraph::position(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
        throw std::out_of_range("vertex id " + std::to_string(v) + " not in graph");
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

const Edge& StallingsGraph::edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) {
        throw std::out_of_range("edge id " + std::to_string(id) + " not in graph");
    }
    return *it;
}

std::size_t StallingsGraph::degree(VertexId v) const {
    const std::size_t p = position(v);
    return out_[p].size() + in_[p].size();
}

const std::vector<EdgeId>& StallingsGraph::outgoing(VertexId v) const {
    return out_[position(v)];
}

const std::vector<EdgeId>& StallingsGraph::incoming(VertexId v) const {
    return in_[position(v)];
}

std::optional<PathStep> StallingsGraph::step(VertexId v, Letter letter) const {
    const std::size_t p = position(v);
    const auto& candidates = letter.sign > 0 ? out_[p] : in_[p];
    for (EdgeId id : candidates) {
        if (edge(id).label == letter.index) {
            return PathStep{id, letter.sign > 0};
        }
    }
    return std::nullopt;
}

VertexId StallingsGraph::endpoint(PathStep s) const {
    const Edge& e = edge(s.edge);
    return s.forward ? e.target : e.source;
}

Letter StallingsGraph::step_label(PathStep s) const {
    return {edge(s.edge).label, static_cast<std::int8_t>(s.forward ? 1 : -1)};
}

StallingsGraph bouquet(const Morphism& f) {
    if (f.mode() != Mode::group) {
        throw ModeError("bouquet requires a free group morphism");
    }
    std::vector<VertexId> vertices{0};
    std::vector<Edge> edges;
    std::vector<Petal> petals;
    VertexId next_vertex = 1;
    for (std::size_t a = 0; a < f.domain().size(); ++a) {
        const Word& img = f.image(a);
        if (img.empty()) {
            throw std::invalid_argument("bouquet: image of " + f.domain().symbol(a) +
                                        " is empty (degenerate petal)");
        }
        Petal petal{a, {}};
        VertexId current = 0;
        for (std::size_t i = 0; i < img.size(); ++i) {
            VertexId next = 0;
            if (i + 1 < img.size()) {
                next = next_vertex++;
                vertices.push_back(next);
            }
            const Letter l = img[i];
            const auto id = static_cast<EdgeId>(edges.size());
            if (l.sign > 0) {
                edges.push_back({id, current, next, l.index});
            } else {
                edges.push_back({id, next, current, l.index});
            }
            petal.path.push_back({id, l.sign > 0});
            current = next;
        }
        petals.push_back(std::move(petal));
    }
    return StallingsGraph(f.codomain(), std::move(vertices), std::move(edges), 0,
                          std::move(petals));
}

bool is_folded_both_ways(const StallingsGraph& g) {
    for (VertexId v : g.vertices()) {
        for (const auto* side : {&g.outgoing(v), &g.incoming(v)}) {
            std::set<std::uint32_t> labels;
            for (EdgeId id : *side) {
                if (!labels.insert(g.edge(id).label).second) {
                    return false;
                }
            }
        }
    }
    return true;
}

ProductGraph product(const StallingsGraph& g1, const StallingsGraph& g2) {
    if (!(g1.labels() == g2.labels())) {
        throw AlphabetMismatch("product: graphs are labelled over different alphabets");
    }
    const auto& v1 = g1.vertices();
    const auto& v2 = g2.vertices();
    auto pos = [](const std::vector<VertexId>& vs, VertexId v) {
        return static_cast<VertexId>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    auto pair_id = [&](VertexId a, VertexId b) {
        return static_cast<VertexId>(pos(v1, a) * v2.size() + pos(v2, b));
    };

    ProductGraph out{StallingsGraph(g1.labels(), {0}, {}, 0), {}, {}};
    std::vector<VertexId> vertices;
    for (VertexId a : v1) {
        for (VertexId b : v2) {
            vertices.push_back(pair_id(a, b));
            out.vertex_pairs.emplace_back(a, b);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e1 : g1.edges()) {
        for (const Edge& e2 : g2.edges()) {
            if (e1.label != e2.label) {
                continue;
            }
            const auto id = static_cast<EdgeId>(edges.size());
            edges.push_back({id, pair_id(e1.source, e2.source), pair_id(e1.target, e2.target),
                             e1.label});
            out.edge_pairs.emplace_back(e1.id, e2.id);
        }
    }
    out.graph = StallingsGraph(g1.labels(), std::move(vertices), std::move(edges),
                               pair_id(g1.base(), g2.base()));
    return out;
}

StallingsGraph core_at(const StallingsGraph& g, VertexId v) {
    if (!g.has_vertex(v)) {
        throw std::out_of_range("core_at: vertex not in graph");
    }
    std::map<VertexId, std::size_t> degree;
    for (VertexId u : g.vertices()) {
        degree[u] = g.degree(u);
    }
    std::set<EdgeId> removed_edges;
    std::set<VertexId> removed_vertices;
    std::deque<VertexId> queue;
    for (const auto& [u, d] : degree) {
        if (u != v && d <= 1) {
            queue.push_back(u);
        }
    }
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        if (removed_vertices.count(u) || degree[u] > 1) {
            continue;
        }
        removed_vertices.insert(u);
        for (const auto* side : {&g.outgoing(u), &g.incoming(u)}) {
            for (EdgeId id : *side) {
                if (!removed_edges.insert(id).second) {
                    continue;
                }
                const Edge& e = g.edge(id);
                const VertexId other = e.source == u ? e.target : e.source;
                degree[other] -= 1;
                if (other != v && !removed_vertices.count(other) && degree[other] <= 1) {
                    queue.push_back(other);
                }
            }
        }
    }

    // Keep the component of v.
    std::set<VertexId> reached{v};
    std::deque<VertexId> frontier{v};
    while (!frontier.empty()) {
        const VertexId u = frontier.front();
        frontier.pop_front();
        for (const auto* side : {&g.outgoing(u), &g.incoming(u)}) {
            for (EdgeId id : *side) {
                if (removed_edges.count(id)) {
                    continue;
                }
                const Edge& e = g.edge(id);
                const VertexId other = e.source == u ? e.target : e.source;
                if (reached.insert(other).second) {
                    frontier.push_back(other);
                }
            }
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (!removed_edges.count(e.id) && reached.count(e.source) && reached.count(e.target)) {
            edges.push_back(e);
        }
    }
    return StallingsGraph(g.labels(), std::vector<VertexId>(reached.begin(), reached.end()),
                          std::move(edges), v);
}

PairCore core_of_pair(const Morphism& g, const Morphism& h) {
    if (!(g.codomain() == h.codomain())) {
        throw AlphabetMismatch("core_of_pair: morphisms have different codomains");
    }
    for (const auto* f : {&g, &h}) {
        if (auto why = marking_violation(*f)) {
            throw PreconditionError("core_of_pair: not an immersion: " + *why);
        }
    }
    StallingsGraph gamma_g = bouquet(g);
    StallingsGraph gamma_h = bouquet(h);
    ProductGraph prod = product(gamma_g, gamma_h);
    StallingsGraph core = core_at(prod.graph, prod.graph.base());
    PairCore out{std::move(core), std::move(gamma_g), std::move(gamma_h), {}, {}};
    for (const Edge& e : out.core.edges()) {
        out.delta_g[e.id] = prod.edge_pairs[e.id].first;
        out.delta_h[e.id] = prod.edge_pairs[e.id].second;
    }
    return out;
}

Word path_label(const StallingsGraph& g, const std::vector<PathStep>& path) {
    std::vector<Letter> letters;
    for (PathStep s : path) {
        letters.push_back(g.step_label(s));
    }
    return free_reduce(g.labels(), letters);
}

std::vector<std::vector<PathStep>> canonical_petals(const StallingsGraph& g) {
    const VertexId center = g.base();
    std::vector<PathStep> starts;
    for (EdgeId id : g.outgoing(center)) {
        starts.push_back({id, true});
    }
    for (EdgeId id : g.incoming(center)) {
        starts.push_back({id, false});
    }

    std::vector<std::vector<PathStep>> kept;
    for (PathStep start : starts) {
        std::vector<PathStep> path{start};
        VertexId cur = g.endpoint(start);
        while (cur != center) {
            if (g.degree(cur) != 2) {
                throw std::logic_error("graph is not a bouquet at its base");
            }
            const PathStep& prev = path.back();
            std::optional<PathStep> next;
            for (EdgeId id : g.outgoing(cur)) {
                if (id != prev.edge) {
                    next = PathStep{id, true};
                }
            }
            for (EdgeId id : g.incoming(cur)) {
                if (id != prev.edge) {
                    next = PathStep{id, false};
                }
            }
            if (!next) {
                throw std::logic_error("graph is not a bouquet at its base");
            }
            path.push_back(*next);
            cur = g.endpoint(*next);
        }
        // Each petal is walked from both ends; keep the orientation whose
        // first letter ranks lower.
        const Letter first = g.step_label(path.front());
        const Letter reverse_first = g.step_label(path.back()).inverse();
        if (first.rank() < reverse_first.rank()) {
            kept.push_back(std::move(path));
        }
    }
    std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
        const Letter fa = g.step_label(a.front());
        const Letter fb = g.step_label(b.front());
        if (fa != fb) {
            return fa < fb;
        }
        return shortlex_less(path_label(g, a), path_label(g, b));
    });
    return kept;
}

namespace {

/// Reads a closed reduced path at the base of a bouquet as a word over the
/// bouquet's generators.
Word collapse_to_generators(const StallingsGraph& bouquet_graph, const Alphabet& generators,
                            const std::vector<PathStep>& path) {
    const auto& petals = bouquet_graph.petals();
    if (!petals) {
        throw std::logic_error("collapse_to_generators: graph carries no petal structure");
    }
    auto reversed = [](const std::vector<PathStep>& p) {
        std::vector<PathStep> r;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            r.push_back({it->edge, !it->forward});
        }
        return r;
    };
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < path.size()) {
        bool matched = false;
        for (const Petal& petal : *petals) {
            for (std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
                const std::vector<PathStep> traversal =
                    sign > 0 ? petal.path : reversed(petal.path);
                if (traversal.front() != path[i]) {
                    continue;
                }
                if (i + traversal.size() > path.size() ||
                    !std::equal(traversal.begin(), traversal.end(), path.begin() + i)) {
                    throw std::logic_error("projected petal is not a concatenation of "
                                           "bouquet petals");
                }
                letters.push_back({static_cast<std::uint32_t>(petal.generator), sign});
                i += traversal.size();
                matched = true;
                break;
            }
            if (matched) {
                break;
            }
        }
        if (!matched) {
            throw std::logic_error("projected petal leaves the base along no petal");
        }
    }
    return free_reduce(generators, letters);
}

} // namespace

PetalMaps petals_to_morphisms(const PairCore& pair, const Morphism& g, const Morphism& h) {
    const auto petals = canonical_petals(pair.core);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < petals.size(); ++i) {
        names.push_back("p" + std::to_string(i));
    }
    const Alphabet fresh(std::move(names), Mode::group);

    std::vector<Word> g_images;
    std::vector<Word> h_images;
    std::vector<Word> labels;
    for (const auto& petal : petals) {
        std::vector<PathStep> via_g;
        std::vector<PathStep> via_h;
        for (PathStep s : petal) {
            via_g.push_back({pair.delta_g.at(s.edge), s.forward});
            via_h.push_back({pair.delta_h.at(s.edge), s.forward});
        }
        g_images.push_back(collapse_to_generators(pair.gamma_g, g.domain(), via_g));
        h_images.push_back(collapse_to_generators(pair.gamma_h, h.domain(), via_h));
        labels.push_back(path_label(pair.core, petal));
    }
    PetalMaps out{Morphism(fresh, g.domain(), std::move(g_images)),
                  Morphism(fresh, h.domain(), std::move(h_images)), std::move(labels)};
    if (!(compose(g, out.g_prime) == compose(h, out.h_prime))) {
        throw std::logic_error("petal maps do not satisfy g g' = h h'");
    }
    return out;
}

bool membership(const StallingsGraph& g, const Word& w) {
    if (!is_folded_both_ways(g)) {
        throw std::invalid_argument("membership: graph is not folded, traversal is ambiguous");
    }
    if (!(w.alphabet() == g.labels())) {
        throw AlphabetMismatch("membership: word is not over the graph's label alphabet");
    }
    VertexId cur = g.base();
    for (Letter l : w.letters()) {
        auto s = g.step(cur, l);
        if (!s) {
            return false;
        }
        cur = g.endpoint(*s);
    }
    return cur == g.base();
}

std::string export_dot(const StallingsGraph& g) {
    std::map<VertexId, std::size_t> name;
    for (VertexId v : g.vertices()) {
        name.emplace(v, name.size());
    }
    std::ostringstream os;
    os << "digraph stallings {\n";
    for (VertexId v : g.vertices()) {
        os << "  v" << name[v] << " [shape=" << (v == g.base() ? "doublecircle" : "circle")
           << "];\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  v" << name[e.source] << " -> v" << name[e.target] << " [label=\""
           << g.labels().symbol(e.label) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace pcpeq
