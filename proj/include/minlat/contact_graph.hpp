#ifndef MINLAT_CONTACT_GRAPH_HPP
#define MINLAT_CONTACT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minlat {

using NodeId = int;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Static contact graph: an undirected edge between every pair of nodes
/// that ever meet, weighted by the exponential meeting rate lambda_ij
/// (1/seconds). One node is the designated destination.
class ContactGraph {
public:
    struct Neighbor {
        NodeId id;
        double rate;
    };

    ContactGraph() = default;

    ContactGraph(int n, NodeId destination) : adj_(n), destination_(destination) {
        if (n <= 0)
            throw std::invalid_argument("ContactGraph: node count must be positive");
        if (destination < 0 || destination >= n)
            throw std::invalid_argument("ContactGraph: destination out of range");
    }

    int size() const { return static_cast<int>(adj_.size()); }
    NodeId destination() const { return destination_; }

    void add_edge(NodeId a, NodeId b, double rate) {
        check_node(a);
        check_node(b);
        if (a == b)
            throw std::invalid_argument("ContactGraph: self-edge");
        if (rate <= 0.0)
            throw std::invalid_argument("ContactGraph: rate must be positive");
        if (rate_between(a, b) > 0.0)
            throw std::invalid_argument("ContactGraph: duplicate edge");
        insert_sorted(adj_[a], {b, rate});
        insert_sorted(adj_[b], {a, rate});
        ++edge_count_;
    }

    /// Neighbors of i, sorted by node id.
    const std::vector<Neighbor>& neighbors(NodeId i) const {
        check_node(i);
        return adj_[i];
    }

    int degree(NodeId i) const { return static_cast<int>(neighbors(i).size()); }
    int edge_count() const { return edge_count_; }

    /// Rate of edge (a, b), or 0 when the nodes never meet.
    double rate_between(NodeId a, NodeId b) const {
        check_node(a);
        check_node(b);
        const auto& na = adj_[a];
        auto it = std::lower_bound(na.begin(), na.end(), b,
                                   [](const Neighbor& x, NodeId id) { return x.id < id; });
        if (it != na.end() && it->id == b)
            return it->rate;
        return 0.0;
    }

    /// Edges as (a, b, rate) with a < b, in lexicographic order.
    std::vector<std::tuple<NodeId, NodeId, double>> edges() const {
        std::vector<std::tuple<NodeId, NodeId, double>> out;
        out.reserve(edge_count_);
        for (NodeId a = 0; a < size(); ++a)
            for (const auto& nb : adj_[a])
                if (a < nb.id)
                    out.emplace_back(a, nb.id, nb.rate);
        return out;
    }

    bool is_connected() const {
        if (size() == 0)
            return false;
        std::vector<char> seen(size(), 0);
        std::vector<NodeId> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (const auto& nb : adj_[u])
                if (!seen[nb.id]) {
                    seen[nb.id] = 1;
                    ++visited;
                    stack.push_back(nb.id);
                }
        }
        return visited == size();
    }

    double mean_rate() const {
        if (edge_count_ == 0)
            return 0.0;
        double sum = 0.0;
        for (const auto& [a, b, r] : edges())
            sum += r;
        return sum / edge_count_;
    }

private:
    void check_node(NodeId i) const {
        if (i < 0 || i >= size())
            throw std::out_of_range("ContactGraph: node id out of range");
    }

    static void insert_sorted(std::vector<Neighbor>& list, Neighbor nb) {
        auto it = std::lower_bound(list.begin(), list.end(), nb.id,
                                   [](const Neighbor& x, NodeId id) { return x.id < id; });
        list.insert(it, nb);
    }

    std::vector<std::vector<Neighbor>> adj_;
    NodeId destination_ = 0;
    int edge_count_ = 0;
};

/// Adjacency-list text format: header `nodes N dest D`, then one
/// `i j lambda` line per edge.
inline void write_graph(std::ostream& os, const ContactGraph& g) {
    os << "nodes " << g.size() << " dest " << g.destination() << "\n";
    os.precision(17);
    for (const auto& [a, b, r] : g.edges())
        os << a << " " << b << " " << r << "\n";
}

inline ContactGraph read_graph(std::istream& is) {
    std::string word;
    int n = 0;
    NodeId dest = 0;
    if (!(is >> word) || word != "nodes" || !(is >> n) || !(is >> word) || word != "dest" ||
        !(is >> dest))
        throw std::runtime_error("graph file: bad header, expected `nodes N dest D`");
    ContactGraph g(n, dest);
    NodeId a, b;
    double rate;
    while (is >> a >> b >> rate)
        g.add_edge(a, b, rate);
    if (!is.eof() && is.fail())
        throw std::runtime_error("graph file: malformed edge line");
    return g;
}

} // namespace minlat

#endif
