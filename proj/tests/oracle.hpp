// Brute-force reference graphs built straight from the edge-set definitions,
// independent of the library's neighbor/partner/projection code paths.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct Graph {
    std::vector<std::string> labels;                 // sorted
    std::map<std::string, int> index;
    std::vector<std::set<int>> adj;

    void add_vertex(const std::string& v) {
        if (!index.count(v)) {
            index[v] = 0;  // fixed up in finalize
            labels.push_back(v);
        }
    }
    void finalize_vertices() {
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
        adj.assign(labels.size(), {});
    }
    void add_edge(const std::string& u, const std::string& v) {
        adj[index.at(u)].insert(index.at(v));
        adj[index.at(v)].insert(index.at(u));
    }
    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& s : adj) twice += s.size();
        return twice / 2;
    }
    std::vector<int> bfs(const std::string& source) const {
        std::vector<int> dist(adj.size(), -1);
        std::queue<int> q;
        q.push(index.at(source));
        dist[index.at(source)] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
        }
        return dist;
    }
    int distance(const std::string& s, const std::string& t) const {
        return bfs(s)[index.at(t)];
    }
};

inline std::vector<std::string> all_words(int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : {'0', '1', '2'}) next.push_back(w + c);
        out = next;
    }
    return out;
}

// E(S^n) = { {s.i j^{d-1}, s.j i^{d-1}} : s in T^{n-d}, {i,j} in pairs, d in [n] }
inline Graph sierpinski(int n) {
    Graph g;
    for (const auto& w : all_words(n)) g.add_vertex(w);
    g.finalize_vertices();
    for (int d = 1; d <= n; ++d)
        for (const auto& prefix : all_words(n - d))
            for (char i : {'0', '1', '2'})
                for (char j : {'0', '1', '2'}) {
                    if (i >= j) continue;
                    std::string a = prefix + i + std::string(d - 1, j);
                    std::string b = prefix + j + std::string(d - 1, i);
                    g.add_edge(a, b);
                }
    return g;
}

// The triangle graph by literal contraction: merge the endpoints of every
// d > 1 edge of S^{n+1} (union-find), keep the d = 1 edges. Each contracted
// class is named by its lexicographically smallest S^{n+1} label.
class Contraction {
public:
    explicit Contraction(int n) : n_(n) {
        Graph s = sierpinski(n + 1);
        std::vector<int> parent(s.labels.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        // merge non-clique pairs (d > 1 patterns)
        for (int d = 2; d <= n + 1; ++d)
            for (const auto& prefix : all_words(n + 1 - d))
                for (char i : {'0', '1', '2'})
                    for (char j : {'0', '1', '2'}) {
                        if (i >= j) continue;
                        int a = s.index.at(prefix + i + std::string(d - 1, j));
                        int b = s.index.at(prefix + j + std::string(d - 1, i));
                        parent[find(a)] = find(b);
                    }
        // class representative = smallest member label
        std::map<int, std::string> rep;
        for (std::size_t v = 0; v < s.labels.size(); ++v) {
            int r = find(static_cast<int>(v));
            auto it = rep.find(r);
            if (it == rep.end() || s.labels[v] < it->second) rep[r] = s.labels[v];
        }
        for (std::size_t v = 0; v < s.labels.size(); ++v)
            class_of_[s.labels[v]] = rep.at(find(static_cast<int>(v)));
        for (const auto& [root, name] : rep) graph_.add_vertex(name);
        graph_.finalize_vertices();
        // d = 1 edges survive the contraction
        for (const auto& prefix : all_words(n))
            for (char i : {'0', '1', '2'})
                for (char j : {'0', '1', '2'}) {
                    if (i >= j) continue;
                    graph_.add_edge(class_of_.at(prefix + i), class_of_.at(prefix + j));
                }
    }

    const Graph& graph() const { return graph_; }
    /// Contracted-class name of an S^{n+1} vertex.
    const std::string& class_of(const std::string& label) const { return class_of_.at(label); }

private:
    int n_;
    Graph graph_;
    std::map<std::string, std::string> class_of_;
};

}  // namespace oracle
