#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace madlec {

struct ParseError : std::runtime_error {
    enum class Kind {
        self_loop,
        bad_token,
        vertex_out_of_range,
        bad_header,
        truncated,
        trailing_garbage,
        malformed,
    };
    Kind kind;
    ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// all queries are const, so shared use across threads is safe.  Isolated
// vertices are representable on purpose: average degree is vertex-count
// sensitive, so dropping them would change results.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop rejected");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        adj_.assign(static_cast<size_t>(n_), {});
        for (const auto& [u, v] : edges_) {
            adj_[static_cast<size_t>(u)].push_back(v);
            adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& nbrs = adj_[static_cast<size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Vertex counts per degree class: counts[j] = |{v : deg(v) = j}|,
/// j in [0, delta].
struct DegreeProfile {
    int delta = 0;
    std::vector<long long> counts;  // size delta + 1

    long long at(int j) const {
        return (j >= 0 && j <= delta) ? counts[static_cast<size_t>(j)] : 0;
    }
    long long total() const {
        long long t = 0;
        for (long long c : counts) t += c;
        return t;
    }
};

inline DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.delta = g.max_degree();
    p.counts.assign(static_cast<size_t>(p.delta) + 1, 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        ++p.counts[static_cast<size_t>(g.degree(v))];
    return p;
}

// ---------------------------------------------------------------------------
// Edge-list text format: lines of "u v", blank lines and '#' comments ignored,
// optional first data line "n <count>" pins the vertex count so isolated
// vertices survive a round trip through text.

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    std::vector<std::pair<long, long>> raw;
    long declared_n = -1;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok_u, tok_v, extra;
        if (!(ls >> tok_u)) continue;  // blank
        if (!(ls >> tok_v) || (ls >> extra))
            throw ParseError(ParseError::Kind::bad_token, "expected exactly two tokens per line: '" + line + "'");
        auto parse_int = [](const std::string& tok) -> long {
            size_t pos = 0;
            long value = 0;
            try {
                value = std::stol(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(ParseError::Kind::bad_token, "non-integer token '" + tok + "'");
            }
            if (pos != tok.size())
                throw ParseError(ParseError::Kind::bad_token, "non-integer token '" + tok + "'");
            if (value < 0)
                throw ParseError(ParseError::Kind::bad_token, "negative vertex index '" + tok + "'");
            return value;
        };
        if (first_data_line && tok_u == "n") {
            declared_n = parse_int(tok_v);
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        long u = parse_int(tok_u);
        long v = parse_int(tok_v);
        if (u == v) throw ParseError(ParseError::Kind::self_loop, "self-loop '" + line + "'");
        raw.emplace_back(u, v);
    }
    long max_index = -1;
    for (const auto& [u, v] : raw) max_index = std::max({max_index, u, v});
    long n = declared_n >= 0 ? declared_n : max_index + 1;
    if (declared_n >= 0 && max_index >= declared_n)
        throw ParseError(ParseError::Kind::vertex_out_of_range,
                         "vertex index " + std::to_string(max_index) + " >= declared n " + std::to_string(declared_n));
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
    return Graph(static_cast<int>(n), std::move(edges));
}

// ---------------------------------------------------------------------------
// graph6: printable encoding of the upper adjacency triangle in column order,
// 6 bits per byte, each byte offset by 63.  Decoding is bit-exact: wrong
// header, short body, trailing bytes and nonzero padding are all rejected.

namespace detail {

inline std::string strip_graph6_frame(const std::string& text) {
    std::string s = text;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

inline long long graph6_body_bytes(long long n) {
    const long long bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace detail

inline Graph parse_graph6(const std::string& text) {
    const std::string s = detail::strip_graph6_frame(text);
    if (s.empty()) throw ParseError(ParseError::Kind::truncated, "empty graph6 input");
    for (char ch : s) {
        const unsigned char b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126)
            throw ParseError(ParseError::Kind::malformed,
                             "byte " + std::to_string(b) + " outside graph6 range [63,126]");
    }
    size_t pos = 0;
    long long n = 0;
    if (s[pos] != 126) {
        n = s[pos] - 63;
        ++pos;
    } else {
        ++pos;
        if (pos < s.size() && s[pos] == 126)
            throw ParseError(ParseError::Kind::bad_header, "graph6 long-size header not supported");
        if (s.size() < pos + 3)
            throw ParseError(ParseError::Kind::truncated, "graph6 size header truncated");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | (s[pos + static_cast<size_t>(i)] - 63);
        pos += 3;
        if (n < 63)
            throw ParseError(ParseError::Kind::bad_header, "graph6 extended header used for small n");
    }
    const long long body = detail::graph6_body_bytes(n);
    const long long have = static_cast<long long>(s.size() - pos);
    if (have < body) throw ParseError(ParseError::Kind::truncated, "graph6 body truncated");
    if (have > body) throw ParseError(ParseError::Kind::trailing_garbage, "trailing bytes after graph6 body");

    std::vector<Edge> edges;
    long long bit = 0;
    const long long nbits = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const size_t byte_idx = pos + static_cast<size_t>(bit / 6);
            const int shift = 5 - static_cast<int>(bit % 6);
            if ((s[byte_idx] - 63) >> shift & 1) edges.push_back({i, j});
        }
    }
    if (nbits % 6 != 0 && body > 0) {
        const int pad = static_cast<int>(6 - nbits % 6);
        const int last = s.back() - 63;
        if (last & ((1 << pad) - 1))
            throw ParseError(ParseError::Kind::malformed, "nonzero padding bits in graph6 body");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string encode_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph too large for supported graph6 sizes");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    }
    const long long nbits = n * (n - 1) / 2;
    std::vector<char> bits(static_cast<size_t>(nbits), 0);
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) bits[static_cast<size_t>(bit)] = 1;
    for (long long start = 0; start < nbits; start += 6) {
        int value = 0;
        for (int k = 0; k < 6; ++k) {
            value <<= 1;
            if (start + k < nbits) value |= bits[static_cast<size_t>(start + k)];
        }
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named generators for the test corpus.

inline Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back(make_edge(i, (i + 1) % k));
    return Graph(k, std::move(edges));
}

inline Graph make_complete(int k) {
    if (k < 3) throw std::invalid_argument("complete graph needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
    return Graph(k, std::move(edges));
}

/// Star with k leaves: vertex 0 is the center, n = k + 1.
inline Graph make_star(int k) {
    if (k < 1) throw std::invalid_argument("star needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.push_back({0, i});
    return Graph(k + 1, std::move(edges));
}

/// Path on k vertices (k - 1 edges).
inline Graph make_path(int k) {
    if (k < 1) throw std::invalid_argument("path needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return Graph(k, std::move(edges));
}

inline Graph make_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
        edges.push_back({i, i + 5});                         // spokes
    }
    return Graph(10, std::move(edges));
}

}  // namespace madlec
