#include "cws/graph.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cws/error.hpp"

namespace cws {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// std::from_chars for double is unavailable on older libstdc++; strtod needs a
// terminated buffer.
bool parse_probability(std::string_view s, double& out) {
  const std::string buf(trim(s));
  if (buf.empty()) return false;
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
  if (n < 1 || n > kMaxBits) {
    throw_invalid("vertex count must be in 1.." + std::to_string(kMaxBits) + ", got " +
                  std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [i, j] : edges) g.add_edge(i, j);
  return g;
}

void Graph::check_vertex(int k) const {
  if (k < 1 || k > n_) {
    throw_invalid("vertex " + std::to_string(k) + " out of range 1.." + std::to_string(n_));
  }
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw_invalid("self-loop on vertex " + std::to_string(i));
  rows_[static_cast<std::size_t>(i - 1)] |= Word{1} << (j - 1);
  rows_[static_cast<std::size_t>(j - 1)] |= Word{1} << (i - 1);
}

bool Graph::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U;
}

int Graph::degree(int k) const {
  check_vertex(k);
  return std::popcount(rows_[static_cast<std::size_t>(k - 1)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if ((rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1U) out.emplace_back(i, j);
    }
  }
  return out;
}

BitString Graph::neighbor_mask(int k) const {
  check_vertex(k);
  return BitString(n_, rows_[static_cast<std::size_t>(k - 1)]);
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  os << "n=" << n_ << '\n';
  for (auto [i, j] : edges()) os << i << ' ' << j << '\n';
  return os.str();
}

Graph make_cycle(int n) {
  if (n < 3) throw_invalid("cycle graph needs at least 3 vertices, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto cut = text.find_first_of("\n;");
    std::string_view record = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++line_no;
    if (const auto hash = record.find('#'); hash != std::string_view::npos) {
      record = record.substr(0, hash);
    }
    record = trim(record);
    if (record.empty()) continue;

    const std::string where = "edge list record " + std::to_string(line_no);
    if (n < 0) {
      if (record.substr(0, 2) != "n=" || !parse_number(record.substr(2), n)) {
        parse_error(where + ": expected 'n=<count>', got '" + std::string(record) + "'");
      }
      if (n < 1 || n > kMaxBits) {
        throw_invalid(where + ": vertex count " + std::to_string(n) + " out of range");
      }
      continue;
    }
    const auto sep = record.find_first_of(" \t");
    int i = 0;
    int j = 0;
    if (sep == std::string_view::npos || !parse_number(record.substr(0, sep), i) ||
        !parse_number(record.substr(sep + 1), j)) {
      parse_error(where + ": expected '<i> <j>', got '" + std::string(record) + "'");
    }
    if (i == j) throw_invalid(where + ": self-loop on vertex " + std::to_string(i));
    if (i < 1 || j < 1 || i > n || j > n) {
      throw_invalid(where + ": vertex index out of range 1.." + std::to_string(n));
    }
    edges.emplace_back(i, j);
  }
  if (n < 0) parse_error("edge list is missing the 'n=<count>' header");
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  if (!(edge_probability > 0.0 && edge_probability < 1.0)) {
    throw_invalid("edge probability must lie strictly between 0 and 1");
  }
  Graph g(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // 53 raw bits keep the draw identical across standard libraries.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_probability) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph graph_from_spec(std::string_view spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    parse_error("graph spec must be cycle:<n>, random:<n>,<p> or edges:<path>");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "cycle") {
    int n = 0;
    if (!parse_number(arg, n)) parse_error("bad cycle size '" + std::string(arg) + "'");
    return make_cycle(n);
  }
  if (kind == "random") {
    const auto comma = arg.find(',');
    int n = 0;
    double p = 0;
    if (comma == std::string_view::npos || !parse_number(arg.substr(0, comma), n) ||
        !parse_probability(arg.substr(comma + 1), p)) {
      parse_error("random graph spec must be random:<n>,<p>");
    }
    std::mt19937_64 rng(seed);
    return random_graph(n, p, rng);
  }
  if (kind == "edges") {
    std::ifstream in{std::string(arg)};
    if (!in) parse_error("cannot open edge list '" + std::string(arg) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
  }
  parse_error("unknown graph kind '" + std::string(kind) + "'");
}

char pauli_letter(PauliKind kind) {
  switch (kind) {
    case PauliKind::X: return 'X';
    case PauliKind::Y: return 'Y';
    case PauliKind::Z: return 'Z';
  }
  return '?';
}

std::string PauliLabel::to_string() const {
  return std::string(1, pauli_letter(kind)) + "_" + std::to_string(qubit);
}

ErrorModel::ErrorModel(const Graph& g)
    : n_(g.size()), lookup_(std::size_t{1} << g.size(), -1) {
  for (int k = 1; k <= n_; ++k) {
    if (g.degree(k) == 0) {
      throw Error(ErrorCode::IsolatedVertex,
                  "vertex " + std::to_string(k) + " is isolated; error model needs degree >= 1");
    }
  }
  entries_.reserve(static_cast<std::size_t>(3 * n_));
  for (int k = 1; k <= n_; ++k) {
    const BitString z = BitString::unit(n_, k);
    const BitString x = g.neighbor_mask(k);
    entries_.push_back({{PauliKind::Z, k}, z});
    entries_.push_back({{PauliKind::X, k}, x});
    entries_.push_back({{PauliKind::Y, k}, x ^ z});
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Word w = entries_[i].string.word();
    if (lookup_[w] < 0) {
      lookup_[w] = static_cast<std::int16_t>(i);
      distinct_.push_back(w);
    }
  }
}

}  // namespace cws
