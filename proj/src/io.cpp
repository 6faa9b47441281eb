#include "rlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "rlat/error.hpp"

namespace rlat {

  namespace {

    std::string type_name(Json const& j) {
      return j.type_name();
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.contains(key)) {
        throw Error(ErrorKind::parse, std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    std::string as_string(Json const& j, std::string const& what) {
      if (!j.is_string()) {
        throw Error(ErrorKind::parse,
                    what + " must be a string, got " + type_name(j));
      }
      return j.get<std::string>();
    }

    std::vector<std::string> element_names(Json const& j) {
      Json const& e = field(j, "elements");
      if (!e.is_array()) {
        throw Error(ErrorKind::parse, "'elements' must be an array");
      }
      std::vector<std::string> names;
      for (auto const& x : e) {
        names.push_back(as_string(x, "element name"));
      }
      auto sorted = names;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::parse, "duplicate element names");
      }
      if (names.size() > SubsetMask::max_size) {
        throw Error(ErrorKind::malformed_tables,
                    "at most 64 elements are supported");
      }
      return names;
    }

    class Names {
     public:
      explicit Names(std::vector<std::string> const& names) {
        for (std::size_t i = 0; i < names.size(); ++i) {
          _index.emplace(names[i], static_cast<Elem>(i));
        }
      }
      Elem operator()(Json const& j, std::string const& what) const {
        std::string const name = as_string(j, what);
        auto              it   = _index.find(name);
        if (it == _index.end()) {
          throw Error(ErrorKind::parse,
                      "unknown element '" + name + "' in " + what);
        }
        return it->second;
      }

     private:
      std::map<std::string, Elem> _index;
    };

    OpTable table_from_json(Json const& j, char const* key,
                            std::vector<std::string> const& names,
                            Names const&                    lookup) {
      Json const& t = field(j, key);
      if (!t.is_object()) {
        throw Error(ErrorKind::parse, std::string("'") + key + "' must be an object");
      }
      std::size_t const n = names.size();
      OpTable           out(n);
      if (t.size() != n) {
        throw Error(ErrorKind::malformed_tables,
                    std::string("table '") + key + "' must have one row per element");
      }
      for (Elem x = 0; x < n; ++x) {
        if (!t.contains(names[x]) || !t.at(names[x]).is_object()
            || t.at(names[x]).size() != n) {
          throw Error(ErrorKind::malformed_tables,
                      std::string("table '") + key + "' row '" + names[x]
                          + "' is missing or incomplete");
        }
        Json const& row = t.at(names[x]);
        for (Elem y = 0; y < n; ++y) {
          if (!row.contains(names[y])) {
            throw Error(ErrorKind::malformed_tables,
                        std::string("table '") + key + "' lacks entry " + names[x]
                            + "," + names[y]);
          }
          out.at(x, y) = lookup(row.at(names[y]),
                                std::string(key) + "[" + names[x] + "]["
                                    + names[y] + "]");
        }
      }
      return out;
    }

    Json table_to_json(OpTable const& t, std::vector<std::string> const& names) {
      Json out = Json::object();
      for (Elem x = 0; x < t.size(); ++x) {
        Json row = Json::object();
        for (Elem y = 0; y < t.size(); ++y) {
          row[names[y]] = names[t(x, y)];
        }
        out[names[x]] = std::move(row);
      }
      return out;
    }

    std::optional<OrderMatrix> explicit_order(Json const&                     j,
                                              std::vector<std::string> const& names,
                                              Names const& lookup) {
      std::size_t const n = names.size();
      if (j.contains("order")) {
        Json const& o = j.at("order");
        if (!o.is_array()) {
          throw Error(ErrorKind::parse, "'order' must be an array of pairs");
        }
        std::vector<std::array<Elem, 2>> pairs;
        for (auto const& p : o) {
          if (!p.is_array() || p.size() != 2) {
            throw Error(ErrorKind::parse, "'order' entries must be [lower, upper]");
          }
          pairs.push_back({lookup(p[0], "order"), lookup(p[1], "order")});
        }
        return order_from_pairs(n, pairs);
      }
      if (j.contains("leq")) {
        Json const& m = j.at("leq");
        if (!m.is_array() || m.size() != n) {
          throw Error(ErrorKind::malformed_tables, "'leq' must be an n x n matrix");
        }
        OrderMatrix out(n, std::vector<bool>(n, false));
        for (std::size_t x = 0; x < n; ++x) {
          if (!m[x].is_array() || m[x].size() != n) {
            throw Error(ErrorKind::malformed_tables,
                        "'leq' must be an n x n matrix");
          }
          for (std::size_t y = 0; y < n; ++y) {
            Json const& v = m[x][y];
            if (v.is_boolean()) {
              out[x][y] = v.get<bool>();
            } else if (v.is_number_integer()
                       && (v.get<int>() == 0 || v.get<int>() == 1)) {
              out[x][y] = v.get<int>() == 1;
            } else {
              throw Error(ErrorKind::parse, "'leq' entries must be 0/1 or booleans");
            }
          }
        }
        return out;
      }
      return std::nullopt;
    }

  }  // namespace

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::parse, "cannot read '" + path + "'");
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorKind::parse, path + ": " + e.what());
    }
  }

  Structure structure_from_json(Json const& j) {
    if (!j.is_object()) {
      throw Error(ErrorKind::parse, "structure file must hold a JSON object");
    }
    Structure s;
    s.name  = j.contains("name") ? as_string(j.at("name"), "'name'") : "unnamed";
    s.names = element_names(j);
    Names const lookup(s.names);
    s.bot = lookup(field(j, "bot"), "'bot'");
    s.top = lookup(field(j, "top"), "'top'");

    auto const order    = explicit_order(j, s.names, lookup);
    bool const has_join = j.contains("join") || j.contains("meet");
    if (has_join) {
      s.join = table_from_json(j, "join", s.names, lookup);
      s.meet = table_from_json(j, "meet", s.names, lookup);
    }
    if (order) {
      LatticeTables const lt = lattice_from_order(*order);
      if (has_join && (lt.join != s.join || lt.meet != s.meet)) {
        throw Error(ErrorKind::malformed_tables,
                    "join/meet tables disagree with the given order");
      }
      s.join = lt.join;
      s.meet = lt.meet;
    } else if (!has_join) {
      throw Error(ErrorKind::malformed_tables,
                  "need 'order', 'leq' or 'join'/'meet'");
    }
    s.times    = table_from_json(j, "times", s.names, lookup);
    s.residuum = table_from_json(j, "residuum", s.names, lookup);
    return s;
  }

  Structure load_structure(std::string const& path) {
    return structure_from_json(read_json_file(path));
  }

  Json structure_to_json(Structure const& s) {
    Json j;
    j["name"]     = s.name;
    j["elements"] = s.names;
    j["bot"]      = s.names[s.bot];
    j["top"]      = s.names[s.top];
    Json order    = Json::array();
    for (auto const& [x, y] : covers(s)) {
      order.push_back(Json::array({s.names[x], s.names[y]}));
    }
    j["order"]    = std::move(order);
    j["times"]    = table_to_json(s.times, s.names);
    j["residuum"] = table_to_json(s.residuum, s.names);
    return j;
  }

  OrderMatrix order_from_json(Json const& j) {
    if (!j.is_object()) {
      throw Error(ErrorKind::parse, "lattice file must hold a JSON object");
    }
    auto const  names = element_names(j);
    Names const lookup(names);
    if (auto o = explicit_order(j, names, lookup)) {
      return *o;
    }
    if (j.contains("join")) {
      OpTable const join = table_from_json(j, "join", names, lookup);
      OrderMatrix   out(names.size(), std::vector<bool>(names.size(), false));
      for (Elem x = 0; x < names.size(); ++x) {
        for (Elem y = 0; y < names.size(); ++y) {
          out[x][y] = join(x, y) == y;
        }
      }
      return out;
    }
    throw Error(ErrorKind::malformed_tables, "need 'order', 'leq' or 'join'");
  }

  OrderMatrix load_order(std::string const& path) {
    return order_from_json(read_json_file(path));
  }

  SubsetMask parse_elements(Structure const& s, std::string_view list) {
    SubsetMask  out(s.size());
    std::size_t start = 0;
    while (start <= list.size()) {
      std::size_t end = list.find(',', start);
      if (end == std::string_view::npos) {
        end = list.size();
      }
      std::string_view token = list.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
      }
      while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
      }
      if (!token.empty()) {
        auto x = s.find(token);
        if (!x) {
          throw Error(ErrorKind::parse,
                      "unknown element '" + std::string(token) + "'");
        }
        out.insert(*x);
      }
      start = end + 1;
    }
    return out;
  }

  Filter parse_filter(Structure const& s, std::string_view list) {
    SubsetMask const m = parse_elements(s, list);
    if (!is_filter(s, m)) {
      throw Error(ErrorKind::not_a_filter, format_set(s, m) + " is not a filter");
    }
    return Filter(m);
  }

  namespace {

    std::string quoted(std::string const& text) {
      std::string out = "\"";
      for (char ch : text) {
        if (ch == '"' || ch == '\\') {
          out += '\\';
        }
        out += ch;
      }
      return out + "\"";
    }

    // Nodes 0..k-1 with labels, covering edges, and a rank per node.
    std::string dot_graph(std::string const&                      name,
                          std::vector<std::string> const&         labels,
                          std::vector<std::array<std::size_t, 2>> edges,
                          std::vector<std::size_t> const&         rank) {
      std::ostringstream out;
      out << "graph " << quoted(name) << " {\n";
      out << "  rankdir=BT;\n";
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
      }
      std::size_t const top_rank =
          rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
      for (std::size_t r = 0; r <= top_rank; ++r) {
        out << "  { rank=same;";
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (rank[i] == r) {
            out << " n" << i << ";";
          }
        }
        out << " }\n";
      }
      std::sort(edges.begin(), edges.end());
      for (auto const& [a, b] : edges) {
        out << "  n" << a << " -- n" << b << ";\n";
      }
      out << "}\n";
      return out.str();
    }

  }  // namespace

  std::string hasse_dot(Structure const& s) {
    std::vector<std::array<std::size_t, 2>> edges;
    for (auto const& [x, y] : covers(s)) {
      edges.push_back({x, y});
    }
    return dot_graph(s.name, s.names, edges, heights(s));
  }

  std::string filter_lattice_dot(Structure const& s) {
    FilterLattice const      lat = all_filters(s);
    std::size_t const        k   = lat.size();
    std::vector<std::string> labels;
    for (auto const& F : lat.filters()) {
      labels.push_back(format_set(s, F.mask()));
    }
    std::vector<std::array<std::size_t, 2>> edges;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j || !lat.leq(i, j)) {
          continue;
        }
        bool cover = true;
        for (std::size_t m = 0; m < k && cover; ++m) {
          cover = m == i || m == j || !(lat.leq(i, m) && lat.leq(m, j));
        }
        if (cover) {
          edges.push_back({i, j});
        }
      }
    }
    // filters come sorted by cardinality, so one pass computes heights
    std::vector<std::size_t> rank(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      for (auto const& [a, b] : edges) {
        if (b == j) {
          rank[j] = std::max(rank[j], rank[a] + 1);
        }
      }
    }
    return dot_graph(s.name + " filters", labels, edges, rank);
  }

  Json census_record_json(CensusRecord const& r) {
    Json j                = structure_to_json(r.structure);
    j["canonical_key"]    = to_hex(r.canonical_key);
    Json stats;
    stats["filters"]         = r.stats.filters;
    stats["primes"]          = r.stats.primes;
    stats["minimal_primes"]  = r.stats.minimal_primes;
    stats["normality_index"] = r.stats.normality_index;
    stats["mtl"]             = r.stats.mtl;
    j["stats"]               = std::move(stats);
    return j;
  }

}  // namespace rlat
