#ifndef RLAT_IO_HPP_
#define RLAT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rlat/filters.hpp"
#include "rlat/modelgen.hpp"
#include "rlat/structure.hpp"

namespace rlat {

  using Json = nlohmann::ordered_json;

  // Structure file schema (JSON object):
  //   name      string
  //   elements  array of distinct names; position fixes the element index
  //   bot, top  element names
  //   order     array of [lower, upper] name pairs (reflexive-transitive
  //             closure is taken), or
  //   leq       n x n matrix of 0/1 or booleans
  //   join,meet optional tables {"x": {"y": "x v y"}}; required if neither
  //             order nor leq is present, and must agree with them otherwise
  //   times     table {"x": {"y": "x * y"}}
  //   residuum  table {"x": {"y": "x -> y"}}
  // Shape problems throw Error{malformed_tables}; JSON and name problems
  // throw Error{parse}. Axioms are not checked here.
  Structure structure_from_json(Json const& j);
  Structure load_structure(std::string const& path);

  // Writes name, elements, bot, top, order (covering pairs), times,
  // residuum.
  Json structure_to_json(Structure const& s);

  // Order of a lattice-only file (elements plus order, leq or join).
  OrderMatrix order_from_json(Json const& j);
  OrderMatrix load_order(std::string const& path);

  Json read_json_file(std::string const& path);

  // "c,d,1" -> mask; throws Error{parse} naming an unknown element.
  SubsetMask parse_elements(Structure const& s, std::string_view list);
  // Extensional filter; throws Error{not_a_filter}.
  Filter parse_filter(Structure const& s, std::string_view list);

  std::string hasse_dot(Structure const& s);
  std::string filter_lattice_dot(Structure const& s);

  Json census_record_json(CensusRecord const& r);

}  // namespace rlat

#endif  // RLAT_IO_HPP_
