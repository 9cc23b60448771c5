#pragma once

// Text forms of every value the toolkit exchanges.
//
//   spec      fin:<k> | omega | omega+(<spec>)
//   element   w.<n> | y.<element>      (a bare <n> is read as w.<n>)
//   term      <element> at height 0, otherwise [<term>,...] ([] when empty)
//   node      <n>,<n>,...              (a trailing comma is accepted)
//   pair      <s>,|<t>                 (a triangle pair s ◁ t)
//   product   (<c0>,...,<ck-1>;<tail>) (no coordinates: (;<tail>))
//   qorder    <spec> | term(<n>,<spec>) | prod(<k>,<qorder>) | seq(<qorder>)
//             | fqo(<size>) | fqo(<size>;<a>-<b>,...)   (a <= b, closed
//             reflexively and transitively)
//   table     one "<node> -> <value>" line per node, lexicographic order
//   sequence  header "spec=<spec> height=<n>", then one term per line

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wqo/barrier.hpp"
#include "wqo/base_order.hpp"
#include "wqo/cnf.hpp"
#include "wqo/higman.hpp"

namespace wqo {

struct LevelTable;

std::string format_spec(const OrderSpec& spec);
OrderSpec parse_spec(std::string_view text);

std::string format_elem(BaseElem e);
/// Parses and validates against `spec`.
BaseElem parse_elem(const OrderSpec& spec, std::string_view text);

std::string format_term(const Term& t);
/// Parses a term of the given height. Leaves and child order are not
/// validated; see parse_valid_term.
Term parse_term(unsigned height, std::string_view text);
/// parse_term followed by require_valid_term.
Term parse_valid_term(const OrderSpec& spec, unsigned height, std::string_view text);

std::string format_node(const Node& n);
Node parse_node(std::string_view text);
std::string format_pair(const Node& s, const Node& t);
std::pair<Node, Node> parse_pair(std::string_view text);

std::string format_qo(const QuasiOrder& q);
QuasiOrder parse_qo(std::string_view text);

std::string format_qvalue(const QuasiOrder& q, const QValue& v);
/// Parses and validates an element of `q`.
QValue parse_qvalue(const QuasiOrder& q, std::string_view text);

std::string format_level_value(const ProductElem<Term>& v);

/// All "<node> -> <value>" lines of a level table.
std::string format_level_table(const LevelTable& table);
/// Reads lines produced by format_level_table back into a table over
/// `window`, for level `level` with terms of height `term_height`.
LevelTable parse_level_table(const OrderSpec& spec, std::size_t level, unsigned term_height,
                             Natural window, std::string_view text);

struct SequenceFile {
  OrderSpec spec;
  unsigned height = 0;
  std::vector<Term> terms;
};

/// Reads the sequence-file format. ParseError positions are 1-based lines
/// and columns of the file.
SequenceFile parse_sequence_file(std::string_view text);
std::string format_sequence_file(const OrderSpec& spec, unsigned height,
                                 std::span<const Term> terms);

}  // namespace wqo
