#pragma once

#include <string_view>
#include <vector>

#include "isotype/errors.hpp"
#include "isotype/extnat.hpp"
#include "isotype/hahnfield.hpp"
#include "isotype/ordgroups.hpp"
#include "isotype/orders.hpp"

namespace isotype {

// Recursive-descent parsers for the literal grammars. Each function consumes
// the whole input (modulo surrounding whitespace) and throws ParseError with
// the offending position and the expected token otherwise.
//
//   order   ::= "Fin(" nat ")" | "N" | "Z" | "Q" | "lex(" order "," order ")"
//   elem    ::= int | rat | "(" elem "," elem ")"
//   rat     ::= int [ "/" nat ]                    (q > 0, reduced on read)
//   extnat  ::= digits | "inf"
//   group   ::= "{" [ elem ":" rat ("," elem ":" rat)* ] "}"
//   series  ::= ["-"] sterm (("+"|"-") sterm)*
//   sterm   ::= satom ("*" satom)*
//   satom   ::= rat | "x[" elem "]" [ "^" ("{" rat "}" | rat) ]
//   smap    ::= elem "->" elem ("," elem "->" elem)*
//   term    ::= tsum; tsum ::= tprod (("+"|"-") tprod)*;
//   tprod   ::= tunary ("*" tunary)*; tunary ::= "-" tunary | tatom;
//   tatom   ::= "u" digits | int | "(" tsum ")"

OrderExpr parse_order(std::string_view input);
Element parse_element(std::string_view input);
Rational parse_rational(std::string_view input);
ExtNat parse_extnat(std::string_view input);
// Comma-separated ExtNat literals; empty input is the empty list.
std::vector<ExtNat> parse_extnat_list(std::string_view input);
GroupElement parse_group_element(const OrderExpr& index_order, std::string_view input);
Series parse_series(const OrderExpr& index_order, const GroupElement& precision,
                    std::string_view input);
SupportMap parse_support_map(const OrderExpr& from_order, const OrderExpr& to_order,
                             std::string_view input);
RingTerm parse_ring_term(std::string_view input);

}  // namespace isotype
