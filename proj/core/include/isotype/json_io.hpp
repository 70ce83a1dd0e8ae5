#pragma once

#include <string>

#include "isotype/efgame.hpp"
#include "isotype/hahnfield.hpp"
#include "isotype/isotypy.hpp"

namespace isotype {

// Canonical compact JSON documents. Field order and iteration orders are
// fixed, so equal inputs serialize byte for byte identically. Element, order
// and series values appear as their literal strings.

std::string transcript_to_json(const Transcript& transcript);
std::string isotypy_report_to_json(const IsotypyReport& report);
std::string witness_to_json(const NonIsomorphismWitness& witness);
std::string pas_report_to_json(const PasReport& report);

}  // namespace isotype
