#pragma once

#include "bno/contraction.hpp"
#include "bno/word.hpp"

#include <string>

namespace bno {

// Linear representation of a contraction: vertices on a horizontal line in
// written order (annihilators white, creators black), labeled with the
// right-to-left indices n..1, one arc per edge above the line with height
// proportional to its distance. Output is standalone and deterministic.
std::string emit_svg(const Word& w, const Contraction& c);

std::string emit_ascii(const Word& w, const Contraction& c);

} // namespace bno
