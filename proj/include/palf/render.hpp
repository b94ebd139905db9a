#pragma once

#include <string>

#include "palf/document.hpp"

namespace palf {

// SVG of the fiber with the vanishing cycles of one factorization. Each cycle
// is drawn as its convex base curve; a non-empty conjugator is listed in a
// text badge instead of being realized geometrically. Output is a pure
// function of the document. Throws palf::Error for an unknown name.
std::string render_svg(const PalfDocument& doc, const std::string& palf_name);

}  // namespace palf
