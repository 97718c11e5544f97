#pragma once

#include <string>

#include "godel/formula.hpp"

namespace godel {

/// Concrete syntax for f, reintroducing the ~ / <-> / < sugar.
/// parse(render(f)) is structurally equal to f.
std::string render(const Formula& f);

/// Concrete syntax without sugar: every connective spelled out.
std::string render_raw(const Formula& f);

}  // namespace godel
