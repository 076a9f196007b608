#pragma once

#include "pim/manifold.hpp"

#include <map>
#include <string>

namespace pim {

struct ParsedSpec {
    PiManifoldInstance instance;
    std::map<std::string, Rational> params;  // after overrides
};

// Line-oriented grammar, '#' comments:
//   pim 1
//   name = <text>                     (optional)
//   n = <int>                         (dim = 2n+1; must precede indexed lines)
//   param <name> = <rational>
//   bracket[i,j] = <linear-combo>     (combo: +-c*ek terms, c rational or param)
//   phi[i] = <linear-combo>
//   xi = <linear-combo>
//   eta = <d rationals>  |  eta[i] = <rational>
//   g = diag(<d rationals>)  |  g[i,j] = <rational>
// Overrides replace declared parameter defaults; unknown names are rejected.
// The parsed instance must pass validate(); otherwise ValidationError names
// the failing identity.
ParsedSpec parse_spec(const std::string& text,
                      const std::map<std::string, Rational>& overrides = {});

// Fully numeric spec text; parse_spec(emit_spec(m)).instance == m.
std::string emit_spec(const PiManifoldInstance& instance);

}  // namespace pim
