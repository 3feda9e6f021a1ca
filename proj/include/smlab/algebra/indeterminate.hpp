#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace smlab::algebra {

// The registered indeterminate set. The declaration order is the variable
// order used by the graded-lex monomial order (Alpha is the largest).
enum class Var : std::uint8_t {
  Alpha,  // alpha
  C,      // the constant c (K or kappa2, depending on the theorem)
  K1,     // kappa1
  U1,     // e1(kappa1)
  U2,     // e2(kappa1)
  W,      // <Phi, a>
  G,      // gamma = <a, e1>
  M,      // mu = <a, e2>
  H0,     // constant mean curvature
  A1,     // <e1, a>
  A2,     // <e2, a>
  NA,     // <N, a>
  D11,    // e11(kappa1)
  D12,    // e12(kappa1) = e1(e2(kappa1))
  D22,    // e22(kappa1)
};

inline constexpr std::size_t kNumVars = 15;

inline constexpr std::array<Var, kNumVars> kAllVars = {
    Var::Alpha, Var::C,  Var::K1, Var::U1, Var::U2,  Var::W,   Var::G,  Var::M,
    Var::H0,    Var::A1, Var::A2, Var::NA, Var::D11, Var::D12, Var::D22};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

// Names used by the text syntax.
constexpr std::string_view name(Var v) {
  constexpr std::array<std::string_view, kNumVars> names = {
      "alpha", "c",  "k1", "u1", "u2",  "w",   "g",  "mu",
      "H",     "a1", "a2", "na", "d11", "d12", "d22"};
  return names[index(v)];
}

std::optional<Var> parse_var(std::string_view text);

}  // namespace smlab::algebra
