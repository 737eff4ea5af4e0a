#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toda {

// Variable alphabet of the symbolic layer.  Indexed kinds (X, Z, W, Px, Pz,
// G, Gp) carry a 1-based site index; the scalars (U, Lam, Hbar, Y) ignore it.
enum class VarKind : std::uint8_t {
  U = 0,    // spectral parameter u
  Lam,      // eigenvalue lambda of the characteristic polynomial
  Hbar,     // Planck constant (formal)
  Y,        // e^{y} auxiliary variable
  X,        // e^{x_i}
  Z,        // e^{z_i}
  W,        // e^{w_i} (lower-level block of the recursive kernel)
  Px,       // momentum p_{x_i}
  Pz,       // momentum p_{z_i}
  G,        // coupling g_i
  Gp,       // coupling g'_i
};

// Dense 16-bit id: kind in the high byte, index in the low byte.
using VarId = std::uint16_t;

constexpr VarId var(VarKind kind, unsigned index = 0) {
  return static_cast<VarId>((static_cast<unsigned>(kind) << 8) | (index & 0xffu));
}

constexpr VarKind var_kind(VarId id) { return static_cast<VarKind>(id >> 8); }
constexpr unsigned var_index(VarId id) { return id & 0xffu; }

inline VarId U() { return var(VarKind::U); }
inline VarId Lam() { return var(VarKind::Lam); }
inline VarId Hbar() { return var(VarKind::Hbar); }
inline VarId Yv() { return var(VarKind::Y); }
inline VarId Xv(unsigned i) { return var(VarKind::X, i); }
inline VarId Zv(unsigned i) { return var(VarKind::Z, i); }
inline VarId Wv(unsigned i) { return var(VarKind::W, i); }
inline VarId Pxv(unsigned i) { return var(VarKind::Px, i); }
inline VarId Pzv(unsigned i) { return var(VarKind::Pz, i); }
inline VarId Gv(unsigned i) { return var(VarKind::G, i); }
inline VarId Gpv(unsigned i) { return var(VarKind::Gp, i); }

inline std::string var_name(VarId id) {
  const unsigned i = var_index(id);
  switch (var_kind(id)) {
    case VarKind::U: return "U";
    case VarKind::Lam: return "Lam";
    case VarKind::Hbar: return "Hbar";
    case VarKind::Y: return "Y";
    case VarKind::X: return "X" + std::to_string(i);
    case VarKind::Z: return "Z" + std::to_string(i);
    case VarKind::W: return "W" + std::to_string(i);
    case VarKind::Px: return "Px" + std::to_string(i);
    case VarKind::Pz: return "Pz" + std::to_string(i);
    case VarKind::G: return "G" + std::to_string(i);
    case VarKind::Gp: return "Gp" + std::to_string(i);
  }
  throw std::logic_error("var_name: bad VarId");
}

}  // namespace toda
