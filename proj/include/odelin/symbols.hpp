#ifndef ODELIN_SYMBOLS_HPP
#define ODELIN_SYMBOLS_HPP

#include <cstdint>
#include <string>

#include "odelin/error.hpp"

namespace odelin {

// Families of unknown (x,y)-functions occurring in the engine.
enum class FuncKind : unsigned {
  xi = 0,       // symmetry generator component xi(x,y)
  eta = 1,      // symmetry generator component eta(x,y)
  phi = 2,      // point transformation u = phi(x,y)
  psi = 3,      // point transformation t = psi(x,y)
  lf_coeff = 4, // Laguerre-Forsyth coefficient a_k, index = k
  param = 5,    // user parameter (a function with vanishing derivatives)
  user_func = 6 // user-declared undetermined function of (x,y)
};

struct FunctionId {
  FuncKind kind;
  int index; // a_k subscript, or name-table id for param/user_func; 0 otherwise

  friend bool operator==(const FunctionId&, const FunctionId&) = default;
  friend auto operator<=>(const FunctionId&, const FunctionId&) = default;
};

// Process-wide interner for parameter / user-function names.
namespace names {
int intern(const std::string& name);
const std::string& lookup(int id);
} // namespace names

std::string display_name(const FunctionId& f);

// One ring variable: the independent variable x, a jet variable y^(k)
// (k = 0 is y itself), or a partial derivative d_x^i d_y^j f of an unknown
// (x,y)-function f.  Packed into a single integer so that comparison and
// storage are cheap and deterministic.
class Variable {
public:
  Variable() : code_(0) {}

  static Variable x() { return Variable(uint64_t(1) << 60); }
  static Variable jet(int k) {
    check_range(k);
    return Variable((uint64_t(2) << 60) | (uint64_t(k) << 21));
  }
  static Variable func(FunctionId f, int dx, int dy) {
    check_range(dx);
    check_range(dy);
    return Variable((uint64_t(3) << 60) | (uint64_t(static_cast<unsigned>(f.kind)) << 56) |
                    (uint64_t(f.index) << 42) | (uint64_t(dx) << 21) | uint64_t(dy));
  }

  bool valid() const { return code_ != 0; }
  bool is_x() const { return cls() == 1; }
  bool is_jet() const { return cls() == 2; }
  bool is_func() const { return cls() == 3; }

  int jet_order() const { return int((code_ >> 21) & mask21); }
  FunctionId function() const {
    return FunctionId{static_cast<FuncKind>((code_ >> 56) & 0xF), int((code_ >> 42) & mask14)};
  }
  int dx() const { return int((code_ >> 21) & mask21); }
  int dy() const { return int(code_ & mask21); }

  // Total differentiation order: k for y^(k), i+j for f_{(i,j)}, 0 for x.
  int order() const {
    if (is_jet()) return jet_order();
    if (is_func()) return dx() + dy();
    return 0;
  }

  uint64_t code() const { return code_; }

  friend bool operator==(const Variable& a, const Variable& b) { return a.code_ == b.code_; }
  friend bool operator!=(const Variable& a, const Variable& b) { return a.code_ != b.code_; }
  // Intrinsic storage order (x < jets < functions); not the ranking.
  friend bool operator<(const Variable& a, const Variable& b) { return a.code_ < b.code_; }

  std::string to_string() const;

private:
  explicit Variable(uint64_t code) : code_(code) {}
  unsigned cls() const { return unsigned(code_ >> 60); }
  static void check_range(int v) {
    if (v < 0 || v >= (1 << 14)) fail(errc::internal, "derivative index out of range");
  }

  static constexpr uint64_t mask21 = (uint64_t(1) << 21) - 1;
  static constexpr uint64_t mask14 = (uint64_t(1) << 14) - 1;

  uint64_t code_;
};

inline Variable var_x() { return Variable::x(); }
inline Variable var_y() { return Variable::jet(0); }

} // namespace odelin

#endif
