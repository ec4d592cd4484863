#ifndef EBC_TORSION_HPP
#define EBC_TORSION_HPP

#include <array>
#include <numeric>
#include <ostream>
#include <string>

#include "ebc/rational.hpp"

namespace ebc {

/// Torsion point of the elliptic curve E, written additively with origin p0.
/// Coordinates live in (Q/Z)^2 and are kept reduced into [0,1). The group is
/// componentwise addition mod 1; this is all of E that the classification
/// ever probes, since every condition in sight is a root-integrality check.
class TorsionPoint {
public:
  TorsionPoint() : u_(0), v_(0) {}
  TorsionPoint(Rat u, Rat v) : u_(u.mod1()), v_(v.mod1()) {}

  const Rat& u() const { return u_; }
  const Rat& v() const { return v_; }

  bool is_origin() const { return u_.is_zero() && v_.is_zero(); }

  friend TorsionPoint operator+(const TorsionPoint& p, const TorsionPoint& q) {
    return TorsionPoint(p.u_ + q.u_, p.v_ + q.v_);
  }
  friend TorsionPoint operator-(const TorsionPoint& p, const TorsionPoint& q) {
    return TorsionPoint(p.u_ - q.u_, p.v_ - q.v_);
  }
  TorsionPoint operator-() const { return TorsionPoint(-u_, -v_); }

  /// k-fold multiple under the group law.
  TorsionPoint times(long long k) const {
    return TorsionPoint(u_ * Rat(k), v_ * Rat(k));
  }

  /// Smallest k >= 1 with k*p = 0; equals lcm of the coordinate denominators.
  long long order() const { return std::lcm(u_.den(), v_.den()); }

  bool is_two_torsion() const { return order() <= 2; }

  friend bool operator==(const TorsionPoint& p, const TorsionPoint& q) {
    return p.u_ == q.u_ && p.v_ == q.v_;
  }
  friend bool operator!=(const TorsionPoint& p, const TorsionPoint& q) {
    return !(p == q);
  }
  friend bool operator<(const TorsionPoint& p, const TorsionPoint& q) {
    if (p.u_ != q.u_) return p.u_ < q.u_;
    return p.v_ < q.v_;
  }

  /// "u,v" literal as used by the DSL and CLI.
  std::string str() const { return u_.str() + "," + v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const TorsionPoint& p) {
    return os << p.str();
  }

private:
  Rat u_, v_;
};

/// The three nontrivial 2-torsion points eta_1, eta_2, eta_3 (the origin is
/// the fourth point of order dividing 2 and is kept separate).
inline std::array<TorsionPoint, 3> two_torsion_set() {
  return {TorsionPoint(Rat(1, 2), Rat(0)), TorsionPoint(Rat(0), Rat(1, 2)),
          TorsionPoint(Rat(1, 2), Rat(1, 2))};
}

} // namespace ebc

#endif
