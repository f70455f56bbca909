#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qbundle/comodule.hpp"

namespace qbundle {

/// Value built on first use; safe to share between threads.
template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<std::unique_ptr<T>()> make) : make_(std::move(make)) {}
  const T& get() const {
    std::call_once(flag_, [this] { value_ = make_(); });
    return *value_;
  }

 private:
  std::function<std::unique_ptr<T>()> make_;
  mutable std::once_flag flag_;
  mutable std::unique_ptr<T> value_;
};

/// One completed Algebra per builtin presentation, built on first use.
const Algebra& shared_algebra(const std::string& name);

/// U_q(2)-bundle over the quantum flag manifold: P = SU_q(3), H = C = U_q(2)
/// acting on itself by multiplication, e = 1, D = U_q(2)/J with J the right
/// ideal generated by xi, zeta - s, zeta* - s.
struct FlagExample {
  explicit FlagExample(int slice);
  FlagExample(const FlagExample&) = delete;
  FlagExample& operator=(const FlagExample&) = delete;

  const Algebra& su3;
  const Algebra& u2;
  const Algebra& cp1;
  Morphism embed;  // CP1qs -> Uq2
  Morphism v;      // SUq3 -> Uq2
  Element xi, zeta, zeta_star;
  std::vector<Element> ideal;
  QuotientCoalgebra quotient;
  HopfCoalgebra c;
  QuotientView d;
  Bundle bundle;
};

/// Twistor bundle: P = S_q^7 inside U_q(4) as the fourth row, H = U_q(4),
/// C = SU_q(2) = U_q(4)/M with the induced right action, e = 1, D = U(1).
struct TwistorExample {
  TwistorExample();
  TwistorExample(const TwistorExample&) = delete;
  TwistorExample& operator=(const TwistorExample&) = delete;

  const Algebra& s7;
  const Algebra& u4;
  const Algebra& su2;
  const Algebra& u1;
  const Algebra& s4;
  Morphism embed;     // Sq7 -> Uq4
  Morphism s4_embed;  // Sq4 -> Sq7
  Morphism pi_u1;     // SUq2 -> U1
  Morphism mu;        // Uq4 -> U1
  std::vector<Element> m_ideal;
  /// Class of a . t_ij for a generator t_ij of U_q(4): right multiplication
  /// by the upper block, left multiplication by the lower block, zero off the
  /// blocks, Dqinv acts trivially.
  std::vector<Element> upper, lower;
  HopfCoalgebra c;
  HopfCoalgebra d;
  Bundle bundle;

  Element act(const Element& c, Letter g) const;
  /// pi_SUq2(h) = 1 . h.
  Element pi_su2(const Element& h) const { return bundle.r(h); }
};

const FlagExample& flag_example(int slice = 8);
const TwistorExample& twistor_example();

}  // namespace qbundle
