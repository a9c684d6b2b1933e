#ifndef WMIN_ALGEBRA_ID_HPP
#define WMIN_ALGEBRA_ID_HPP

#include "wmin/rational.hpp"

#include <stdexcept>
#include <string>

namespace wmin {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExcludedAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Names one catalog entry: a basic Lie (super)algebra together with the
/// choice of even root carrying the minimal grading, where that choice is
/// not forced (osp vs spo; the two F(4) and G(3) conventions).
struct AlgebraId {
  enum class Fam {
    SL,   // sl(m|n), m != n; n = 0 gives sl(m); theta in the sl(m) block
    PSL,  // psl(m|m)
    OSP,  // osp(m|n), theta = highest root of so(m); n = 0 gives so(m)
    SPO,  // spo(n|m), theta = highest root of sp(n); m = 0 gives sp(n)
    D21A, // D(2,1;a)
    F4_SL2, F4_D212, // F(4) with theta in sl(2) resp. so(7)
    G3_SL2, G3_G2,   // G(3) with theta in sl(2) resp. G2
    G2, F4, E6, E7, E8
  };

  Fam fam = Fam::SL;
  int m = 0, n = 0; // as in the family notation above
  Rat a;            // D(2,1;a) only

  std::string str() const;

  /// Throws ParseError naming the offending token.
  static AlgebraId parse(const std::string& spec);

  /// Throws ExcludedAlgebra / InvalidParameter. Note: sl(3|1) is accepted
  /// here (its structure constants and p(k) are well defined) but rejected
  /// by the level-classification engine, whose component machinery needs a
  /// nondegenerate centralizer decomposition.
  void validate() const;

  bool is_lie_algebra() const; // no odd roots
  bool has_matrix_realization() const;

  /// D(2,1;a) parameters related by a -> 1/a and a -> -1-a give isomorphic
  /// algebras; returns the orbit representative that is maximal under the
  /// rational total order. Never applied silently.
  static Rat d21a_canonical(const Rat& a);

  bool operator==(const AlgebraId& o) const
  {
    return fam == o.fam && m == o.m && n == o.n && a == o.a;
  }
};

} // namespace wmin

#endif
