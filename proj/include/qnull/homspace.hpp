#ifndef QNULL_HOMSPACE_HPP
#define QNULL_HOMSPACE_HPP

#include <functional>
#include <string>
#include <vector>

#include "qnull/complex_matrix.hpp"
#include "qnull/spaces.hpp"

namespace qnull {

/// Parameter triple (x, t1, t2) naming a homomorphism C(T) -> M2(C):
/// a |-> a(t1) (I2 + h(x))/2 + a(t2) (I2 - h(x))/2.
///
/// (x, t1, t2) and (-x, t2, t1) name the same homomorphism, and every
/// triple with t1 = t2 names evaluation at that point regardless of x.
/// Equality is therefore decided through eval_metric, never by comparing
/// raw fields.
struct HomParam {
    SpacePoint x;  // on S2
    SpacePoint t1; // in T
    SpacePoint t2; // in T

    Space space() const { return t1.space; }
};

/// A named closed-form function on a model space, bounded by 1 in
/// absolute value.
struct TestFunction {
    Space space;
    std::string name;
    std::function<Complex(const SpacePoint&)> eval;

    Complex operator()(const SpacePoint& p) const { return eval(p); }
};

/// Evaluate the homomorphism named by p against a. Computed in the
/// mean/delta form ((a1+a2)/2) I + ((a1-a2)/2) h(x), which makes the
/// orbit identity and the diagonal collapse bitwise exact. The tolerance
/// gates the on-sphere check of x; diagnostic callers pass it loose to
/// measure how badly a corrupted parameter fails the homomorphism laws.
ComplexMatrix q2_eval(const HomParam& p, const TestFunction& a,
                      double tol_point = default_tolerances().tol_point);

/// The embedding t |-> ((1,0), t, t), i.e. a |-> a(t) I2.
HomParam iota(const SpacePoint& t);

/// max over the family of op_norm(q2_eval(p, a) - q2_eval(q, a)).
double eval_metric(const HomParam& p, const HomParam& q,
                   const std::vector<TestFunction>& family);

/// Distance to iota(basepoint) and between-loop conveniences live with
/// the callers; the built-in separating families are:
///  S1    -> { z }
///  S2    -> the three real coordinates
///  RP2   -> the six Veronese monomials u_i u_j, scaled to sup-norm 1
///  Wedge -> the two coordinates of (A,th) |-> (e^{i th}, 1),
///                                  (B,th) |-> (1, e^{i th})
const std::vector<TestFunction>& separating_family(Space space);

/// The unitary q2_eval(p, z) for T = S1. Throws when the result fails the
/// unitarity check (corrupted input).
ComplexMatrix eval_z(const HomParam& p,
                     double tol_unitary = default_tolerances().tol_unitary);

/// Built-in continuous maps for pushforwards.
enum class SpaceMap { Identity, CollapseA, CollapseB, SphereToRp2 };

std::string space_map_name(SpaceMap m);
SpaceMap space_map_from_name(const std::string& name);
Space map_domain(SpaceMap m, Space source);
Space map_codomain(SpaceMap m, Space source);

SpacePoint map_point(SpaceMap m, const SpacePoint& p);
SampledLoop map_loop(SpaceMap m, const SampledLoop& loop);

/// (x, t1, t2) |-> (x, g(t1), g(t2)); satisfies
/// q2_eval(pushforward(p), a) == q2_eval(p, a o g) bitwise.
HomParam pushforward(const HomParam& p, SpaceMap m);

} // namespace qnull

#endif
