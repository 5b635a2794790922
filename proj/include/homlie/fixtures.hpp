#pragma once

#include "homlie/metric_symplectic.hpp"

namespace homlie::fixtures {

// 4D hom-Lie algebra with [e1,e2] = -a e3, [e1,e3] = b e2, [e2,e4] = -a e2, [e3,e4] = a e3
// and phi = diag(-1, 1, -1, 1). Not a Lie algebra when ab != 0.
RationalTensor imex_bracket(const Rational& a, const Rational& b);
TwistMap imex_twist();
/// Its symplectic form: Omega(e1,e3) = -A, Omega(e2,e4) = (a/b) A.
SymplecticForm imex_omega(const Rational& a, const Rational& b, const Rational& A);

// Kähler structure on the same algebra.
MetricForm kahler4_metric(const Rational& a, const Rational& b, const Rational& A);
/// J e1 = e3, J e2 = e4, J e3 = -e1, J e4 = -e2.
RationalMatrix kahler4_complex_structure();
/// Hand-entered hom-Levi-Civita product table of the Kähler example.
RationalTensor kahler4_levi_civita_table(const Rational& a, const Rational& b);

// 4D almost Hermitian example: [e1,e3] = a(e1+e2), [e2,e4] = a(e1+e2), [e3,e4] = -a e3 + a e4,
// phi swapping e1<->e2 and e3<->e4, identity metric.
RationalTensor hermitian4_bracket(const Rational& a);
TwistMap hermitian4_twist();
/// J e1 = e4, J e2 = e3, J e3 = -e2, J e4 = -e1.
RationalMatrix hermitian4_complex_structure();

}  // namespace homlie::fixtures
