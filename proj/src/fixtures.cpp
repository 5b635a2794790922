#include "homlie/fixtures.hpp"

namespace homlie::fixtures {

namespace {

RationalVector vec(Rational x1, Rational x2, Rational x3, Rational x4) { return {x1, x2, x3, x4}; }

/// Operator matrix from the images of e1..e4.
RationalMatrix from_images(const std::vector<RationalVector>& images) {
  return RationalMatrix::from_columns(images, images.size());
}

}  // namespace

RationalTensor imex_bracket(const Rational& a, const Rational& b) {
  RationalTensor c(4);
  c.set_antisymmetric(0, 1, vec(0, 0, -a, 0));
  c.set_antisymmetric(0, 2, vec(0, b, 0, 0));
  c.set_antisymmetric(1, 3, vec(0, -a, 0, 0));
  c.set_antisymmetric(2, 3, vec(0, 0, a, 0));
  return c;
}

TwistMap imex_twist() { return RationalMatrix::diagonal({-1, 1, -1, 1}); }

SymplecticForm imex_omega(const Rational& a, const Rational& b, const Rational& A) {
  const Rational r = a / b * A;
  return SymplecticForm(RationalMatrix{{0, 0, -A, 0}, {0, 0, 0, r}, {A, 0, 0, 0}, {0, -r, 0, 0}});
}

MetricForm kahler4_metric(const Rational& a, const Rational& b, const Rational& A) {
  const Rational r = a / b * A;
  return MetricForm(RationalMatrix::diagonal({A, r, A, r}));
}

RationalMatrix kahler4_complex_structure() {
  return from_images({vec(0, 0, 1, 0), vec(0, 0, 0, 1), vec(-1, 0, 0, 0), vec(0, -1, 0, 0)});
}

RationalTensor kahler4_levi_civita_table(const Rational& a, const Rational& b) {
  RationalTensor p(4);
  p.set(1, 0, vec(0, 0, a, 0));   // e2·e1 = a e3
  p.set(2, 0, vec(0, -b, 0, 0));  // e3·e1 = -b e2
  p.set(1, 1, vec(0, 0, 0, a));   // e2·e2 = a e4
  p.set(1, 3, vec(0, -a, 0, 0));  // e2·e4 = -a e2
  p.set(2, 3, vec(0, 0, a, 0));   // e3·e4 = a e3
  p.set(2, 2, vec(0, 0, 0, b));   // e3·e3 = b e4
  p.set(1, 2, vec(-a, 0, 0, 0));  // e2·e3 = -a e1
  p.set(2, 1, vec(-a, 0, 0, 0));  // e3·e2 = -a e1
  return p;
}

RationalTensor hermitian4_bracket(const Rational& a) {
  RationalTensor c(4);
  c.set_antisymmetric(0, 2, vec(a, a, 0, 0));
  c.set_antisymmetric(1, 3, vec(a, a, 0, 0));
  c.set_antisymmetric(2, 3, vec(0, 0, -a, a));
  return c;
}

TwistMap hermitian4_twist() {
  return from_images({vec(0, 1, 0, 0), vec(1, 0, 0, 0), vec(0, 0, 0, 1), vec(0, 0, 1, 0)});
}

RationalMatrix hermitian4_complex_structure() {
  return from_images({vec(0, 0, 0, 1), vec(0, 0, 1, 0), vec(0, -1, 0, 0), vec(-1, 0, 0, 0)});
}

}  // namespace homlie::fixtures
