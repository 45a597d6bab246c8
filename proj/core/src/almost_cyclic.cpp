#include "accyc/almost_cyclic.hpp"

#include <algorithm>

namespace accyc {

std::vector<EigMult> eigen_profile(const Mat& m) {
  if (!m.is_square()) fail(Errc::NotSquare, "eigen_profile of non-square matrix");
  Poly cp = charpoly(m);
  std::vector<EigMult> out;
  for (auto [root, mult] : roots_in_field(cp)) {
    size_t geom = rank_nullity(mat_sub_scalar(m, root)).second;
    out.push_back({root, mult, (int)geom});
  }
  return out;
}

Verdict is_almost_cyclic(const Mat& m, Mode mode) {
  if (!m.is_square()) fail(Errc::NotSquare, "is_almost_cyclic of non-square matrix");
  Verdict v;
  v.mode = mode;
  Poly cp = charpoly(m);
  Poly mp = minpoly(m);
  auto [quot, rem] = poly_divrem(cp, mp);
  if (!rem.is_zero())
    fail(Errc::MinpolyNotDividing, "charpoly not divisible by minpoly");
  v.is_scalar = mat_is_scalar(m);
  v.eig_mults = eigen_profile(m);
  if (quot.degree() == 0) {
    v.is_cyclic = true;
    v.almost_cyclic = true;
    v.k = 0;
    return v;
  }
  PowerOfLinear pol = is_power_of_linear(quot);
  if (pol.kind != PowerOfLinear::Kind::Power) {
    v.almost_cyclic = false;
    return v;
  }
  v.alpha = pol.alpha;
  v.k = pol.mult;
  if (mode == Mode::Appendix) {
    v.almost_cyclic = true;
    return v;
  }
  // strict: at most one Jordan block of size >= 2 for alpha
  Mat d = mat_sub_scalar(m, pol.alpha);
  size_t n1 = rank_nullity(d).second;
  size_t n2 = rank_nullity(mat_mul(d, d)).second;
  v.almost_cyclic = (n2 - n1 <= 1);
  return v;
}

Verdict oracle_is_almost_cyclic(const Mat& m) {
  if (!m.is_square()) fail(Errc::NotSquare, "oracle of non-square matrix");
  Verdict v;
  v.mode = Mode::Strict;
  v.is_scalar = mat_is_scalar(m);
  v.eig_mults = eigen_profile(m);
  std::vector<Poly> fs = invariant_factors(m);
  size_t t = fs.size();
  if (t <= 1) {
    v.is_cyclic = true;
    v.almost_cyclic = true;
    v.k = 0;
    return v;
  }
  // all invariant factors except the last must equal one linear x - alpha
  const Poly& first = fs[0];
  if (first.degree() != 1) {
    v.almost_cyclic = false;
    return v;
  }
  for (size_t i = 1; i + 1 < t; ++i)
    if (!(fs[i] == first)) {
      v.almost_cyclic = false;
      return v;
    }
  uint32_t alpha = m.ctx()->neg(first.coeffs()[0]);
  v.alpha = alpha;
  v.k = (int)(t - 1);
  v.almost_cyclic = true;
  return v;
}

std::vector<uint32_t> field_embedding(const Field& small, const Field& big) {
  if (small->p() != big->p()) fail(Errc::FieldMismatch, "different characteristics");
  if (big->k() % small->k() != 0) fail(Errc::TowerMismatch, "extension degree does not divide");
  // least root of the small modulus inside the big field
  Poly mod(big, [&] {
    std::vector<uint32_t> c;
    for (uint32_t x : small->modulus()) c.push_back(x);  // prime-subfield encodings coincide
    return c;
  }());
  uint32_t beta = big->q();
  for (uint32_t a = 0; a < big->q(); ++a)
    if (poly_eval(mod, a) == 0) {
      beta = a;
      break;
    }
  if (beta == big->q()) fail(Errc::TowerMismatch, "modulus has no root in the big field");
  std::vector<uint32_t> map(small->q());
  for (uint32_t e = 0; e < small->q(); ++e) {
    uint32_t img = 0, pw = 1, t = e;
    for (uint32_t i = 0; i < small->k(); ++i) {
      uint32_t digit = t % small->p();
      t /= small->p();
      img = big->add(img, big->mul(digit, pw));
      pw = big->mul(pw, beta);
    }
    map[e] = img;
  }
  return map;
}

Mat mat_embed(const Mat& m, const Field& big) {
  auto map = field_embedding(m.ctx(), big);
  std::vector<uint32_t> e(m.entries().size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = map[m.entries()[i]];
  return Mat(big, m.rows(), m.cols(), std::move(e));
}

}  // namespace accyc
