#pragma once

#include <optional>
#include <vector>

#include "accyc/matgf.hpp"

namespace accyc {

enum class Mode { Strict, Appendix };

struct EigMult {
  uint32_t root;
  int algebraic;
  int geometric;
};

/// Outcome of the almost-cyclicity test. A matrix is almost cyclic when it is
/// similar to diag(alpha*Id_k, M1) with M1 cyclic. alpha is present iff k >= 1;
/// k is the multiplicity of (x - alpha) in charpoly/minpoly.
struct Verdict {
  bool almost_cyclic = false;
  Mode mode = Mode::Strict;
  std::optional<uint32_t> alpha;
  int k = 0;
  bool is_cyclic = false;  // charpoly == minpoly; implies almost_cyclic with k = 0
  bool is_scalar = false;
  std::vector<EigMult> eig_mults;
};

/// Appendix mode: true iff Q := charpoly/minpoly is 1 or a power (x-alpha)^{deg Q}
/// of a linear polynomial. Strict mode additionally requires
/// nullity((M - alpha Id)^2) - nullity(M - alpha Id) <= 1, which makes the test
/// equal to the definitional property for every matrix; the two modes agree on
/// semisimple inputs and J2(a)+J2(a) separates them.
Verdict is_almost_cyclic(const Mat& m, Mode mode);

/// Independent oracle via invariant factors: true iff t <= 1 or
/// f_1 = ... = f_{t-1} = x - alpha for a single alpha in the field.
Verdict oracle_is_almost_cyclic(const Mat& m);

/// For every root of charpoly in the base field: (root, algebraic multiplicity,
/// geometric multiplicity), sorted by encoding.
std::vector<EigMult> eigen_profile(const Mat& m);

/// Encoding map realizing GF(p^k) inside GF(p^K), k | K: image of the small
/// field's polynomial generator is the least root of its modulus in the big
/// field. FieldMismatch if characteristics differ, TowerMismatch if k does not
/// divide K.
std::vector<uint32_t> field_embedding(const Field& small, const Field& big);

/// Entry-wise base change of a matrix along field_embedding.
Mat mat_embed(const Mat& m, const Field& big);

}  // namespace accyc
