#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "accyc/almost_cyclic.hpp"
#include "accyc/matgf.hpp"
#include "accyc/numth.hpp"

namespace accyc {

/// Matrix group given by explicit generators over one FieldCtx.
struct GroupSpec {
  Field ctx;
  size_t dim = 0;
  std::vector<Mat> gens;
  std::string name;
  std::optional<uint64_t> expected_order;
};

/// Validates generator shapes and invertibility (SingularGenerator).
void validate_group_spec(const GroupSpec& spec);

/// Canonical packed encoding of a matrix (entries as base-q digits split over
/// two words). Total order and hashing for closure sets.
struct PackedMat {
  std::array<uint64_t, 2> w{0, 0};
  friend bool operator==(const PackedMat& a, const PackedMat& b) { return a.w == b.w; }
  friend bool operator<(const PackedMat& a, const PackedMat& b) { return a.w < b.w; }
};

PackedMat pack_mat(const Mat& m);
Mat unpack_mat(const Field& ctx, size_t dim, const PackedMat& key);
uint64_t packed_hash(const PackedMat& key);

inline constexpr uint64_t kDefaultClosureCap = 2000000;

struct ClosureResult {
  uint64_t order = 0;
  std::vector<PackedMat> elements;           // BFS discovery order
  std::vector<uint32_t> element_orders;      // parallel to elements
  std::map<uint64_t, uint64_t> order_histogram;
};

/// Breadth-first closure under generator multiplication. Exact set if the
/// group has at most cap elements, otherwise CapExceeded (partial data is
/// discarded). Also computes every element order.
ClosureResult closure_enumerate(const GroupSpec& spec, uint64_t cap = kDefaultClosureCap);

/// Deterministic pseudo-random words in the generators (product-replacement
/// style mixing). Identical output for a given (seed, count) regardless of
/// platform or thread count. count must be >= 1.
std::vector<Mat> random_elements(const GroupSpec& spec, size_t count, uint64_t seed);

/// Element filter for scans. The default mirrors a survey of prime-power
/// order classes, excluding order 2 and orders divisible by the matrix field
/// characteristic.
struct ScanPolicy {
  bool require_prime_power = true;
  bool include_order_two = false;
  bool include_char_divisible = false;
  std::set<uint64_t> order_whitelist;  // when nonempty, only these orders
  uint64_t closure_cap = kDefaultClosureCap;
  size_t samples = 10000;
  uint64_t seed = 1;
};

bool policy_admits(const ScanPolicy& policy, uint64_t order, uint32_t field_char);

enum class TriState { True, False, Inconsistent };

/// One (order, charpoly) fingerprint. Fingerprints can merge conjugacy
/// classes; when merged classes disagree the verdict is Inconsistent, never
/// averaged.
struct FingerprintRow {
  uint64_t order = 0;
  std::string charpoly;  // coefficient text, low degree first
  uint64_t count = 0;
  TriState strict = TriState::True;
  TriState appendix = TriState::True;
  uint64_t witness_hash = 0;  // hash of the first element seen
};

struct ScanReport {
  bool exhaustive = false;  // exhaustive closure vs sampled survey
  uint64_t group_order = 0; // 0 when sampled
  uint64_t surveyed = 0;
  std::vector<FingerprintRow> rows;  // sorted by (order, charpoly)
};

/// Survey almost-cyclicity per fingerprint: exhaustive if the closure fits
/// the cap, otherwise sampled (the report says which). Both strict and
/// appendix verdicts are recorded.
ScanReport scan_almost_cyclic(const GroupSpec& spec, const ScanPolicy& policy = {});

/// Generators of GL_n(q): a primitive-element diagonal, the two permutation
/// generators and one transvection.
GroupSpec gl_group(unsigned n, const Field& ctx);
/// |GL_n(q)| = prod_{i<n} (q^n - q^i)
BigInt gl_order(unsigned n, const BigInt& q);

/// Brute-force Sylow-exponent oracle: maximum p-element order over the full
/// enumeration of GL_n(q). CapExceeded if |GL_n(q)| > cap. Enumerations are
/// cached per (n, q) within the process.
uint64_t eta_oracle(unsigned n, const BigInt& q, const BigInt& p,
                    uint64_t cap = kDefaultClosureCap);

}  // namespace accyc
