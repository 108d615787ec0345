#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace solv {

// Budget error kinds. The CLI maps any of these to exit code 3.
enum class cap_kind {
  orbit_budget,
  subspace_budget,
  closure_budget,
  oracle_cap,
  relation_module,
  stabilizer_budget,
  unit_group,
  generic,
};

class cap_error : public std::runtime_error {
public:
  cap_error(cap_kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
  cap_kind kind;
};

struct not_normal_error : std::runtime_error {
  explicit not_normal_error(const std::string& w) : std::runtime_error(w) {}
};
struct inconsistent_tail_error : std::runtime_error {
  explicit inconsistent_tail_error(const std::string& w) : std::runtime_error(w) {}
};
struct not_normalizing_error : std::runtime_error {
  explicit not_normalizing_error(const std::string& w) : std::runtime_error(w) {}
};
struct wrong_order_shape_error : std::runtime_error {
  explicit wrong_order_shape_error(const std::string& w) : std::runtime_error(w) {}
};

// Global budgets. Set once from the CLI before any engine call; engine code
// only reads them. Defaults are sized for desk-scale orders (<= a few hundred).
struct budgets_t {
  std::uint64_t orbit_points = 10'000'000;     // orbit enumeration cap
  std::uint64_t subspace_count = 2'000'000;    // subspace/submodule enumeration cap
  std::uint64_t closure_elements = 1'000'000;  // matrix group closure cap
  std::uint64_t oracle_order = 200;            // brute-force isomorphism cap
  std::uint64_t relation_module_order = 2000;  // |G| cap for cover construction
  std::uint64_t unit_group_enum = 1u << 21;    // algebra size cap for unit-group enumeration
  std::uint64_t fingerprint_order = 2000;      // element-order multiset cap
  int threads = 1;
  bool seedless = false;  // assert no randomized path; the engine itself never draws randomness
};

budgets_t& budgets();

}  // namespace solv
