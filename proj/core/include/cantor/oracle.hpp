#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/finite_spaces.hpp"

namespace cantor {

/// Outcome of one exhaustively checked structural statement.
struct SuiteReport {
  std::string name;
  std::string statement;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct OracleOptions {
  int max_ground = 4;
  int max_codomain = 3;
  int max_product_factor = 3;
};

/// Every partition of {0, …, n-1}, blocks ordered by least element.
std::vector<std::vector<Subset>> all_partitions(int n);

/// Runs every structural suite over all σ-algebras and maps within the option bounds.
///
/// Membership, images, preimages, atoms and generated σ-algebras are recomputed here from
/// their set-family definitions (closure to a fixpoint, intersection of all containing sets)
/// and compared against the partition-based implementations in finite_spaces.
std::vector<SuiteReport> run_structural_oracle(const OracleOptions& opts = {});

}  // namespace cantor
