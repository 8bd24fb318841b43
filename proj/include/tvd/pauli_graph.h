// Copyright 2026 The tvd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TVD_PAULI_GRAPH_H
#define TVD_PAULI_GRAPH_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tvd/gf2m.h"
#include "tvd/kerdock_psl.h"
#include "tvd/parallel.h"
#include "tvd/pauli_symplectic.h"

namespace tvd {

/// An ordered pair of distinct non-identity Paulis, read as the matrix (a b; c d).
struct PauliPair {
  PauliIndex first;
  PauliIndex second;

  friend bool operator==(const PauliPair&, const PauliPair&) = default;
  friend auto operator<=>(const PauliPair&, const PauliPair&) = default;
};

enum class EdgeKind { kNonEdge, kType1, kType2 };

const char* to_string(EdgeKind kind);

/// Determinant ad + bc for non-edges and type-2 edges; the row ratio for type-1 edges.
struct OrbitInvariant {
  EdgeKind kind;
  FieldElement value;

  friend bool operator==(const OrbitInvariant&, const OrbitInvariant&) = default;
  friend auto operator<=>(const OrbitInvariant&, const OrbitInvariant&) = default;
};

/// Throws std::invalid_argument for an identity entry or a repeated vertex.
EdgeKind classify_pair(const FieldContext& ctx, const PauliPair& pair);
OrbitInvariant orbit_invariant(const FieldContext& ctx, const PauliPair& pair);

/// Image of the pair under theta(g), both rows transformed.
PauliPair act(const FieldContext& ctx, const PslElement& g, const PauliPair& pair);
PauliPair act(const FieldContext& ctx, const Transvection& h, const PauliPair& pair);

struct SrgParameters {
  int64_t n;
  int64_t t;
  int64_t lambda;
  int64_t mu;

  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Closed form: (N^2 - 1, N^2/2 - 2, N^2/4 - 3, N^2/4 - 1).
SrgParameters srg_parameters(int m);

/// Builds the commutation graph and measures its parameters. Throws if the
/// graph is not strongly regular. Intended for m <= 4.
SrgParameters srg_parameters_bruteforce(const FieldContext& ctx);

struct Census {
  int m = 0;
  bool exhaustive = false;
  int64_t vertices = 0;
  int64_t ordered_pairs = 0;
  int64_t edges = 0;  // ordered commuting pairs
  int64_t type1 = 0;
  int64_t type2 = 0;
  int64_t non_edges = 0;
  int64_t min_out_degree = 0;
  int64_t max_out_degree = 0;
  /// Number of ordered pairs carrying each invariant.
  std::map<OrbitInvariant, int64_t> per_invariant;
};

inline constexpr int kCensusMaxDegree = 6;

/// Enumerates all ordered pairs of distinct vertices. For m above
/// kCensusMaxDegree the result carries only the closed-form counts.
Census census(const FieldContext& ctx, Exec exec = Exec::kParallel);

/// Closed-form counts for every field above.
Census closed_form_census(int m);

/// Key-value lines, one "key value" per line, sorted invariants last.
std::string format_census(const Census& c, const FieldContext* ctx = nullptr);

/// Orbits of ordered pairs under the PSL generators, found by union-find.
struct OrbitPartition {
  std::vector<PauliPair> pairs;
  std::vector<int> orbit_of;  // index into orbits
  std::vector<std::vector<int>> orbits;
};

OrbitPartition orbit_partition(const FieldContext& ctx);

}  // namespace tvd

#endif  // TVD_PAULI_GRAPH_H
