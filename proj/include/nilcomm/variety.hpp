// Copyright 2026 The nilcomm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The restricted nilpotent commuting variety
//   C = { (A, B) : A^[p] = B^[p] = [A, B] = 0 }
// of gl(n): membership, the GL(2) symmetry, point counts over F_q, dimension
// estimates, and explicit points on every stratum and component.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/enumerate.hpp"
#include "nilcomm/mat.hpp"
#include "nilcomm/nilpotent.hpp"
#include "nilcomm/random.hpp"

namespace nilcomm {

// A point (A, B) of C. The invariants are checked on construction.
class CommPair {
 public:
  // Throws DomainError naming the failing equation.
  CommPair(Mat a, Mat b);

  const Mat& a() const { return a_; }
  const Mat& b() const { return b_; }
  int n() const { return static_cast<int>(a_.rows()); }
  const Field& field() const { return a_.field(); }

  friend bool operator==(const CommPair&, const CommPair&) = default;

 private:
  Mat a_;
  Mat b_;
};

// Empty when (a, b) lies on C, otherwise the first failing equation
// ("A^[p] != 0", "B^[p] != 0" or "[A,B] != 0").
std::string comm_pair_violation(const Mat& a, const Mat& b);
bool is_comm_pair(const Mat& a, const Mat& b);

// (A, B) -> (aA + bB, cA + dB). Characteristic 2 only; the coefficient
// matrix must be invertible.
CommPair gl2_act(Elem a, Elem b, Elem c, Elem d, const CommPair& pair);

// Block-diagonal sum of two points (the module direct sum).
CommPair block_sum(const CommPair& x, const CommPair& y);
CommPair conjugate(const Mat& g, const CommPair& pair);

// --- counting -------------------------------------------------------------

// #{ y in z(e_i) : y^[p] = 0 } over the field, by exhaustive enumeration of
// the centralizer.
std::uint64_t count_cent_nil(int n, int i, const Field& field, const EnumerationOptions& opts = {});

// Same count with e_i replaced by an arbitrary x.
std::uint64_t count_cent_nil_of(const Mat& x, const EnumerationOptions& opts = {});

// #{ x in gl(n, q) : x^2 = 0 } = sum_i |orbit of e_i|. Characteristic 2.
BigInt count_square_zero(int n, std::uint64_t q);

struct StratumCount {
  int i = 0;
  BigInt orbit;
  BigInt cent_nil;
  std::uint64_t visits = 0;  // 0 when the stratum used the closed form
};

struct VarietyCount {
  BigInt total;
  std::vector<StratumCount> strata;
  std::uint64_t visits = 0;
};

// |C(F_q)| = sum_i |G.e_i| * #(z(e_i) cap N_1), characteristic 2. The i = 0
// stratum (centralizer = gl(n)) uses count_square_zero; the others are
// enumerated. Budgets of all strata are checked before any work starts.
VarietyCount count_C_detailed(int n, const Field& field, const EnumerationOptions& opts = {});
BigInt count_C(int n, const Field& field, const EnumerationOptions& opts = {});

struct DimEstimate {
  std::uint64_t q_lo = 0;
  std::uint64_t q_hi = 0;
  double ratio = 0;    // N(q_hi) / N(q_lo)
  double dim = 0;      // log ratio / log(q_hi / q_lo)
  long long dim_rounded = 0;
  double leading = 0;  // N(q_hi) / q_hi^dim_rounded
  long long leading_rounded = 0;
};

// Uses the two largest field sizes. Needs >= 2 samples with strictly
// increasing q and nonzero counts.
DimEstimate estimate_dim(const std::vector<std::pair<std::uint64_t, BigInt>>& samples);

// Largest rank of a y in z(e_i) with y^[p] = 0.
std::size_t max_rank_second(int n, int i, const Field& field, const EnumerationOptions& opts = {});

// --- strata V_{j,l} -------------------------------------------------------

// A point of V_{j,l}: x = [[A_j, B, C], [0, E_l, F], [0, 0, A_j]] in the
// (i, n-2i, i) layout, A_j and E_l the square-zero representatives of ranks
// j and l. B is i x (n-2i), C is i x i, F is (n-2i) x i.
struct StratumParams {
  int n = 0;
  int i = 0;
  int j = 0;
  int l = 0;
  Mat b;
  Mat c;
  Mat f;
};

// diag(A_j, E_l, A_j)
Mat stratum_base(const Field& field, int n, int i, int j, int l);

// Assembles x and checks that it is square-zero and commutes with e_i.
// Characteristic 2 only. Throws DomainError naming the violated equation.
Mat rep_stratum(const Field& field, const StratumParams& params);

// Random free blocks satisfying AB = BE, EF = FA and AC + BF + CA = 0 for
// A = A_j and E = E_l.
StratumParams random_stratum_params(const Field& field, int n, int i, int j, int l, Rng& rng);

// --- components -----------------------------------------------------------

enum class ComponentKind { X, XPlus, XMinus, XHalf };

struct ComponentId {
  int n = 0;
  ComponentKind kind = ComponentKind::X;
  int j = 0;

  std::string name() const;  // "X_1", "X_0^+", "X_1" (half), ...
  friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

// Throws InvalidArgument when j or kind is out of range for n.
void validate(const ComponentId& id);

// All component labels for gl(n): [m/2]+1 of them for n = 2m, m+1 for
// n = 2m+1.
std::vector<ComponentId> list_components(int n);

// The pair (e12+e34, e13+e24), a free module of rank one.
CommPair w_pair(const Field& field);
// (e_m, (0 D; 0 0)) in gl(2m) with D = diag(0, 1, ..., m-1).
CommPair x0_pair(const Field& field, int m);
// (e_m, e_{1,m+1} + ... + e_{m,2m}) in gl(2m+1).
CommPair x0_plus_pair(const Field& field, int m);
// Transpose of x0_plus_pair.
CommPair x0_minus_pair(const Field& field, int m);
CommPair trivial_pair(const Field& field);

// A point whose GL(n)-orbit is dense in the named component.
CommPair generic_component_rep(const ComponentId& id, const Field& field);

// Random point of C over a characteristic 2 field: random stratum, random
// centralizer point solved block by block, random GL(n) conjugation and a
// random GL(2) twist.
CommPair random_comm_pair(const Field& field, int n, Rng& rng);

}  // namespace nilcomm
