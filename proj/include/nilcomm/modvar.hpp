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


// Modules for k[X,Y]/(X^2,Y^2) in characteristic 2, given by commuting
// square-zero pairs.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcomm/variety.hpp"

namespace nilcomm {

class LambdaModule {
 public:
  explicit LambdaModule(CommPair pair);
  LambdaModule(Mat x, Mat y) : LambdaModule(CommPair(std::move(x), std::move(y))) {}

  const Mat& x() const { return pair_.a(); }
  const Mat& y() const { return pair_.b(); }
  const CommPair& pair() const { return pair_; }
  int dim() const { return pair_.n(); }
  const Field& field() const { return pair_.field(); }

  friend bool operator==(const LambdaModule&, const LambdaModule&) = default;

 private:
  CommPair pair_;
};

struct Fingerprint {
  int dim = 0;
  int rk_x = 0;
  int rk_y = 0;
  int rk_xy = 0;
  int rk_x_plus_y = 0;
  int dim_rad = 0;  // dim(im X + im Y)
  int dim_soc = 0;  // dim(ker X  & ker Y)
  int loewy_length = 0;
  int end_dim = 0;

  std::string to_string() const;
  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const LambdaModule& m);

// Basis of {g : g X_M = X_N g, g Y_M = Y_N g}.
std::vector<Mat> hom_basis(const LambdaModule& m, const LambdaModule& n);
std::vector<Mat> end_basis(const LambdaModule& m);

// Action on an invariant subspace spanned by the columns of `basis`.
LambdaModule restrict_to(const LambdaModule& m, const Mat& basis);

LambdaModule dualize(const LambdaModule& m);

LambdaModule module_sum(const LambdaModule& a, const LambdaModule& b);

struct DecomposeOptions {
  std::uint64_t idempotent_budget = std::uint64_t{1} << 20;
  int fitting_trials = 200;
  std::uint64_t seed = 0;
};

struct Summand {
  LambdaModule module;
  bool certified = false;
};

std::vector<Summand> decompose(const LambdaModule& m, const DecomposeOptions& opts = {});

enum class IndecTag { Triv, U, W, ZPlus, ZMinus, Other };

struct IndecClass {
  IndecTag tag = IndecTag::Other;
  std::optional<std::pair<Elem, Elem>> param;  // U only, first nonzero coordinate 1
  Fingerprint fp;

  std::string name() const;  // "TRIV", "U(1:0)", "W", "ZPLUS(5)", ...
};

const char* tag_name(IndecTag tag);

// Throws InvalidArgument unless s.certified.
IndecClass classify_indec(const Summand& s);

struct IsoResult {
  bool isomorphic = false;
  bool certain = false;
};

IsoResult iso_test(const LambdaModule& m, const LambdaModule& n,
                   std::uint64_t budget = std::uint64_t{1} << 20, std::uint64_t samples = 1000,
                   std::uint64_t seed = 0);

}  // namespace nilcomm
