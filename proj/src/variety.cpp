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

#include "nilcomm/variety.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace nilcomm {
namespace {

void require_char2(const Field& field, const char* what) {
  if (!field || field->p() != 2) {
    throw InvalidArgument(std::string(what) + " is only defined in characteristic 2");
  }
}

// Matrix of X -> left X + coeff * X right on row-major vec(X), where X is
// left.rows() x right.rows().
Mat sylvester_matrix(const Mat& left, const Mat& right, Elem coeff, const Field& field) {
  const std::size_t r = left.rows();
  const std::size_t c = right.rows();
  const FieldCtx& f = *field;
  Mat lin(field, r * c, r * c);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      const std::size_t row = a * c + b;
      for (std::size_t k = 0; k < r; ++k) {
        lin(row, k * c + b) = f.add(lin(row, k * c + b), left(a, k));
      }
      for (std::size_t k = 0; k < c; ++k) {
        lin(row, a * c + k) = f.add(lin(row, a * c + k), f.mul(coeff, right(k, b)));
      }
    }
  }
  return lin;
}

Mat random_combination(const std::vector<Mat>& vectors, const Field& field, std::size_t rows,
                       std::size_t cols, Rng& rng) {
  Mat out(field, rows * cols, 1);
  for (const Mat& v : vectors) add_scaled_inplace(out, rng.element(*field), v);
  return unvec(out, rows, cols);
}

// Random (B, C, F) with AB = BE, EF = FA and AC + BF + CA = 0. Returns
// nullopt when the chosen (B, F) admits no C.
struct Blocks {
  Mat b, c, f;
};

std::optional<Blocks> try_solve_blocks(const Field& field, const Mat& a, const Mat& e, Rng& rng,
                                       bool zero_f) {
  const FieldCtx& fc = *field;
  const std::size_t i = a.rows();
  const std::size_t r = e.rows();
  const Elem minus_one = fc.neg(1);

  Mat b = random_combination(rank_kernel(sylvester_matrix(a, e, minus_one, field)).kernel, field,
                             i, r, rng);
  Mat f = zero_f ? Mat(field, r, i)
                 : random_combination(rank_kernel(sylvester_matrix(e, a, minus_one, field)).kernel,
                                      field, r, i, rng);
  if (i == 0) return Blocks{b, Mat(field, 0, 0), f};

  const Mat lin_c = sylvester_matrix(a, a, 1, field);
  const Mat rhs = vec(neg(mul(b, f)));
  Mat particular;
  if (!solve(lin_c, rhs, particular)) return std::nullopt;
  Mat c = add(unvec(particular, i, i),
              random_combination(rank_kernel(lin_c).kernel, field, i, i, rng));
  return Blocks{std::move(b), std::move(c), std::move(f)};
}

Blocks solve_blocks(const Field& field, const Mat& a, const Mat& e, Rng& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    if (auto blocks = try_solve_blocks(field, a, e, rng, false)) return *blocks;
  }
  return *try_solve_blocks(field, a, e, rng, true);  // C = 0 always works
}

Mat assemble(const Field& field, int n, int i, const Mat& a, const Mat& b, const Mat& c,
             const Mat& e, const Mat& f) {
  const BlockSpec spec = canonical_blocks(n, i);
  Mat x(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  set_block(x, spec, 0, 0, a);
  set_block(x, spec, 0, 1, b);
  set_block(x, spec, 0, 2, c);
  set_block(x, spec, 1, 1, e);
  set_block(x, spec, 1, 2, f);
  set_block(x, spec, 2, 2, a);
  return x;
}

Mat random_square_zero(const Field& field, int size, Rng& rng) {
  if (size == 0) return Mat(field, 0, 0);
  const int rk = static_cast<int>(rng.below(static_cast<std::uint64_t>(size / 2 + 1)));
  const Mat base = canonical_e(field, size, rk).matrix;
  return conjugate(random_invertible(field, static_cast<std::size_t>(size), rng), base);
}

struct MaxRankVisitor {
  std::size_t best = 0;
  void operator()(const Mat& m) {
    if (pth_power_is_zero(m)) best = std::max(best, rank(m));
  }
  void merge(const MaxRankVisitor& o) { best = std::max(best, o.best); }
};

}  // namespace

std::string comm_pair_violation(const Mat& a, const Mat& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows()) {
    throw DimensionMismatch("commuting pair needs two square matrices of equal size");
  }
  if (!same_field(a.field(), b.field())) throw FieldMismatch("commuting pair over two fields");
  if (!is_restricted_nilpotent(a)) return "A^[p] != 0";
  if (!is_restricted_nilpotent(b)) return "B^[p] != 0";
  if (!commutator(a, b).is_zero()) return "[A,B] != 0";
  return {};
}

bool is_comm_pair(const Mat& a, const Mat& b) { return comm_pair_violation(a, b).empty(); }

CommPair::CommPair(Mat a, Mat b) : a_(std::move(a)), b_(std::move(b)) {
  const std::string why = comm_pair_violation(a_, b_);
  if (!why.empty()) throw DomainError("not a point of the commuting variety: " + why);
}

CommPair gl2_act(Elem a, Elem b, Elem c, Elem d, const CommPair& pair) {
  require_char2(pair.field(), "gl2_act");
  const FieldCtx& f = *pair.field();
  for (Elem v : {a, b, c, d}) {
    if (!f.valid(v)) throw InvalidArgument("gl2_act: coefficient is not a field element");
  }
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) {
    throw DomainError("gl2_act: coefficient matrix is singular");
  }
  return CommPair(add(scale(a, pair.a()), scale(b, pair.b())),
                  add(scale(c, pair.a()), scale(d, pair.b())));
}

CommPair block_sum(const CommPair& x, const CommPair& y) {
  return CommPair(direct_sum(x.a(), y.a()), direct_sum(x.b(), y.b()));
}

CommPair conjugate(const Mat& g, const CommPair& pair) {
  const Mat gi = inverse(g);
  return CommPair(mul(mul(g, pair.a()), gi), mul(mul(g, pair.b()), gi));
}

std::uint64_t count_cent_nil_of(const Mat& x, const EnumerationOptions& opts) {
  const std::vector<Mat> basis = centralizer_basis(x);
  return enumerate_affine(std::span<const Mat>(basis), CountRestrictedNilpotent{}, opts).count;
}

std::uint64_t count_cent_nil(int n, int i, const Field& field, const EnumerationOptions& opts) {
  return count_cent_nil_of(canonical_e(field, n, i).matrix, opts);
}

BigInt count_square_zero(int n, std::uint64_t q) {
  BigInt total = 0;
  for (int i = 0; 2 * i <= n; ++i) total += orbit_size(n, i, q);
  return total;
}

VarietyCount count_C_detailed(int n, const Field& field, const EnumerationOptions& opts) {
  require_char2(field, "count_C");
  if (n < 1) throw InvalidArgument("count_C: n must be positive");
  const std::uint64_t q = field->q();

  std::vector<std::vector<Mat>> bases(static_cast<std::size_t>(n / 2 + 1));
  for (int i = 1; 2 * i <= n; ++i) {
    bases[static_cast<std::size_t>(i)] = centralizer_basis(canonical_e(field, n, i).matrix);
    enumeration_size(field->q(), bases[static_cast<std::size_t>(i)].size(), opts.budget,
                     "count_C stratum");
  }

  VarietyCount out;
  for (int i = 0; 2 * i <= n; ++i) {
    StratumCount s;
    s.i = i;
    s.orbit = orbit_size(n, i, q);
    if (i == 0) {
      s.cent_nil = count_square_zero(n, q);
    } else {
      const auto& basis = bases[static_cast<std::size_t>(i)];
      s.cent_nil = enumerate_affine(std::span<const Mat>(basis), CountRestrictedNilpotent{}, opts).count;
      s.visits = enumeration_size(field->q(), basis.size(), opts.budget);
    }
    out.total += s.orbit * s.cent_nil;
    out.visits += s.visits;
    out.strata.push_back(std::move(s));
  }
  return out;
}

BigInt count_C(int n, const Field& field, const EnumerationOptions& opts) {
  return count_C_detailed(n, field, opts).total;
}

DimEstimate estimate_dim(const std::vector<std::pair<std::uint64_t, BigInt>>& samples) {
  if (samples.size() < 2) throw InvalidArgument("estimate_dim: need at least two samples");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k].second <= 0) throw DomainError("estimate_dim: zero count");
    if (k > 0 && samples[k].first <= samples[k - 1].first) {
      throw InvalidArgument("estimate_dim: field sizes must be strictly increasing");
    }
  }
  const auto& lo = samples[samples.size() - 2];
  const auto& hi = samples.back();
  DimEstimate est;
  est.q_lo = lo.first;
  est.q_hi = hi.first;
  const long double n_lo = lo.second.convert_to<long double>();
  const long double n_hi = hi.second.convert_to<long double>();
  est.ratio = static_cast<double>(n_hi / n_lo);
  est.dim = static_cast<double>(std::log(n_hi / n_lo) /
                                std::log(static_cast<long double>(hi.first) / lo.first));
  est.dim_rounded = std::llround(est.dim);
  est.leading = static_cast<double>(
      n_hi / std::pow(static_cast<long double>(hi.first), static_cast<long double>(est.dim_rounded)));
  est.leading_rounded = std::llround(est.leading);
  return est;
}

std::size_t max_rank_second(int n, int i, const Field& field, const EnumerationOptions& opts) {
  const std::vector<Mat> basis = centralizer_basis(canonical_e(field, n, i).matrix);
  return enumerate_affine(std::span<const Mat>(basis), MaxRankVisitor{}, opts).best;
}

Mat stratum_base(const Field& field, int n, int i, int j, int l) {
  const BlockSpec spec = canonical_blocks(n, i);
  if (j < 0 || 2 * j > i) throw InvalidArgument("stratum: need 0 <= j <= [i/2]");
  if (l < 0 || 2 * l > n - 2 * i) throw InvalidArgument("stratum: need 0 <= l <= [(n-2i)/2]");
  Mat x(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  if (i > 0) {
    const Mat aj = canonical_e(field, i, j).matrix;
    set_block(x, spec, 0, 0, aj);
    set_block(x, spec, 2, 2, aj);
  }
  if (n - 2 * i > 0) set_block(x, spec, 1, 1, canonical_e(field, n - 2 * i, l).matrix);
  return x;
}

Mat rep_stratum(const Field& field, const StratumParams& p) {
  require_char2(field, "rep_stratum");
  const Mat base = stratum_base(field, p.n, p.i, p.j, p.l);
  const auto i = static_cast<std::size_t>(p.i);
  const auto r = static_cast<std::size_t>(p.n - 2 * p.i);
  auto check_shape = [](const Mat& m, std::size_t rows, std::size_t cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols) {
      throw DimensionMismatch(std::string("rep_stratum: block ") + name + " must be " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    }
  };
  check_shape(p.b, i, r, "B");
  check_shape(p.c, i, i, "C");
  check_shape(p.f, r, i, "F");

  const BlockSpec spec = canonical_blocks(p.n, p.i);
  const Mat a = block(base, spec, 0, 0);
  const Mat e = block(base, spec, 1, 1);
  if (!(mul(a, p.b) == mul(p.b, e))) throw DomainError("rep_stratum: A_j B != B E_l");
  if (!(mul(e, p.f) == mul(p.f, a))) throw DomainError("rep_stratum: E_l F != F A_j");
  if (!add(add(mul(a, p.c), mul(p.b, p.f)), mul(p.c, a)).is_zero()) {
    throw DomainError("rep_stratum: A_j C + B F + C A_j != 0");
  }
  Mat x = assemble(field, p.n, p.i, a, p.b, p.c, e, p.f);
  const Mat ei = canonical_e(field, p.n, p.i).matrix;
  if (!commutator(x, ei).is_zero() || !pth_power(x).is_zero()) {
    throw DomainError("rep_stratum: assembled element left the centralizer nullcone");
  }
  return x;
}

StratumParams random_stratum_params(const Field& field, int n, int i, int j, int l, Rng& rng) {
  require_char2(field, "random_stratum_params");
  const Mat base = stratum_base(field, n, i, j, l);
  const BlockSpec spec = canonical_blocks(n, i);
  const Blocks blk = solve_blocks(field, block(base, spec, 0, 0), block(base, spec, 1, 1), rng);
  return StratumParams{n, i, j, l, blk.b, blk.c, blk.f};
}

std::string ComponentId::name() const {
  switch (kind) {
    case ComponentKind::X:
      return "X_" + std::to_string(j);
    case ComponentKind::XPlus:
      return "X_" + std::to_string(j) + "^+";
    case ComponentKind::XMinus:
      return "X_" + std::to_string(j) + "^-";
    case ComponentKind::XHalf:
      return "X_" + std::to_string(j);
  }
  return "?";
}

void validate(const ComponentId& id) {
  if (id.n < 1) throw InvalidArgument("component: n must be positive");
  const int m = id.n / 2;
  const bool even = id.n % 2 == 0;
  switch (id.kind) {
    case ComponentKind::X:
      if (!even) throw InvalidArgument("component X_j needs even n");
      if (id.j < 0 || id.j > m / 2) throw InvalidArgument("component X_j needs 0 <= j <= [m/2]");
      return;
    case ComponentKind::XPlus:
    case ComponentKind::XMinus:
      if (even) throw InvalidArgument("signed components need odd n");
      if (id.j < 0 || 2 * id.j >= m) throw InvalidArgument("signed components need 0 <= j < m/2");
      return;
    case ComponentKind::XHalf:
      if (even || m % 2 != 0) throw InvalidArgument("X_{m/2} needs n = 2m+1 with m even");
      if (id.j != m / 2) throw InvalidArgument("X_{m/2} has j = m/2");
      return;
  }
}

std::vector<ComponentId> list_components(int n) {
  if (n < 1) throw InvalidArgument("list_components: n must be positive");
  const int m = n / 2;
  std::vector<ComponentId> out;
  if (n % 2 == 0) {
    for (int j = 0; j <= m / 2; ++j) out.push_back({n, ComponentKind::X, j});
    return out;
  }
  for (int j = 0; 2 * j < m; ++j) {
    out.push_back({n, ComponentKind::XPlus, j});
    out.push_back({n, ComponentKind::XMinus, j});
  }
  if (m % 2 == 0) out.push_back({n, ComponentKind::XHalf, m / 2});
  return out;
}

CommPair w_pair(const Field& field) {
  Mat x(field, 4, 4), y(field, 4, 4);
  x(0, 1) = 1;
  x(2, 3) = 1;
  y(0, 2) = 1;
  y(1, 3) = 1;
  return CommPair(std::move(x), std::move(y));
}

CommPair x0_pair(const Field& field, int m) {
  if (m < 1) throw InvalidArgument("x0_pair: m must be positive");
  if (static_cast<std::uint32_t>(m) > field->q()) {
    throw DomainError("X_0 representative needs " + std::to_string(m) +
                      " distinct field elements, GF(" + std::to_string(field->q()) +
                      ") has fewer");
  }
  const auto mm = static_cast<std::size_t>(m);
  Mat y(field, 2 * mm, 2 * mm);
  for (std::size_t k = 0; k < mm; ++k) y(k, mm + k) = static_cast<Elem>(k);
  return CommPair(canonical_e(field, 2 * m, m).matrix, std::move(y));
}

CommPair x0_plus_pair(const Field& field, int m) {
  if (m < 1) throw InvalidArgument("x0_plus_pair: m must be positive");
  const auto mm = static_cast<std::size_t>(m);
  Mat y(field, 2 * mm + 1, 2 * mm + 1);
  for (std::size_t k = 0; k < mm; ++k) y(k, mm + k) = 1;
  return CommPair(canonical_e(field, 2 * m + 1, m).matrix, std::move(y));
}

CommPair x0_minus_pair(const Field& field, int m) {
  const CommPair plus = x0_plus_pair(field, m);
  return CommPair(transpose(plus.a()), transpose(plus.b()));
}

CommPair trivial_pair(const Field& field) { return CommPair(Mat(field, 1, 1), Mat(field, 1, 1)); }

CommPair generic_component_rep(const ComponentId& id, const Field& field) {
  validate(id);
  require_char2(field, "generic_component_rep");
  const int m = id.n / 2;
  std::optional<CommPair> acc;
  auto append = [&](const CommPair& piece) { acc = acc ? block_sum(*acc, piece) : piece; };
  const int free_blocks = id.kind == ComponentKind::XHalf ? m / 2 : id.j;
  for (int k = 0; k < free_blocks; ++k) append(w_pair(field));
  const int rest = m - 2 * free_blocks;
  switch (id.kind) {
    case ComponentKind::X:
      if (rest > 0) append(x0_pair(field, rest));
      break;
    case ComponentKind::XPlus:
      append(x0_plus_pair(field, rest));
      break;
    case ComponentKind::XMinus:
      append(x0_minus_pair(field, rest));
      break;
    case ComponentKind::XHalf:
      append(trivial_pair(field));
      break;
  }
  return *acc;
}

CommPair random_comm_pair(const Field& field, int n, Rng& rng) {
  require_char2(field, "random_comm_pair");
  if (n < 1) throw InvalidArgument("random_comm_pair: n must be positive");
  const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2 + 1)));
  const Mat a = random_square_zero(field, i, rng);
  const Mat e = random_square_zero(field, n - 2 * i, rng);
  const Blocks blk = solve_blocks(field, a, e, rng);
  const Mat y = assemble(field, n, i, a, blk.b, blk.c, e, blk.f);
  CommPair pair(canonical_e(field, n, i).matrix, y);
  pair = conjugate(random_invertible(field, static_cast<std::size_t>(n), rng), pair);
  const FieldCtx& f = *field;
  for (;;) {
    const Elem ca = rng.element(f), cb = rng.element(f), cc = rng.element(f), cd = rng.element(f);
    if (f.sub(f.mul(ca, cd), f.mul(cb, cc)) != 0) return gl2_act(ca, cb, cc, cd, pair);
  }
}

}  // namespace nilcomm
