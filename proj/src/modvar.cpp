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


#include "nilcomm/modvar.hpp"

#include <bit>
#include <span>

#include "nilcomm/enumerate.hpp"
#include "nilcomm/random.hpp"

namespace nilcomm {
namespace {

int rank_of(const Mat& m) { return static_cast<int>(rank(m)); }

bool fits_budget(std::uint64_t q, std::size_t d, std::uint64_t budget) {
  long double total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    total *= static_cast<long double>(q);
    if (total > static_cast<long double>(budget)) return false;
  }
  return true;
}

struct IdempotentFinder {
  Mat id;
  std::optional<Mat> found;
  void operator()(const Mat& m) {
    if (found || m.is_zero() || m == id) return;
    if (mul(m, m) == m) found = m;
  }
  void merge(const IdempotentFinder& o) {
    if (!found && o.found) found = o.found;
  }
};

std::pair<LambdaModule, LambdaModule> split_along(const LambdaModule& m, const Mat& first,
                                                  const Mat& second) {
  return {restrict_to(m, column_space(first)), restrict_to(m, column_space(second))};
}

void decompose_into(const LambdaModule& m, const DecomposeOptions& opts, Rng& rng,
                    std::vector<Summand>& out) {
  const int n = m.dim();
  if (n == 1) {
    out.push_back({m, true});
    return;
  }
  const Field& field = m.field();
  const std::vector<Mat> end = end_basis(m);
  const Mat id = Mat::identity(field, static_cast<std::size_t>(n));

  if (fits_budget(field->q(), end.size(), opts.idempotent_budget)) {
    EnumerationOptions eo;
    eo.budget = opts.idempotent_budget;
    eo.workers = 1;
    const IdempotentFinder hit =
        enumerate_affine(std::span<const Mat>(end), IdempotentFinder{id, std::nullopt}, eo);
    if (!hit.found) {
      out.push_back({m, true});
      return;
    }
    auto [a, b] = split_along(m, *hit.found, sub(id, *hit.found));
    decompose_into(a, opts, rng, out);
    decompose_into(b, opts, rng, out);
    return;
  }

  const int squarings = std::bit_width(static_cast<unsigned>(n - 1));
  auto try_fitting = [&](const Mat& phi) -> bool {
    Mat power = phi;
    for (int k = 0; k < squarings; ++k) power = mul(power, power);
    const RankKernel rk = rank_kernel(power);
    if (rk.rank == 0 || rk.rank == static_cast<std::size_t>(n)) return false;
    const LambdaModule image = restrict_to(m, column_space(power));
    const LambdaModule kernel = restrict_to(m, hstack(rk.kernel, field, static_cast<std::size_t>(n)));
    decompose_into(kernel, opts, rng, out);
    decompose_into(image, opts, rng, out);
    return true;
  };
  for (const Mat& phi : end)
    if (try_fitting(phi)) return;
  for (int t = 0; t < opts.fitting_trials; ++t) {
    Mat phi(field, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const Mat& b : end) add_scaled_inplace(phi, rng.element(*field), b);
    if (try_fitting(phi)) return;
  }
  out.push_back({m, false});
}

}  // namespace

LambdaModule::LambdaModule(CommPair pair) : pair_(std::move(pair)) {
  if (pair_.field()->p() != 2) throw InvalidArgument("LambdaModule: characteristic must be 2");
}

std::string Fingerprint::to_string() const {
  return "(" + std::to_string(dim) + "," + std::to_string(rk_x) + "," + std::to_string(rk_y) +
         "," + std::to_string(rk_xy) + "," + std::to_string(rk_x_plus_y) + ",rad " +
         std::to_string(dim_rad) + ",soc " + std::to_string(dim_soc) + ",loewy " +
         std::to_string(loewy_length) + ",end " + std::to_string(end_dim) + ")";
}

Fingerprint fingerprint(const LambdaModule& m) {
  const Mat& x = m.x();
  const Mat& y = m.y();
  Fingerprint fp;
  fp.dim = m.dim();
  fp.rk_x = rank_of(x);
  fp.rk_y = rank_of(y);
  fp.rk_xy = rank_of(mul(x, y));
  fp.rk_x_plus_y = rank_of(add(x, y));
  const auto d = static_cast<std::size_t>(fp.dim);
  fp.dim_rad = rank_of(hstack({x, y}, m.field(), d));
  fp.dim_soc = fp.dim - rank_of(hstack({transpose(x), transpose(y)}, m.field(), d));

  Mat layer = Mat::identity(m.field(), d);
  while (rank(layer) > 0) {
    ++fp.loewy_length;
    layer = column_space(hstack({mul(x, layer), mul(y, layer)}, m.field(), d));
  }
  fp.end_dim = static_cast<int>(end_basis(m).size());
  return fp;
}

std::vector<Mat> hom_basis(const LambdaModule& m, const LambdaModule& n) {
  if (!same_field(m.field(), n.field())) throw FieldMismatch("hom_basis: modules over two fields");
  const std::size_t dm = static_cast<std::size_t>(m.dim());
  const std::size_t dn = static_cast<std::size_t>(n.dim());
  const FieldCtx& f = *m.field();
  // g is dn x dm; equations g X_M - X_N g and g Y_M - Y_N g, stacked.
  Mat lin(m.field(), 2 * dn * dm, dn * dm);
  const Mat* src[2] = {&m.x(), &m.y()};
  const Mat* dst[2] = {&n.x(), &n.y()};
  for (std::size_t s = 0; s < 2; ++s) {
    const std::size_t off = s * dn * dm;
    for (std::size_t a = 0; a < dn; ++a) {
      for (std::size_t b = 0; b < dm; ++b) {
        const std::size_t c = a * dm + b;
        for (std::size_t k = 0; k < dm; ++k) {
          const Elem v = (*src[s])(b, k);
          if (v != 0) lin(off + a * dm + k, c) = f.add(lin(off + a * dm + k, c), v);
        }
        for (std::size_t k = 0; k < dn; ++k) {
          const Elem v = (*dst[s])(k, a);
          if (v != 0) lin(off + k * dm + b, c) = f.sub(lin(off + k * dm + b, c), v);
        }
      }
    }
  }
  std::vector<Mat> out;
  for (const Mat& v : rank_kernel(lin).kernel) out.push_back(unvec(v, dn, dm));
  return out;
}

std::vector<Mat> end_basis(const LambdaModule& m) { return hom_basis(m, m); }

LambdaModule restrict_to(const LambdaModule& m, const Mat& basis) {
  Mat x, y;
  if (!solve(basis, mul(m.x(), basis), x) || !solve(basis, mul(m.y(), basis), y)) {
    throw DomainError("restrict_to: subspace is not invariant");
  }
  return LambdaModule(std::move(x), std::move(y));
}

LambdaModule dualize(const LambdaModule& m) {
  return LambdaModule(transpose(m.x()), transpose(m.y()));
}

LambdaModule module_sum(const LambdaModule& a, const LambdaModule& b) {
  return LambdaModule(block_sum(a.pair(), b.pair()));
}

std::vector<Summand> decompose(const LambdaModule& m, const DecomposeOptions& opts) {
  Rng rng(opts.seed);
  std::vector<Summand> out;
  decompose_into(m, opts, rng, out);
  return out;
}

const char* tag_name(IndecTag tag) {
  switch (tag) {
    case IndecTag::Triv:
      return "TRIV";
    case IndecTag::U:
      return "U";
    case IndecTag::W:
      return "W";
    case IndecTag::ZPlus:
      return "ZPLUS";
    case IndecTag::ZMinus:
      return "ZMINUS";
    case IndecTag::Other:
      return "OTHER";
  }
  return "OTHER";
}

std::string IndecClass::name() const {
  switch (tag) {
    case IndecTag::U:
      return "U(" + std::to_string(param->first) + ":" + std::to_string(param->second) + ")";
    case IndecTag::ZPlus:
    case IndecTag::ZMinus:
      return std::string(tag_name(tag)) + "(" + std::to_string(fp.dim) + ")";
    default:
      return tag_name(tag);
  }
}

IndecClass classify_indec(const Summand& s) {
  if (!s.certified) throw InvalidArgument("classify_indec: summand is not certified indecomposable");
  const LambdaModule& m = s.module;
  IndecClass c;
  c.fp = fingerprint(m);
  const int n = c.fp.dim;
  if (n == 1) {
    c.tag = IndecTag::Triv;
    return c;
  }
  if (n == 2) {
    const FieldCtx& f = *m.field();
    const Mat& e = m.x().is_zero() ? m.y() : m.x();
    if (e.is_zero()) return c;
    std::size_t r = 0, col = 0;
    while (e(r, col) == 0) {
      if (++col == 2) col = 0, ++r;
    }
    const Elem a = f.div(m.x()(r, col), e(r, col));
    const Elem b = f.div(m.y()(r, col), e(r, col));
    if (scale(a, e) == m.x() && scale(b, e) == m.y()) {
      c.tag = IndecTag::U;
      c.param = a != 0 ? std::pair{Elem{1}, f.div(b, a)} : std::pair{Elem{0}, Elem{1}};
    }
    return c;
  }
  if (n == 4 && c.fp == fingerprint(LambdaModule(w_pair(m.field())))) {
    c.tag = IndecTag::W;
    return c;
  }
  if (n % 2 == 1) {
    const int h = n / 2;
    if (c.fp.rk_x == h && c.fp.rk_y == h) {
      if (c.fp.dim_rad == h) c.tag = IndecTag::ZPlus;
      else if (c.fp.dim_rad == h + 1 && c.fp.dim_soc == h + 1) c.tag = IndecTag::ZMinus;
    }
  }
  return c;
}

IsoResult iso_test(const LambdaModule& m, const LambdaModule& n, std::uint64_t budget,
                   std::uint64_t samples, std::uint64_t seed) {
  if (!same_field(m.field(), n.field())) throw FieldMismatch("iso_test: modules over two fields");
  if (m.dim() != n.dim()) throw DimensionMismatch("iso_test: dimensions differ");
  const std::vector<Mat> h = hom_basis(m, n);
  if (h.empty()) return {false, true};
  const Field& field = m.field();
  if (fits_budget(field->q(), h.size(), budget)) {
    EnumerationOptions eo;
    eo.budget = budget;
    eo.workers = 1;
    return {enumerate_affine(std::span<const Mat>(h), CountInvertible{}, eo).count > 0, true};
  }
  Rng rng(seed);
  for (std::uint64_t t = 0; t < samples; ++t) {
    Mat g(field, static_cast<std::size_t>(m.dim()), static_cast<std::size_t>(m.dim()));
    for (const Mat& b : h) add_scaled_inplace(g, rng.element(*field), b);
    if (is_invertible(g)) return {true, true};
  }
  return {false, false};
}

}  // namespace nilcomm
