/**************************************************************************
 * chain_linalg.cpp
 *
 * Copyright 2026 The lcpcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "lcp/chain_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

void check_row_length(const RingVector& v, std::size_t cols) {
  if (v.size() != cols) {
    throw LengthMismatchError("vector of length " + std::to_string(v.size()) + " where " + std::to_string(cols) +
                              " was expected");
  }
}

// row -= f * other
void subtract_multiple(const ChainRingSpec& ring, RingVector& row, const ChainRingElement& f, const RingVector& other) {
  if (ring.is_zero(f)) return;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (ring.is_zero(other[k])) continue;
    row[k] = ring.sub(row[k], ring.mul(f, other[k]));
  }
}

RingVector scaled(const ChainRingSpec& ring, const ChainRingElement& f, const RingVector& v) {
  RingVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(ring.mul(f, x));
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned k) {
  std::uint64_t v = 1;
  while (k-- > 0) v *= base;
  return v;
}

}  // namespace

bool is_zero_vector(const ChainRingSpec& ring, const RingVector& v) {
  return std::all_of(v.begin(), v.end(), [&ring](const ChainRingElement& x) { return ring.is_zero(x); });
}

ChainRingElement inner_product(const ChainRingSpec& ring, const RingVector& x, const RingVector& y) {
  check_row_length(y, x.size());
  ChainRingElement acc = ring.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = ring.add(acc, ring.mul(x[i], y[i]));
  return acc;
}

PivotForm pivot_reduce(const RingMatrix& m) {
  const ChainRingSpec& ring = m.ring;
  PivotForm form{ring, m.cols, {}, {}, {}};

  std::vector<RingVector> pool;
  for (const auto& row : m.rows) {
    check_row_length(row, m.cols);
    for (const auto& x : row) ring.validate(x);
    if (!is_zero_vector(ring, row)) pool.push_back(row);
  }

  for (std::size_t c = 0; c < m.cols && !pool.empty(); ++c) {
    std::size_t best = pool.size();
    unsigned best_val = ring.e();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const unsigned v = ring.valuation(pool[i][c]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == pool.size()) continue;

    RingVector pivot = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    const unsigned t = best_val;
    const ChainRingElement unit = ring.divide_by_gamma(pivot[c], t);
    pivot = scaled(ring, ring.inverse(unit), pivot);

    for (auto& row : pool) {
      if (ring.is_zero(row[c])) continue;
      subtract_multiple(ring, row, ring.divide_by_gamma(row[c], t), pivot);
    }
    // gamma^(e-t) * pivot vanishes in column c but may survive further right.
    if (t > 0) {
      RingVector sat = scaled(ring, ring.gamma_power(ring.e() - t), pivot);
      if (!is_zero_vector(ring, sat)) pool.push_back(std::move(sat));
    }
    std::erase_if(pool, [&ring](const RingVector& row) { return is_zero_vector(ring, row); });

    form.rows.push_back(std::move(pivot));
    form.pivot_cols.push_back(c);
    form.pivot_vals.push_back(t);
  }

  // Reduce entries above each pivot to canonical residues mod gamma^t.
  // Increasing k is safe: row k is zero left of its pivot, so later
  // reductions never disturb columns already handled.
  for (std::size_t k = 0; k < form.rows.size(); ++k) {
    const std::size_t c = form.pivot_cols[k];
    const unsigned t = form.pivot_vals[k];
    for (std::size_t i = 0; i < k; ++i) {
      const ChainRingElement& x = form.rows[i][c];
      const ChainRingElement rem = ring.residue_mod_gamma(x, t);
      if (rem == x) continue;
      const ChainRingElement q = ring.divide_by_gamma(ring.sub(x, rem), t);
      subtract_multiple(ring, form.rows[i], q, form.rows[k]);
    }
  }
  return form;
}

std::optional<RingVector> reduce_vector(const RingVector& v, const PivotForm& form, std::size_t col_limit) {
  check_row_length(v, form.cols);
  const ChainRingSpec& ring = form.ring;
  RingVector residual = v;
  for (std::size_t j = 0; j < form.rows.size(); ++j) {
    const std::size_t c = form.pivot_cols[j];
    if (c >= col_limit) break;
    if (ring.is_zero(residual[c])) continue;
    const unsigned t = form.pivot_vals[j];
    if (ring.valuation(residual[c]) < t) return std::nullopt;
    subtract_multiple(ring, residual, ring.divide_by_gamma(residual[c], t), form.rows[j]);
  }
  return residual;
}

bool membership(const RingVector& v, const PivotForm& form) {
  const auto residual = reduce_vector(v, form);
  return residual && is_zero_vector(form.ring, *residual);
}

PivotForm kernel(const RingMatrix& m) {
  const ChainRingSpec& ring = m.ring;
  const std::size_t n = m.cols;
  std::vector<RingVector> a;
  for (const auto& row : m.rows) {
    check_row_length(row, n);
    a.push_back(row);
  }
  const std::size_t k = a.size();

  // Column transform, stored column-major: q[j] is column j.
  std::vector<RingVector> q(n, RingVector(n, ring.zero()));
  for (std::size_t j = 0; j < n; ++j) q[j][j] = ring.one();

  std::vector<unsigned> diag;
  for (std::size_t s = 0; s < std::min(k, n); ++s) {
    std::size_t bi = k, bj = n;
    unsigned best = ring.e();
    for (std::size_t i = s; i < k; ++i) {
      for (std::size_t j = s; j < n; ++j) {
        const unsigned v = ring.valuation(a[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == k) break;
    std::swap(a[s], a[bi]);
    if (bj != s) {
      for (auto& row : a) std::swap(row[s], row[bj]);
      std::swap(q[s], q[bj]);
    }
    const unsigned t = best;
    a[s] = scaled(ring, ring.inverse(ring.divide_by_gamma(a[s][s], t)), a[s]);
    for (std::size_t i = s + 1; i < k; ++i) {
      if (ring.is_zero(a[i][s])) continue;
      subtract_multiple(ring, a[i], ring.divide_by_gamma(a[i][s], t), a[s]);
    }
    for (std::size_t j = s + 1; j < n; ++j) {
      if (ring.is_zero(a[s][j])) continue;
      const ChainRingElement f = ring.divide_by_gamma(a[s][j], t);
      for (std::size_t i = 0; i < k; ++i) a[i][j] = ring.sub(a[i][j], ring.mul(f, a[i][s]));
      subtract_multiple(ring, q[j], f, q[s]);
    }
    diag.push_back(t);
  }

  // x = Q y with gamma^(d_s) y_s = 0 on the diagonal, y free elsewhere.
  RingMatrix gens{ring, n, {}};
  for (std::size_t s = 0; s < n; ++s) {
    if (s < diag.size()) {
      if (diag[s] == 0) continue;
      gens.rows.push_back(scaled(ring, ring.gamma_power(ring.e() - diag[s]), q[s]));
    } else {
      gens.rows.push_back(q[s]);
    }
  }
  return pivot_reduce(gens);
}

PivotForm sum_forms(const PivotForm& a, const PivotForm& b) {
  if (!(a.ring == b.ring) || a.cols != b.cols) throw LengthMismatchError("cannot add spans over different modules");
  RingMatrix m{a.ring, a.cols, a.rows};
  m.rows.insert(m.rows.end(), b.rows.begin(), b.rows.end());
  return pivot_reduce(m);
}

PivotForm dual_form(const PivotForm& a) { return kernel(a.as_matrix()); }

PivotForm intersect_forms(const PivotForm& a, const PivotForm& b) {
  return dual_form(sum_forms(dual_form(a), dual_form(b)));
}

BigInt cardinality(const PivotForm& form) {
  BigInt size = 1;
  for (unsigned t : form.pivot_vals) {
    for (unsigned i = 0; i < form.ring.e() - t; ++i) size *= form.ring.residue_size();
  }
  return size;
}

CodewordEnumerator::CodewordEnumerator(const PivotForm& form, std::uint64_t cap) : form_(form) {
  const BigInt total = cardinality(form_);
  if (total > cap) {
    throw EnumerationTooLargeError("span of size " + total.str() + " exceeds the enumeration cap " +
                                   std::to_string(cap));
  }
  count_ = static_cast<std::uint64_t>(total);
  for (unsigned t : form_.pivot_vals) radix_.push_back(ipow(form_.ring.p(), (form_.ring.e() - t) * form_.ring.r()));
  digits_.assign(radix_.size(), 0);
}

void CodewordEnumerator::restart() {
  std::fill(digits_.begin(), digits_.end(), 0);
  done_ = false;
}

bool CodewordEnumerator::next(RingVector& out) {
  if (done_) return false;
  const ChainRingSpec& ring = form_.ring;
  out.assign(form_.cols, ring.zero());
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (digits_[j] == 0) continue;
    const std::uint64_t base = ipow(ring.p(), ring.e() - form_.pivot_vals[j]);
    ChainRingElement coeff = ring.zero();
    std::uint64_t d = digits_[j];
    for (unsigned i = 0; i < ring.r(); ++i) {
      coeff.coeffs[i] = d % base;
      d /= base;
    }
    for (std::size_t k = 0; k < form_.cols; ++k) out[k] = ring.add(out[k], ring.mul(coeff, form_.rows[j][k]));
  }
  // Odometer with the last row fastest.
  std::size_t j = digits_.size();
  while (j > 0) {
    --j;
    if (++digits_[j] < radix_[j]) return true;
    digits_[j] = 0;
  }
  done_ = true;
  return true;
}

std::vector<RingVector> enumerate_codewords(const PivotForm& form, std::uint64_t cap) {
  CodewordEnumerator it(form, cap);
  std::vector<RingVector> words;
  words.reserve(it.count());
  RingVector w;
  while (it.next(w)) words.push_back(w);
  return words;
}

std::string format_form(const PivotForm& form) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < form.rows.size(); ++i) {
    if (i > 0) out << "; ";
    for (std::size_t k = 0; k < form.cols; ++k) out << (k ? " " : "") << form.ring.format(form.rows[i][k]);
  }
  out << ']';
  return out.str();
}

}  // namespace lcp
