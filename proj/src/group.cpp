/**************************************************************************
 * group.cpp
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

#include "lcp/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

void check_order(std::size_t n, const char* what) {
  if (n < 1) throw SizeLimitError(std::string(what) + ": order must be at least 1");
  if (n > FiniteGroup::kMaxOrder) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(n) + " exceeds " +
                         std::to_string(FiniteGroup::kMaxOrder));
  }
}

std::string power_label(const char* base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const CayleyTable& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupValidationError(GroupErrorKind::kShape, "Cayley table is empty");
  if (n > kMaxOrder) {
    throw GroupValidationError(GroupErrorKind::kShape, "group order " + std::to_string(n) + " exceeds " +
                                                           std::to_string(kMaxOrder));
  }
  for (const auto& row : table) {
    if (row.size() != n) throw GroupValidationError(GroupErrorKind::kShape, "Cayley table is not square");
    for (std::size_t x : row) {
      if (x >= n) {
        throw GroupValidationError(GroupErrorKind::kIndexRange, "table entry " + std::to_string(x) + " out of range");
      }
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw GroupValidationError(GroupErrorKind::kShape, "label count does not match group order");
  }

  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[i][j]]++) {
        throw GroupValidationError(GroupErrorKind::kLatinSquare, "row " + std::to_string(i) + " repeats an element");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[table[j][i]]++) {
        throw GroupValidationError(GroupErrorKind::kLatinSquare, "column " + std::to_string(i) + " repeats an element");
      }
    }
  }

  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) id = e;
  }
  if (id == n) throw GroupValidationError(GroupErrorKind::kMissingIdentity, "no two-sided identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        if (table[ab][c] != table[a][table[b][c]]) {
          throw GroupValidationError(GroupErrorKind::kAssociativity,
                                     "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" + std::to_string(c) +
                                         " differs from " + std::to_string(a) + "*(" + std::to_string(b) + "*" +
                                         std::to_string(c) + ")");
        }
      }
    }
  }

  // Swap id and 0.
  auto relabel = [id](std::size_t x) { return x == id ? 0 : (x == 0 ? id : x); };
  FiniteGroup g;
  g.n_ = n;
  g.table_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.table_[relabel(i) * n + relabel(j)] = relabel(table[i][j]);
  }
  g.inv_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.table_[i * n + j] == 0 && g.table_[j * n + i] == 0) {
        g.inv_[i] = j;
        break;
      }
    }
    if (g.inv_[i] == n) {
      throw GroupValidationError(GroupErrorKind::kMissingInverse, "element " + std::to_string(i) + " has no inverse");
    }
  }
  if (!labels.empty()) {
    g.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.labels_[relabel(i)] = std::move(labels[i]);
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  check_order(n, "cyclic");
  CayleyTable t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : power_label("g", i);
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return from_table(t, std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 1) throw SizeLimitError("dihedral: n must be at least 1");
  check_order(2 * n, "dihedral");
  const std::size_t order = 2 * n;
  // r^a s^x * r^b s^y = r^(a + (-1)^x b) s^(x + y)
  CayleyTable t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) {
    const std::size_t a = i % n, x = i / n;
    labels[i] = x == 0 ? (a == 0 ? "1" : power_label("r", a)) : power_label("r", a) + "s";
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t b = j % n, y = j / n;
      const std::size_t rot = x == 0 ? (a + b) % n : (a + n - b) % n;
      t[i][j] = ((x + y) % 2) * n + rot;
    }
  }
  return from_table(t, std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t m) {
  if (m < 1 || m > 5) throw SizeLimitError("symmetric: degree must be in [1, 5]");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  const std::size_t n = perms.size();
  CayleyTable t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    Permutation as_perm{perms[i]};
    labels[i] = as_perm.to_string();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> c(m);
      for (std::size_t k = 0; k < m; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = index.at(c);
    }
  }
  return from_table(t, std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  check_order(g.order() * h.order(), "direct product");
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  CayleyTable t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = "(" + g.label(i / m) + "," + h.label(i % m) + ")";
    for (std::size_t j = 0; j < n; ++j) t[i][j] = g.op(i / m, j / m) * m + h.op(i % m, j % m);
  }
  return from_table(t, std::move(labels));
}

std::string FiniteGroup::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "g" + std::to_string(i);
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (op(i, j) != op(j, i)) return false;
    }
  }
  return true;
}

CayleyTable FiniteGroup::table() const {
  CayleyTable t(n_, std::vector<std::size_t>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = op(i, j);
  }
  return t;
}

FiniteGroup read_cayley_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n < 1) throw GroupValidationError(GroupErrorKind::kShape, "Cayley table file: bad order line");
  if (n > static_cast<long long>(FiniteGroup::kMaxOrder)) {
    throw GroupValidationError(GroupErrorKind::kShape, "Cayley table file: order exceeds 256");
  }
  const auto order = static_cast<std::size_t>(n);
  CayleyTable t(order, std::vector<std::size_t>(order));
  for (auto& row : t) {
    for (auto& x : row) {
      long long v = 0;
      if (!(in >> v)) throw GroupValidationError(GroupErrorKind::kShape, "Cayley table file: truncated table");
      if (v < 0 || v >= n) {
        throw GroupValidationError(GroupErrorKind::kIndexRange, "Cayley table file: entry out of range");
      }
      x = static_cast<std::size_t>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw GroupValidationError(GroupErrorKind::kShape, "Cayley table file: trailing data");
  return FiniteGroup::from_table(t);
}

void write_cayley_table(std::ostream& out, const FiniteGroup& g) {
  out << g.order() << '\n';
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) out << (j ? " " : "") << g.op(i, j);
    out << '\n';
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.map.resize(n);
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

void Permutation::validate() const {
  std::vector<char> seen(map.size());
  for (std::size_t x : map) {
    if (x >= map.size() || seen[x]++) throw ValidationError("permutation " + to_string() + " is not a bijection");
  }
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < map.size(); ++i) out << (i ? "," : "") << map[i];
  out << ']';
  return out.str();
}

}  // namespace lcp
