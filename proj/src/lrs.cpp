// Copyright 2026 the recurzeta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "recurzeta/lrs.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "recurzeta/errors.hpp"

namespace recurzeta {

void RecurrenceSpec::validate() const {
  if (order < 1) throw ValidationError("order must be >= 1");
  if (coeffs.size() != static_cast<size_t>(order))
    throw ValidationError("coeffs must have exactly `order` entries");
  if (initial.size() != static_cast<size_t>(order))
    throw ValidationError("initial must have exactly `order` entries");
}

std::vector<mpz_class> RecurrenceSpec::annihilator() const {
  std::vector<mpz_class> q(order + 1);
  for (int i = 0; i < order; ++i) q[i] = -coeffs[i];
  q[order] = 1;
  return q;
}

std::string IntegerPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs[k];
    if (c == 0 && !(first && k == 0)) continue;
    mpz_class a = ::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) {
      os << "x";
      if (k >= 2) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

SequenceWindow generate_terms(const RecurrenceSpec& spec, long count) {
  spec.validate();
  if (count < 1) throw ValidationError("count must be >= 1");
  SequenceWindow w;
  w.start_index = 1;
  w.terms.reserve(count);
  const int d = spec.order;
  for (long n = 0; n < count; ++n) {
    if (n < d) {
      w.terms.push_back(spec.initial[n]);
    } else {
      mpz_class v = 0;
      for (int i = 0; i < d; ++i) v += spec.coeffs[i] * w.terms[n - d + i];
      w.terms.push_back(v);
    }
  }
  return w;
}

namespace {

// Exact Gaussian elimination on [A|b]; returns a solution if the system is
// consistent (free variables fixed to 0), nullopt otherwise.
std::optional<std::vector<mpq_class>> solve_rational(
    std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<long> pivot_col_of_row(rows, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    mpq_class inv = 1 / a[row][col];
    for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col_of_row[row] = static_cast<long>(col);
    ++row;
  }
  for (size_t i = row; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<mpq_class> x(cols, 0);
  for (size_t i = 0; i < row; ++i) x[pivot_col_of_row[i]] = b[i];
  return x;
}

bool annihilates(const std::vector<mpz_class>& relation_coeffs,  // x_0..x_{m-1}
                 const std::vector<mpz_class>& terms) {
  const size_t m = relation_coeffs.size();
  for (size_t n = 0; n + m < terms.size(); ++n) {
    mpz_class v = 0;
    for (size_t j = 0; j < m; ++j) v += relation_coeffs[j] * terms[n + j];
    if (v != terms[n + m]) return false;
  }
  return true;
}

}  // namespace

IntegerPolynomial minimal_polynomial(const RecurrenceSpec& spec) {
  spec.validate();
  const int d = spec.order;
  SequenceWindow w = generate_terms(spec, 5L * d + 1);
  const auto& t = w.terms;

  bool all_zero = std::all_of(t.begin(), t.begin() + d,
                              [](const mpz_class& v) { return v == 0; });
  if (all_zero) throw ZeroSequence("sequence is identically zero");

  for (int dp = 1; dp <= d; ++dp) {
    // rows n = 0..2d-dp-1: sum_j x_j a_{n+j} = a_{n+dp}
    const int rows = 2 * d - dp;
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(dp));
    std::vector<mpq_class> b(rows);
    for (int n = 0; n < rows; ++n) {
      for (int j = 0; j < dp; ++j) a[n][j] = mpq_class(t[n + j]);
      b[n] = mpq_class(t[n + dp]);
    }
    auto sol = solve_rational(std::move(a), std::move(b));
    if (!sol) continue;
    std::vector<mpz_class> rel(dp);
    for (int j = 0; j < dp; ++j) {
      mpq_class c = (*sol)[j];
      c.canonicalize();
      if (c.get_den() != 1)
        throw InternalInconsistency(
            "minimal relation has a non-integer coefficient");
      rel[j] = c.get_num();
    }
    if (!annihilates(rel, t))
      throw InternalInconsistency(
          "candidate relation fails on the verification window");
    IntegerPolynomial p;
    p.coeffs.resize(dp + 1);
    for (int j = 0; j < dp; ++j) p.coeffs[j] = -rel[j];
    p.coeffs[dp] = 1;
    return p;
  }
  throw InternalInconsistency("no annihilator of degree <= order found");
}

RecurrenceSpec builtin_sequence(const std::string& name) {
  auto make = [](int d, std::vector<long> cs, std::vector<long> in,
                 const std::string& label) {
    RecurrenceSpec s;
    s.order = d;
    for (long c : cs) s.coeffs.emplace_back(c);
    for (long a : in) s.initial.emplace_back(a);
    s.label = label;
    return s;
  };
  if (name == "fibonacci") return make(2, {1, 1}, {1, 1}, "fibonacci");
  if (name == "lucas") return make(2, {1, 1}, {1, 3}, "lucas");
  if (name == "tribonacci") return make(3, {1, 1, 1}, {1, 1, 2}, "tribonacci");
  if (name.rfind("nbonacci(", 0) == 0 && name.back() == ')') {
    const std::string arg = name.substr(9, name.size() - 10);
    size_t pos = 0;
    long n = 0;
    try {
      n = std::stol(arg, &pos);
    } catch (...) {
      throw UnknownName("bad nbonacci argument: " + arg);
    }
    if (pos != arg.size() || n < 2 || n > 64)
      throw UnknownName("nbonacci order out of range: " + arg);
    RecurrenceSpec s;
    s.order = static_cast<int>(n);
    s.coeffs.assign(n, mpz_class(1));
    // standard seeds 1, 1, 2, 4, ..., 2^{N-2}
    s.initial.resize(n);
    s.initial[0] = 1;
    for (long i = 1; i < n; ++i) s.initial[i] = mpz_class(1) << (i - 1);
    s.label = name;
    return s;
  }
  throw UnknownName("unknown builtin sequence: " + name);
}

}  // namespace recurzeta
