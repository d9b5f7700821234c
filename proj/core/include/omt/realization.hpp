// Copyright 2026 The Authors.
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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omt/groundset.hpp"
#include "omt/matroid.hpp"
#include "omt/tract.hpp"
#include "omt/tract_function.hpp"

namespace omt {

/// n-by-n skew-symmetric matrix over an exact field; rows and columns are
/// 1-based, the strict upper triangle determines everything.
template <FieldTract F>
class SkewMatrix {
 public:
  using Elem = typename F::Elem;

  SkewMatrix(F field, int n)
      : field_(std::move(field)), n_(n), a_(std::size_t(n) * n, field_.zero()) {
    if (n < 1 || n > kMaxGroundSize)
      throw InvalidInput("matrix size out of range");
  }

  /// Builds from the row-major strict upper triangle
  /// {{a12,...,a1n},{a23,...},...}.
  static SkewMatrix from_upper(F field, int n,
                               const std::vector<std::vector<Elem>>& upper) {
    SkewMatrix m(std::move(field), n);
    if (static_cast<int>(upper.size()) != (n > 0 ? n - 1 : 0))
      throw InvalidInput("upper triangle must have n-1 rows");
    for (int i = 1; i < n; ++i) {
      if (static_cast<int>(upper[i - 1].size()) != n - i)
        throw InvalidInput("upper-triangle row has wrong length");
      for (int j = i + 1; j <= n; ++j)
        m.set_upper(i, j, upper[i - 1][j - i - 1]);
    }
    return m;
  }

  int n() const { return n_; }
  const F& field() const { return field_; }

  const Elem& at(int i, int j) const { return a_[(i - 1) * n_ + (j - 1)]; }
  void set_upper(int i, int j, Elem v) {
    if (i >= j) throw InvalidInput("set_upper expects i < j");
    a_[(j - 1) * n_ + (i - 1)] = field_.neg(v);
    a_[(i - 1) * n_ + (j - 1)] = std::move(v);
  }

  std::vector<std::vector<Elem>> upper_triangle() const {
    std::vector<std::vector<Elem>> rows;
    for (int i = 1; i < n_; ++i) {
      std::vector<Elem> row;
      for (int j = i + 1; j <= n_; ++j) row.push_back(at(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  F field_;
  int n_;
  std::vector<Elem> a_;
};

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
/// `m` is row-major size*size and is consumed.
template <FieldTract F>
typename F::Elem determinant_bareiss(const F& f,
                                     std::vector<typename F::Elem> m,
                                     int size) {
  using Elem = typename F::Elem;
  if (size == 0) return f.one();
  auto at = [&](int r, int c) -> Elem& { return m[r * size + c]; };
  Elem prev = f.one();
  bool negate = false;
  for (int k = 0; k + 1 < size; ++k) {
    if (f.is_zero(at(k, k))) {
      int pivot = -1;
      for (int r = k + 1; r < size; ++r)
        if (!f.is_zero(at(r, k))) {
          pivot = r;
          break;
        }
      if (pivot < 0) return f.zero();
      for (int c = k; c < size; ++c) std::swap(at(k, c), at(pivot, c));
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        Elem num = f.sub(f.mul(at(i, j), at(k, k)), f.mul(at(i, k), at(k, j)));
        at(i, j) = f.div(num, prev);
      }
      at(i, k) = f.zero();
    }
    prev = at(k, k);
  }
  Elem det = at(size - 1, size - 1);
  return negate ? f.neg(det) : det;
}

namespace detail {

/// Index subsets of [n] are masks over bits 0..n-1.
inline std::vector<int> mask_indices(Mask m, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (m & (Mask{1} << (i - 1))) out.push_back(i);
  return out;
}

}  // namespace detail

/// All principal Pfaffians of A at once: pf(A_I) for every I ⊆ [n], by the
/// first-row recursive expansion with memoization on subsets. Odd subsets
/// get 0 by convention.
template <FieldTract F>
class PfaffianTable {
 public:
  using Elem = typename F::Elem;

  explicit PfaffianTable(const SkewMatrix<F>& a)
      : field_(a.field()),
        vals_(std::size_t{1} << a.n()),
        done_(std::size_t{1} << a.n(), false) {
    n_ = a.n();
    matrix_ = &a;
  }

  const Elem& pf(Mask subset) {
    if (done_[subset]) return vals_[subset];
    Elem v = field_.zero();
    if (std::popcount(subset) % 2 == 0) v = compute(subset);
    vals_[subset] = std::move(v);
    done_[subset] = true;
    return vals_[subset];
  }

 private:
  Elem compute(Mask subset) {
    auto idx = detail::mask_indices(subset, n_);
    if (idx.empty()) return field_.one();
    Elem acc = field_.zero();
    int i1 = idx[0];
    for (std::size_t j = 1; j < idx.size(); ++j) {
      const Elem& entry = matrix_->at(i1, idx[j]);
      if (field_.is_zero(entry)) continue;
      Mask rest = subset & ~(Mask{1} << (i1 - 1)) & ~(Mask{1} << (idx[j] - 1));
      Elem term = field_.mul(entry, pf(rest));
      // (-1)^(j+1) with j the 1-based position in the ascending listing.
      acc = ((j + 1) % 2 == 0) ? field_.add(acc, term) : field_.sub(acc, term);
    }
    return acc;
  }

  F field_;
  int n_ = 0;
  const SkewMatrix<F>* matrix_;
  std::vector<Elem> vals_;
  std::vector<char> done_;
};

/// pf(A_I) for a single subset.
template <FieldTract F>
typename F::Elem pfaffian(const SkewMatrix<F>& a, Mask subset) {
  PfaffianTable<F> table(a);
  return table.pf(subset);
}

/// ψ(([n] \ I) ∪ I*) = pf(A_I): the Wick coordinates of the row space of
/// (I | A).
template <FieldTract F>
WickFunction<F> wick_coordinates(const SkewMatrix<F>& a) {
  WickFunction<F> psi(a.field(), a.n());
  PfaffianTable<F> table(a);
  for (Mask i = 0; i < (Mask{1} << a.n()); ++i)
    psi.set_value_by_star_set(i, table.pf(i));
  return psi;
}

/// The n x 2n matrix with columns ordered 1 < 1* < 2 < 2* < ... < n < n*.
template <FieldTract F>
class AugmentedMatrix {
 public:
  using Elem = typename F::Elem;

  /// (I | A) in interleaved column order: column i is the i-th unit vector,
  /// column i* is the i-th column of A.
  static AugmentedMatrix from_skew(const SkewMatrix<F>& a) {
    AugmentedMatrix m(a.field(), a.n());
    for (int r = 1; r <= a.n(); ++r) {
      for (int i = 1; i <= a.n(); ++i) {
        m.set(r, Element{i, false}, r == i ? m.field_.one() : m.field_.zero());
        m.set(r, Element{i, true}, a.at(r, i));
      }
    }
    return m;
  }

  AugmentedMatrix(F field, int n)
      : field_(std::move(field)),
        n_(n),
        m_(std::size_t(n) * 2 * n, field_.zero()) {
    if (n < 1 || n > kMaxGroundSize)
      throw InvalidInput("matrix size out of range");
  }

  int n() const { return n_; }
  const F& field() const { return field_; }

  const Elem& entry(int row, Element col) const {
    return m_[(row - 1) * 2 * n_ + col.rank()];
  }
  void set(int row, Element col, Elem v) {
    m_[(row - 1) * 2 * n_ + col.rank()] = std::move(v);
  }

  /// Swap the columns i and i*; maps OG+ basis matrices to OG- ones.
  AugmentedMatrix with_pair_swapped(int index) const {
    AugmentedMatrix out = *this;
    for (int r = 1; r <= n_; ++r) {
      Element u{index, false};
      Elem tmp = out.entry(r, u);
      out.set(r, u, out.entry(r, u.star()));
      out.set(r, u.star(), std::move(tmp));
    }
    return out;
  }

  /// Whether the row space is isotropic for <X,Y> = Σ X(i)Y(i*) + X(i*)Y(i).
  bool is_isotropic() const {
    for (int r = 1; r <= n_; ++r) {
      for (int s = r; s <= n_; ++s) {
        Elem acc = field_.zero();
        for (int i = 1; i <= n_; ++i) {
          Element u{i, false};
          acc = field_.add(acc, field_.mul(entry(r, u), entry(s, u.star())));
          acc = field_.add(acc, field_.mul(entry(r, u.star()), entry(s, u)));
        }
        if (!field_.is_zero(acc)) return false;
      }
    }
    return true;
  }

 private:
  F field_;
  int n_;
  std::vector<Elem> m_;
};

/// Plücker coordinate p(V)(I) = det of the column submatrix indexed by I.
template <FieldTract F>
typename F::Elem plucker(const AugmentedMatrix<F>& aug,
                         const SignedSubset& cols) {
  if (cols.size() != aug.n())
    throw InvalidInput("Plücker coordinate needs an n-subset of columns");
  const F& f = aug.field();
  std::vector<typename F::Elem> sub;
  sub.reserve(std::size_t(aug.n()) * aug.n());
  auto elems = cols.elements();
  for (int r = 1; r <= aug.n(); ++r)
    for (Element e : elems) sub.push_back(aug.entry(r, e));
  return determinant_bareiss(f, std::move(sub), aug.n());
}

/// The restricted Plücker coordinates: p(V) tabulated over 𝒯_n ∪ 𝒜_n.
template <FieldTract F>
RgpFunction<F> restricted_plucker(const AugmentedMatrix<F>& aug) {
  RgpFunction<F> phi(aug.field(), aug.n());
  for (const auto& s : phi.domain()) phi.set_value(s, plucker(aug, s));
  return phi;
}

/// The Cayley identities: det = pf^2 on principal submatrices and the
/// almost-principal factorization in both parity branches.
struct CayleyWitness {
  Mask subset = 0;
  int i = 0, j = 0;
  std::string identity;  // "principal" or "almost-principal"
};

struct CayleyReport {
  bool ok = true;
  std::optional<CayleyWitness> witness;
};

template <FieldTract F>
CayleyReport check_cayley(const SkewMatrix<F>& a) {
  const F& f = a.field();
  const int n = a.n();
  PfaffianTable<F> table(a);

  auto submatrix_det = [&](const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    std::vector<typename F::Elem> sub;
    sub.reserve(rows.size() * cols.size());
    for (int r : rows)
      for (int c : cols) sub.push_back(a.at(r, c));
    return determinant_bareiss(f, std::move(sub),
                               static_cast<int>(rows.size()));
  };

  for (Mask subset = 0; subset < (Mask{1} << n); ++subset) {
    auto idx = detail::mask_indices(subset, n);
    if (idx.size() % 2 == 0) {
      const auto& p = table.pf(subset);
      if (!f.eq(submatrix_det(idx, idx), f.mul(p, p)))
        return {false, CayleyWitness{subset, 0, 0, "principal"}};
    }
    for (int i = 1; i <= n; ++i) {
      if (subset & (Mask{1} << (i - 1))) continue;
      for (int j = 1; j <= n; ++j) {
        if (j == i || (subset & (Mask{1} << (j - 1)))) continue;
        auto rows = detail::mask_indices(subset | (Mask{1} << (i - 1)), n);
        auto cols = detail::mask_indices(subset | (Mask{1} << (j - 1)), n);
        typename F::Elem lhs = submatrix_det(rows, cols);
        typename F::Elem rhs;
        if (idx.size() % 2 == 0) {
          Mask both = subset | (Mask{1} << (i - 1)) | (Mask{1} << (j - 1));
          rhs = signed_by(f, i > j ? 1 : 0,
                          f.mul(table.pf(subset), table.pf(both)));
        } else {
          rhs = f.mul(table.pf(subset | (Mask{1} << (i - 1))),
                      table.pf(subset | (Mask{1} << (j - 1))));
        }
        if (!f.eq(lhs, rhs))
          return {false, CayleyWitness{subset, i, j, "almost-principal"}};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// The linear relations (*) cutting out the two spinor components.

enum class Component { plus, minus };

struct LinearRelationWitness {
  SignedSubset basis;
  int i = 0, j = 0;        // 0,0 means the parity-vanishing clause
  std::string clause;      // "exchange" or "vanishing"
};

struct LinearRelationReport {
  bool ok = true;
  std::optional<LinearRelationWitness> witness;
};

/// For the plus component: p(B minus {i,i*} plus {j,j*}) must equal
/// (-1)^m p(B plus {i,i*} minus {j,j*}) with m = [i ∈ B] + [j ∈ B] for
/// every B ∈ 𝒯_n^0 and i != j, and
/// p(B) = 0 on 𝒯_n^1. Roles of the parity classes swap for the minus
/// component. Throws NotIsotropic if the row space is not isotropic.
template <FieldTract F>
LinearRelationReport check_linear_relations(const AugmentedMatrix<F>& aug,
                                            Component component) {
  if (!aug.is_isotropic())
    throw NotIsotropic("row space fails the isotropy precondition");
  const F& f = aug.field();
  const int n = aug.n();
  int sigma = component == Component::plus ? 0 : 1;

  for (const auto& b : enumerate_transversals(n, 1 - sigma)) {
    if (!f.is_zero(plucker(aug, b)))
      return {false, LinearRelationWitness{b, 0, 0, "vanishing"}};
  }
  for (const auto& b : enumerate_transversals(n, sigma)) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        SignedSubset lhs(n, (b.bits() & ~pair_mask(i)) | pair_mask(j));
        SignedSubset rhs(n, (b.bits() & ~pair_mask(j)) | pair_mask(i));
        int m = b.contains({i, false}) + b.contains({j, false});
        if (!f.eq(plucker(aug, lhs), signed_by(f, m, plucker(aug, rhs))))
          return {false, LinearRelationWitness{b, i, j, "exchange"}};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Pfaffian positivity (rational matrices only).

enum class PositivityMode { positive, nonnegative };

struct PositivityEquivalence {
  bool pf_side = false;
  bool minor_side = false;
};

/// pf_side: every even principal Pfaffian is > 0 (resp. >= 0).
/// minor_side: every odd-sized top-right almost-principal determinant
/// det A[I∪{i}, I∪{j}] with |I| even, i < j (both outside I) is > 0
/// (resp. >= 0). The two booleans agree for skew-symmetric real matrices.
inline PositivityEquivalence pfaffian_positivity_equivalence(
    const SkewMatrix<RationalField>& a, PositivityMode mode) {
  const RationalField f;
  const int n = a.n();
  PfaffianTable<RationalField> table(a);
  auto admissible = [&](const Rational& x) {
    return mode == PositivityMode::positive ? x > 0 : x >= 0;
  };

  PositivityEquivalence out;
  out.pf_side = true;
  for (Mask subset = 0; subset < (Mask{1} << n); ++subset) {
    if (std::popcount(subset) % 2) continue;
    if (!admissible(table.pf(subset))) {
      out.pf_side = false;
      break;
    }
  }

  auto submatrix_det = [&](const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    std::vector<Rational> sub;
    for (int r : rows)
      for (int c : cols) sub.push_back(a.at(r, c));
    return determinant_bareiss(f, std::move(sub),
                               static_cast<int>(rows.size()));
  };
  out.minor_side = true;
  for (Mask subset = 0; subset < (Mask{1} << n) && out.minor_side; ++subset) {
    if (std::popcount(subset) % 2) continue;
    for (int i = 1; i <= n && out.minor_side; ++i) {
      if (subset & (Mask{1} << (i - 1))) continue;
      for (int j = i + 1; j <= n; ++j) {
        if (subset & (Mask{1} << (j - 1))) continue;
        auto rows = detail::mask_indices(subset | (Mask{1} << (i - 1)), n);
        auto cols = detail::mask_indices(subset | (Mask{1} << (j - 1)), n);
        if (!admissible(submatrix_det(rows, cols))) {
          out.minor_side = false;
          break;
        }
      }
    }
  }
  return out;
}

/// M(A) △ R: bases are the transversals ([n] \ X) ∪ X* with A_X
/// nonsingular, twisted by R.
template <FieldTract F>
OrthogonalMatroid matroid_from_matrix(const SkewMatrix<F>& a, Mask twist_set) {
  PfaffianTable<F> table(a);
  std::vector<SignedSubset> bases;
  for (Mask x = 0; x < (Mask{1} << a.n()); ++x) {
    if (a.field().is_zero(table.pf(x))) continue;
    Mask bits = 0;
    for (int i = 1; i <= a.n(); ++i)
      bits |= (x & (Mask{1} << (i - 1))) ? Element{i, true}.bit()
                                         : Element{i, false}.bit();
    bases.emplace_back(a.n(), bits);
  }
  return OrthogonalMatroid::from_bases(a.n(), std::move(bases))
      .twist(twist_set);
}

}  // namespace omt
