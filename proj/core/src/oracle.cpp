#include "hochq/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

namespace {

using KeyIndex = std::map<CochainKey, int>;

KeyIndex index_of(const std::vector<CochainKey>& basis) {
  KeyIndex out;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) out.emplace(basis[k], k);
  return out;
}

int lookup(const KeyIndex& index, const CochainKey& key) {
  auto it = index.find(key);
  if (it == index.end()) throw StructuralError("image key left the graded piece");
  return it->second;
}

struct Piece {
  std::vector<std::vector<CochainKey>> basis;  // by degree 0..N
  // diff[m] : K^{m-1} -> K^m for m = 0..N+1; diff[0] and diff[N+1] are empty maps.
  std::vector<FieldMatrix> diff;
};

Piece build_piece(const QInstance& inst, int g, const Signature& gamma, const Specialization& s,
                  const OmegaFn& omega) {
  const int n = inst.n();
  Piece p;
  for (int m = 0; m <= n; ++m) p.basis.push_back(graded_piece_basis(g, gamma, m));
  auto size = [&](int m) { return m < 0 || m > n ? 0 : static_cast<int>(p.basis[m].size()); };
  for (int m = 0; m <= n + 1; ++m) {
    if (m == 0 || m == n + 1) {
      p.diff.emplace_back(s.field, size(m), size(m - 1));
    } else {
      p.diff.push_back(piece_differential(inst, g, gamma, m, s, omega));
    }
  }
  return p;
}

std::vector<int> dims_from(const Piece& p) {
  const int n = static_cast<int>(p.basis.size()) - 1;
  std::vector<int> ranks(n + 2, 0);
  for (int m = 1; m <= n; ++m) ranks[m] = rank(p.diff[m]);
  std::vector<int> dims(n + 1);
  for (int m = 0; m <= n; ++m) {
    dims[m] = static_cast<int>(p.basis[m].size()) - ranks[m + 1] - ranks[m];
  }
  return dims;
}

// First degree m at which H_{m+1} D_{m+1} + D_m H_m != I, or -1.
int homotopy_failure(const QInstance& inst, int g, const Signature& gamma, const Piece& p,
                     const Specialization& s) {
  const int n = inst.n();
  std::vector<FieldMatrix> h;  // h[m] : K^m -> K^{m-1}, m = 0..N+1
  for (int m = 0; m <= n + 1; ++m) {
    if (m == n + 1) {
      h.emplace_back(s.field, static_cast<int>(p.basis[n].size()), 0);
    } else {
      h.push_back(piece_homotopy(inst, g, gamma, m, s));
    }
  }
  for (int m = 0; m <= n; ++m) {
    const int k = static_cast<int>(p.basis[m].size());
    FieldMatrix lhs = h[m + 1] * p.diff[m + 1];
    if (m > 0) lhs += p.diff[m] * h[m];
    if (!(lhs == FieldMatrix::identity(s.field, k))) return m;
  }
  return -1;
}

std::int64_t next_prime_seed(const Specialization& s) {
  const std::int64_t m = s.group.torsion_order;
  return s.target_order / m + 1;
}

}  // namespace

std::string format_signature(const Signature& gamma) {
  std::string out = "(";
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gamma[i]);
  }
  return out + ")";
}

std::int64_t required_bound(const QInstance& inst, int degree_cap) {
  std::int64_t qmax = 0;
  for (int i = 0; i < inst.n(); ++i) {
    for (int j = 0; j < inst.n(); ++j) qmax = std::max(qmax, inst.q(i, j).max_abs_free());
  }
  return std::max<std::int64_t>(1, (degree_cap + inst.n()) * qmax);
}

FieldMatrix piece_differential(const QInstance& inst, int g, const Signature& gamma, int m,
                               const Specialization& s, const OmegaFn& omega) {
  const auto src = graded_piece_basis(g, gamma, m - 1);
  const auto dst = graded_piece_basis(g, gamma, m);
  const auto index = index_of(dst);
  FieldMatrix out(s.field, static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (int c = 0; c < static_cast<int>(src.size()); ++c) {
    const auto& key = src[c];
    for (int i = 0; i < inst.n(); ++i) {
      if (key.beta.bits[i] == 1) continue;
      const auto w = omega(inst, g, key.alpha, key.beta, i);
      if (w.is_zero()) continue;
      CochainKey target = key;
      ++target.alpha.exps[i];
      target.beta.bits[i] = 1;
      out(lookup(index, target), c) += specialize(w, s, BoundCheck::kZeroTest);
    }
  }
  return out;
}

FieldMatrix piece_homotopy(const QInstance& inst, int g, const Signature& gamma, int m,
                           const Specialization& s) {
  const int n = inst.n();
  const auto src = graded_piece_basis(g, gamma, m);
  const auto dst = m == 0 ? std::vector<CochainKey>{} : graded_piece_basis(g, gamma, m - 1);
  const auto index = index_of(dst);
  FieldMatrix out(s.field, static_cast<int>(dst.size()), static_cast<int>(src.size()));
  if (m == 0 || m > n) return out;
  for (int c = 0; c < static_cast<int>(src.size()); ++c) {
    const FieldCochain single{{src[c], s.field->one()}};
    for (const auto& [key, v] : homotopy_h(inst, g, gamma, m, single, s)) {
      out(lookup(index, key), c) += v;
    }
  }
  return out;
}

std::vector<int> graded_cohomology_dims(const QInstance& inst, int g, const Signature& gamma,
                                        const Specialization& s, const OmegaFn& omega) {
  return dims_from(build_piece(inst, g, gamma, s, omega));
}

bool verify_homotopy_identity(const QInstance& inst, int g, const Signature& gamma,
                              const Specialization& s) {
  if (in_C_g(inst, g, gamma)) throw PreconditionError("homotopy requires gamma outside C_g");
  return homotopy_failure(inst, g, gamma, build_piece(inst, g, gamma, s, omega_big), s) < 0;
}

ProjectorResult averaging_projector(const QInstance& inst, int m, int internal_degree,
                                    const Specialization& s) {
  std::vector<CochainKey> cell;
  for (int g = 0; g < inst.group.size(); ++g) {
    for (auto& c : hh_basis(inst, g, m, internal_degree)) {
      if (c.key.alpha.degree() == internal_degree) cell.push_back(std::move(c.key));
    }
  }
  const auto index = index_of(cell);
  const int k = static_cast<int>(cell.size());
  const int n = inst.n();
  FieldMatrix p(s.field, k, k);
  for (int h = 0; h < inst.group.size(); ++h) {
    const int h_inv = inst.group.inverse(h);
    for (int c = 0; c < k; ++c) {
      const auto& key = cell[c];
      const auto left = skew_mul(inst, {Monomial::one(n), h}, {key.alpha, key.g});
      const auto both = skew_mul(inst, {left.monomial, left.g}, {Monomial::one(n), h_inv});
      ScalarExponent scalar = left.scalar * both.scalar;
      for (int i : key.beta.positions()) scalar /= inst.group.lambda(h, i);
      const CochainKey target{both.g, both.monomial, key.beta};
      p(lookup(index, target), c) += specialize(scalar, s);
    }
  }
  p *= Rational(1, inst.group.size());
  ProjectorResult out;
  out.cell_dim = k;
  out.rank = rank(p);
  out.idempotent = p * p == p;
  return out;
}

const PieceRecord* VerificationReport::first_failure() const {
  for (const auto& r : pieces) {
    if (!r.match) return &r;
  }
  return nullptr;
}

VerificationReport verify_instance(const QInstance& inst, int degree_cap,
                                   const VerifyOptions& options) {
  const int n = inst.n();
  const OmegaFn omega = options.omega ? *options.omega : OmegaFn(omega_big);
  VerificationReport report;
  report.n = n;
  report.group_size = inst.group.size();
  report.degree_cap = degree_cap;
  report.seed = options.seed;
  report.bound = required_bound(inst, degree_cap);
  const auto s = choose_specialization(inst.scalars, report.bound);
  report.field_order = s.target_order;
  std::optional<Specialization> s2;
  if (options.second_specialization && inst.scalars.free_rank > 0) {
    s2 = choose_specialization(inst.scalars, report.bound, next_prime_seed(s));
    report.second_field_order = s2->target_order;
  }

  const auto signatures = enumerate_signatures(n, degree_cap);
  std::vector<std::size_t> outside;
  for (int g = 0; g < inst.group.size(); ++g) {
    for (const auto& gamma : signatures) {
      if (!in_C_g(inst, g, gamma)) outside.push_back(report.pieces.size());
      report.pieces.push_back({g, gamma, {}, {}, {}, true, false, true, true, -1});
    }
  }
  std::vector<bool> sampled(report.pieces.size(), options.homotopy_samples < 0);
  if (options.homotopy_samples >= 0) {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = outside.size(); i > 1; --i) std::swap(outside[i - 1], outside[rng() % i]);
    const auto take = std::min<std::size_t>(outside.size(), options.homotopy_samples);
    for (std::size_t k = 0; k < take; ++k) sampled[outside[k]] = true;
  }

  auto fail_at = [](PieceRecord& r, int m) {
    r.match = false;
    if (r.failed_degree < 0 || m < r.failed_degree) r.failed_degree = m;
  };

  for (std::size_t idx = 0; idx < report.pieces.size(); ++idx) {
    auto& rec = report.pieces[idx];
    const bool in_c = in_C_g(inst, rec.g, rec.gamma);
    const Piece piece = build_piece(inst, rec.g, rec.gamma, s, omega);
    for (int m = 0; m <= n; ++m) {
      rec.dims_enumerated.push_back(in_c ? static_cast<int>(piece.basis[m].size()) : 0);
    }
    for (int m = 1; m < n; ++m) {
      if (!(piece.diff[m + 1] * piece.diff[m]).is_zero()) {
        rec.complex_ok = false;
        fail_at(rec, m);
      }
    }
    rec.dims_oracle = dims_from(piece);
    if (s2) rec.dims_second = dims_from(build_piece(inst, rec.g, rec.gamma, *s2, omega));
    for (int m = 0; m <= n; ++m) {
      if (rec.dims_oracle[m] != rec.dims_enumerated[m]) fail_at(rec, m);
      if (s2 && rec.dims_second[m] != rec.dims_oracle[m]) fail_at(rec, m);
    }
    if (!in_c && sampled[idx]) {
      rec.homotopy_checked = true;
      const int bad = homotopy_failure(inst, rec.g, rec.gamma, piece, s);
      if (bad >= 0) {
        rec.homotopy_ok = false;
        fail_at(rec, bad);
      }
    }
  }

  for (int g = 0; g < inst.group.size(); ++g) {
    for (int m = 0; m <= n; ++m) {
      std::size_t count = 0;
      for (const auto& gamma : signatures) {
        if (!in_C_g(inst, g, gamma)) continue;
        for (const auto& key : graded_piece_basis(g, gamma, m)) {
          count += key.alpha.degree() <= degree_cap;
        }
      }
      if (count != hh_basis(inst, g, m, degree_cap).size()) report.table_ok = false;
    }
  }

  if (options.projector_checks) {
    for (int m = 0; m <= n; ++m) {
      const auto inv = invariant_basis(inst, m, degree_cap);
      for (int d = 0; d <= degree_cap; ++d) {
        CellRecord cell{m, d, 0, {}, true};
        cell.enumerated = static_cast<int>(std::count_if(
            inv.begin(), inv.end(), [d](const auto& c) { return c.key.alpha.degree() == d; }));
        cell.projector = averaging_projector(inst, m, d, s);
        cell.match = cell.projector.idempotent && cell.projector.rank == cell.enumerated;
        report.cells.push_back(cell);
      }
    }
  }

  report.pass = report.table_ok &&
                std::all_of(report.pieces.begin(), report.pieces.end(),
                            [](const auto& r) { return r.match; }) &&
                std::all_of(report.cells.begin(), report.cells.end(),
                            [](const auto& c) { return c.match; });
  return report;
}

}  // namespace hochq
