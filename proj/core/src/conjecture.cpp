#include "subclose/conjecture.hpp"

#include <algorithm>
#include <bit>

namespace subclose {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::LhsLess: return "lhs_less";
    case Verdict::LhsGreater: return "lhs_greater";
  }
  return "?";
}

namespace {

bool is_submaximal(const SchubertIndex& alpha) {
  const int ell = alpha.ell();
  const int m = alpha.m();
  int codim = 0;
  for (int i = 0; i < ell; ++i) codim += (m - ell + 1 + i) - alpha.alpha()[i];
  return codim == 1;
}

}  // namespace

std::optional<std::string> proven_regime(int ell, int m, const std::optional<SchubertIndex>& alpha,
                                         int r) {
  const int big = std::max(ell, m - ell);
  if (!alpha || alpha->is_maximal()) {
    if (r >= 1 && r <= big + 1) return "grassmann-low";
    if (ell == 2 && r == std::max(2, m - 2) + 2) return "grassmann-2m";
    return std::nullopt;
  }
  if (r == 1) return "schubert-min-distance";
  if (is_submaximal(*alpha) && r >= 1 && r <= big) return "schubert-submaximal";
  return std::nullopt;
}

ConjectureHarness::ConjectureHarness(int ell, int m, int q, std::optional<SchubertIndex> alpha,
                                     ConjectureOptions opts)
    : ell_(ell), m_(m), alpha_(std::move(alpha)), opts_(opts) {
  field_ = std::make_unique<FieldTable>(FieldTable::for_order(q));
  if (alpha_) {
    if (alpha_->ell() != ell || alpha_->m() != m)
      throw std::invalid_argument("Schubert index " + alpha_->to_string() +
                                  " does not match (ell,m)");
    points_ = enumerate_schubert(*alpha_, *field_, opts_.points);
    rows_ = alpha_->index_set();
  } else {
    points_ = enumerate_grassmannian(ell, m, *field_, opts_.points);
    rows_ = SubsetIndexer(m, ell).all();
  }
  if (rows_.size() > 64)
    throw std::invalid_argument("conjecture harness supports at most 64 coordinates");

  code_ = std::make_unique<LinearCode>(build_code(*field_, ell, m, points_, rows_));

  const SubsetIndexer idx(m, ell);
  zero_masks_.reserve(points_.size());
  for (const auto& p : points_) {
    Mask z = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (p.coords[idx.index(rows_[i])] == 0) z |= Mask{1} << i;
    zero_masks_.push_back(z);
  }
}

ConjectureReport ConjectureHarness::run(int r) const {
  const int kdim = static_cast<int>(rows_.size());
  if (r < 1 || r > kdim)
    throw std::out_of_range("r = " + std::to_string(r) + " outside [1," + std::to_string(kdim) + "]");
  const BigInt families = binom_ext(kdim, r);
  if (families > opts_.max_families)
    throw BudgetExceeded("coordinate sections of codimension " + std::to_string(r), families,
                         opts_.max_families);

  ConjectureReport rep;
  rep.ell = ell_;
  rep.m = m_;
  rep.q = field_->q();
  if (alpha_) rep.alpha = alpha_->alpha();
  rep.r = r;
  rep.length = static_cast<std::int64_t>(points_.size());
  rep.dimension = kdim;
  rep.d_r = higher_weights_exhaustive(*code_, r, opts_.subcodes);
  rep.proven_regime = proven_regime(ell_, m_, alpha_, r);

  std::int64_t best_k = -1;
  std::int64_t best_section_subclose = -1;
  std::int64_t best_section_any = -1;
  std::vector<int> witness;
  std::vector<Mask> chosen(r);
  for_each_combination(kdim, r, [&](std::span<const int> pos) {
    Mask lambda = 0;
    for (int i = 0; i < r; ++i) {
      chosen[i] = rows_[pos[i]];
      lambda |= Mask{1} << pos[i];
    }
    std::int64_t section = 0;
    for (Mask z : zero_masks_)
      if ((lambda & ~z) == 0) ++section;
    best_section_any = std::max(best_section_any, section);

    const std::int64_t kval = k_lambda(chosen);
    if (kval > best_k) {
      best_k = kval;
      rep.subclose_families = 0;
      best_section_subclose = -1;
    }
    if (kval == best_k) {
      ++rep.subclose_families;
      if (section > best_section_subclose) {
        best_section_subclose = section;
        witness.assign(pos.begin(), pos.end());
      }
    }
    return true;
  });

  std::vector<Mask> members;
  for (int p : witness) members.push_back(rows_[p]);
  rep.witness_lambda = SubsetFamily(m_, ell_, std::move(members));
  rep.subclose_k = best_k;
  rep.rhs_subclose = rep.length - best_section_subclose;
  rep.rhs_all_coordinate = rep.length - best_section_any;
  rep.verdict = rep.d_r == rep.rhs_subclose  ? Verdict::Equal
                : rep.d_r < rep.rhs_subclose ? Verdict::LhsLess
                                             : Verdict::LhsGreater;
  return rep;
}

ConjectureReport verify_conjecture(int ell, int m, int q, const std::optional<SchubertIndex>& alpha,
                                   int r, const ConjectureOptions& opts) {
  return ConjectureHarness(ell, m, q, alpha, opts).run(r);
}

}  // namespace subclose
