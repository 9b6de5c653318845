#include "archfe/hodge.hpp"

#include <algorithm>
#include <sstream>

#include "archfe/exact.hpp"

namespace archfe {

char eps_char(Eps e) noexcept { return e == Eps::Plus ? '+' : '-'; }

SimplePiece SimplePiece::pq(std::int64_t p, std::int64_t q) {
  if (!(p < q)) throw std::invalid_argument("M(p,q) requires p < q");
  return SimplePiece(Kind::PQ, p, q, Eps::Plus);
}

SimplePiece SimplePiece::mid(std::int64_t p, Eps eps) { return SimplePiece(Kind::Mid, p, p, eps); }

int SimplePiece::frobenius_sign() const noexcept { return eps_value(eps_) * neg_one_pow(p_); }

std::string SimplePiece::to_string() const {
  if (is_pq()) return "M(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  return "M(" + std::to_string(p_) + "," + eps_char(eps_) + ")";
}

HodgeInvariants& HodgeInvariants::operator+=(const HodgeInvariants& other) {
  d_plus += other.d_plus;
  d_minus += other.d_minus;
  t_H += other.t_H;
  dim += other.dim;
  for (const auto& [j, hj] : other.h) {
    auto& slot = h[j];
    slot += hj;
    if (slot == 0) h.erase(j);
  }
  return *this;
}

// ---------------------------------------------------------------------------

RHodgeStructure& RHodgeStructure::add(const SimplePiece& piece, std::int64_t count) {
  if (count < 0) throw HodgeError(HodgeError::Code::BadMultiplicity, "negative multiplicity");
  if (piece.weight() != weight_) {
    throw HodgeError(HodgeError::Code::WeightClash, piece.to_string() + " has weight " +
                                                         std::to_string(piece.weight()) + ", structure has weight " +
                                                         std::to_string(weight_));
  }
  if (count == 0) return *this;
  pieces_[piece] = checked_add(multiplicity(piece), count);
  return *this;
}

std::int64_t RHodgeStructure::dim() const noexcept {
  std::int64_t d = 0;
  for (const auto& [piece, mult] : pieces_) d += piece.dim() * mult;
  return d;
}

std::int64_t RHodgeStructure::multiplicity(const SimplePiece& piece) const noexcept {
  auto it = pieces_.find(piece);
  return it == pieces_.end() ? 0 : it->second;
}

std::int64_t RHodgeStructure::hodge_number(std::int64_t p, std::int64_t q) const noexcept {
  if (p + q != weight_) return 0;
  if (p == q) {
    return multiplicity(SimplePiece::mid(p, Eps::Plus)) + multiplicity(SimplePiece::mid(p, Eps::Minus));
  }
  return multiplicity(SimplePiece::pq(std::min(p, q), std::max(p, q)));
}

RHodgeStructure operator+(const RHodgeStructure& a, const RHodgeStructure& b) {
  if (a.empty()) {
    if (b.empty() && a.weight_ != b.weight_) {
      throw HodgeError(HodgeError::Code::WeightClash, "direct sum of structures of different weights");
    }
    return b;
  }
  RHodgeStructure r = a;
  for (const auto& [piece, mult] : b.pieces_) r.add(piece, mult);
  return r;
}

std::string RHodgeStructure::to_string() const {
  std::ostringstream os;
  os << "w=" << weight_ << " {";
  bool first = true;
  for (const auto& [piece, mult] : pieces_) {
    if (!first) os << ", ";
    first = false;
    if (mult != 1) os << mult << "*";
    os << piece.to_string();
  }
  os << "}";
  return os.str();
}

RHodgeStructure from_hodge_numbers(std::int64_t w,
                                   const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& hpq,
                                   std::optional<std::int64_t> mid_plus, std::optional<std::int64_t> mid_minus) {
  using Code = HodgeError::Code;
  const bool even = w % 2 == 0;
  if (!even && (mid_plus || mid_minus)) {
    throw HodgeError(Code::MidForOddWeight, "middle multiplicities supplied for odd weight " + std::to_string(w));
  }
  if (mid_plus.value_or(0) < 0 || mid_minus.value_or(0) < 0) {
    throw HodgeError(Code::BadMultiplicity, "negative middle multiplicity");
  }

  for (const auto& [pq, h] : hpq) {
    const auto [p, q] = pq;
    if (h < 0) throw HodgeError(Code::BadMultiplicity, "negative Hodge number");
    if (h != 0 && p + q != w) {
      throw HodgeError(Code::WrongWeight, "h^{" + std::to_string(p) + "," + std::to_string(q) +
                                              "} lies off the weight line p+q=" + std::to_string(w));
    }
    if (p != q) {
      auto mirror = hpq.find({q, p});
      if (mirror != hpq.end() && mirror->second != h) {
        throw HodgeError(Code::Asymmetric, "h^{" + std::to_string(p) + "," + std::to_string(q) +
                                               "} != h^{" + std::to_string(q) + "," + std::to_string(p) + "}");
      }
    }
  }

  RHodgeStructure m(w);
  for (const auto& [pq, h] : hpq) {
    const auto [p, q] = pq;
    if (p >= q || h == 0) continue;
    m.add(SimplePiece::pq(p, q), h);
  }
  // Pairs listed only as (q,p) with q > p.
  for (const auto& [pq, h] : hpq) {
    const auto [p, q] = pq;
    if (p <= q || h == 0 || hpq.count({q, p})) continue;
    m.add(SimplePiece::pq(q, p), h);
  }

  if (even) {
    const auto half = w / 2;
    const auto plus = mid_plus.value_or(0);
    const auto minus = mid_minus.value_or(0);
    auto diag = hpq.find({half, half});
    if (diag != hpq.end() && diag->second != plus + minus) {
      throw HodgeError(Code::DiagonalMismatch, "h^{p,p}=" + std::to_string(diag->second) +
                                                   " but mid_plus + mid_minus = " + std::to_string(plus + minus));
    }
    m.add(SimplePiece::mid(half, Eps::Plus), plus);
    m.add(SimplePiece::mid(half, Eps::Minus), minus);
  }
  return m;
}

// ---------------------------------------------------------------------------

HodgeInvariants invariants(const SimplePiece& piece) {
  HodgeInvariants inv;
  inv.dim = piece.dim();
  inv.t_H = piece.weight();
  if (piece.is_pq()) {
    inv.d_plus = 1;
    inv.d_minus = 1;
    inv.h[piece.p()] = 1;
    inv.h[piece.q()] = 1;
  } else {
    (piece.frobenius_sign() > 0 ? inv.d_plus : inv.d_minus) = 1;
    inv.h[piece.p()] = 1;
    inv.t_H = piece.p();
  }
  return inv;
}

HodgeInvariants invariants(const RHodgeStructure& m) {
  HodgeInvariants total;
  for (const auto& [piece, mult] : m.pieces()) {
    HodgeInvariants one = invariants(piece);
    one.d_plus *= mult;
    one.d_minus *= mult;
    one.t_H = checked_mul(one.t_H, mult);
    one.dim *= mult;
    for (auto& [j, hj] : one.h) hj *= mult;
    total += one;
  }
  return total;
}

SimplePiece twist(const SimplePiece& piece, std::int64_t n) {
  if (piece.is_pq()) return SimplePiece::pq(checked_add(piece.p(), -n), checked_add(piece.q(), -n));
  return SimplePiece::mid(checked_add(piece.p(), -n), piece.eps());
}

RHodgeStructure twist(const RHodgeStructure& m, std::int64_t n) {
  RHodgeStructure r(checked_add(m.weight(), checked_mul(-2, n)));
  for (const auto& [piece, mult] : m.pieces()) r.add(twist(piece, n), mult);
  return r;
}

SimplePiece dual_twist(const SimplePiece& piece) {
  if (piece.is_pq()) return SimplePiece::pq(-piece.q() - 1, -piece.p() - 1);
  return SimplePiece::mid(-piece.p() - 1, piece.eps());
}

RHodgeStructure dual_twist(const RHodgeStructure& m) {
  RHodgeStructure r(checked_add(-m.weight(), -2));
  for (const auto& [piece, mult] : m.pieces()) r.add(dual_twist(piece), mult);
  return r;
}

}  // namespace archfe
