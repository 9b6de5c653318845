// Pure R-Hodge structures over R, kept as multisets of simple pieces.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace archfe {

/// The label of a one-dimensional piece M_{p,eps}. F_inf acts on it by eps * (-1)^p.
enum class Eps : int { Minus = -1, Plus = 1 };

constexpr int eps_value(Eps e) noexcept { return static_cast<int>(e); }
char eps_char(Eps e) noexcept;

/// One of the simple structures: M_{p,q} (p < q, dimension 2) or M_{p,eps}
/// (dimension 1, weight 2p).
class SimplePiece {
 public:
  enum class Kind : int { PQ = 0, Mid = 1 };

  /// M_{p,q}; throws std::invalid_argument unless p < q.
  static SimplePiece pq(std::int64_t p, std::int64_t q);
  static SimplePiece mid(std::int64_t p, Eps eps);

  Kind kind() const noexcept { return kind_; }
  bool is_pq() const noexcept { return kind_ == Kind::PQ; }
  std::int64_t p() const noexcept { return p_; }
  /// For Mid pieces q == p.
  std::int64_t q() const noexcept { return q_; }
  /// Meaningful only for Mid pieces.
  Eps eps() const noexcept { return eps_; }

  std::int64_t weight() const noexcept { return p_ + q_; }
  std::int64_t dim() const noexcept { return is_pq() ? 2 : 1; }
  /// Eigenvalue of F_inf on a Mid piece: eps * (-1)^p.
  int frobenius_sign() const noexcept;

  /// "M(p,q)" or "M(p,+)" / "M(p,-)".
  std::string to_string() const;

  friend auto operator<=>(const SimplePiece&, const SimplePiece&) = default;
  friend bool operator==(const SimplePiece&, const SimplePiece&) = default;

 private:
  SimplePiece(Kind kind, std::int64_t p, std::int64_t q, Eps eps) : kind_(kind), p_(p), q_(q), eps_(eps) {}

  Kind kind_;
  std::int64_t p_;
  std::int64_t q_;
  Eps eps_;
};

class HodgeError : public std::invalid_argument {
 public:
  enum class Code {
    Asymmetric,        // h^{p,q} != h^{q,p}
    WrongWeight,       // an entry off the line p + q = w
    MidForOddWeight,   // middle multiplicities given for odd w
    DiagonalMismatch,  // h^{w/2,w/2} disagrees with mid_plus + mid_minus
    BadMultiplicity,   // negative multiplicity
    WeightClash,       // direct sum or insertion across different weights
  };

  HodgeError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

struct HodgeInvariants {
  std::int64_t d_plus = 0;
  std::int64_t d_minus = 0;
  /// j -> h_j = dim F^j / F^{j+1}; only nonzero entries are stored.
  std::map<std::int64_t, std::int64_t> h;
  std::int64_t t_H = 0;
  std::int64_t dim = 0;

  HodgeInvariants& operator+=(const HodgeInvariants& other);
  friend bool operator==(const HodgeInvariants&, const HodgeInvariants&) = default;
};

/// A pure R-Hodge structure of fixed weight: a finite multiset of simple
/// pieces of that weight. The empty structure is the additive unit.
class RHodgeStructure {
 public:
  using PieceMap = std::map<SimplePiece, std::int64_t>;

  explicit RHodgeStructure(std::int64_t weight = 0) : weight_(weight) {}

  /// Adds `count` copies of `piece`; throws HodgeError on weight mismatch
  /// or negative count. Zero is a no-op.
  RHodgeStructure& add(const SimplePiece& piece, std::int64_t count = 1);

  std::int64_t weight() const noexcept { return weight_; }
  const PieceMap& pieces() const noexcept { return pieces_; }
  bool empty() const noexcept { return pieces_.empty(); }
  std::int64_t dim() const noexcept;
  std::int64_t multiplicity(const SimplePiece& piece) const noexcept;

  /// The Hodge number h^{p,q}. Mid pieces contribute to h^{p,p}.
  std::int64_t hodge_number(std::int64_t p, std::int64_t q) const noexcept;

  /// Direct sum; both operands must share a weight unless one is empty.
  friend RHodgeStructure operator+(const RHodgeStructure& a, const RHodgeStructure& b);

  friend bool operator==(const RHodgeStructure&, const RHodgeStructure&) = default;

  std::string to_string() const;

 private:
  std::int64_t weight_;
  PieceMap pieces_;
};

/// Ingests Hodge numbers. `hpq` maps (p,q) to h^{p,q}; both (p,q) and (q,p)
/// may be listed (they must agree) or only one of them. mid_plus/mid_minus are
/// the multiplicities of M_{w/2,+} and M_{w/2,-} and are only allowed for
/// even w. A supplied diagonal h^{w/2,w/2} must equal their sum.
RHodgeStructure from_hodge_numbers(std::int64_t w,
                                   const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& hpq,
                                   std::optional<std::int64_t> mid_plus = std::nullopt,
                                   std::optional<std::int64_t> mid_minus = std::nullopt);

HodgeInvariants invariants(const SimplePiece& piece);
HodgeInvariants invariants(const RHodgeStructure& m);

/// Tate twist M(n): weight w - 2n, every index shifted by -n, eps labels kept.
SimplePiece twist(const SimplePiece& piece, std::int64_t n);
RHodgeStructure twist(const RHodgeStructure& m, std::int64_t n);

/// M -> M^*(1): M_{p,q} -> M_{-q-1,-p-1}, M_{p,eps} -> M_{-p-1,eps}; weight -w-2.
SimplePiece dual_twist(const SimplePiece& piece);
RHodgeStructure dual_twist(const RHodgeStructure& m);

}  // namespace archfe
