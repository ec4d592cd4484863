#ifndef EBC_CLASSICAL_HPP
#define EBC_CLASSICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ebc/bundle.hpp"

namespace ebc {

enum class FormKind { symmetric, alternating };

/// Group interpretation of a formed bundle. SOOdd/SOEven are the unliftable
/// (w2 != 0) orthogonal cases; Spin marks the liftable ones; PSp/PSO are the
/// conformal cases with value line O(p0).
enum class GroupKind { Sp, SOOdd, SOEven, Spin, PSp, PSO };

FormKind form_kind_of(GroupKind g);
/// Value line as a twist: degree 0 (trivial) or degree 1 at p0.
long long value_degree_of(GroupKind g);
std::string group_name(GroupKind g, long long rank);
/// Parse "Sp4", "SO7", "Spin8", "PSp6", "PSO8" into kind plus vector rank.
std::pair<GroupKind, long long> parse_group_name(const std::string& name);

/// One pairing block of the layout.
struct Summand {
  enum Kind { DualPair, SelfPaired, CombinedPair } kind;
  std::vector<int> atom_indices; // 2 for pairs, 1 for singles
};

/// Semistable bundle with a fixed symmetric/alternating pairing layout. The
/// form is never a matrix: kind plus layout is a complete invariant.
struct FormedBundle {
  BundleExpr expr;
  GroupKind group;
  std::vector<Summand> layout;

  /// Infer the layout (duality matching plus group-specific joins) and
  /// check the structural invariants; parity gates are checked later.
  static FormedBundle make(BundleExpr expr, GroupKind group);
};

/// Nondegenerate forms on I_n with values in O: alternating iff n even,
/// symmetric iff n odd.
bool form_parity_In(long long d, FormKind kind);

/// Nondegenerate forms I_d(W_2(q)) x I_d(W_2(q)) -> O(p0). q is the
/// Abel-Jacobi point of det W_2; q = p0 is the origin.
bool form_parity_IdW2(const TorsionPoint& q, long long d, FormKind kind);

/// Closed-form dimensions around I_n with a fixed form.
struct BuiltinDims {
  long long autQ_even;  // dim Aut^Q I_{2n}
  long long autQ_odd;   // dim Aut^Q I_{2n+1}
  long long h0_alt_even, h0_sym_even;  // h0 of wedge^2 / Sym^2 I_{2n}
  long long h0_alt_odd, h0_sym_odd;    // same for I_{2n+1}
};
BuiltinDims builtin_dims(long long n);

struct LedgerEntry {
  std::string label;
  Rat contribution;
};

struct AutQReport {
  long long dim = 0;
  bool is_regular = false;
  std::optional<bool> abelian; // nullopt: not decided by the known criteria
  std::vector<LedgerEntry> ledger;
};

/// Aut^Q dimension by the contribution ledger; throws DomainError when a
/// self-paired summand fails its parity gate.
AutQReport autQ_dim(const FormedBundle& fb);

struct RegularCheck {
  bool valid = false;
  std::string branch;    // which classification clause matched
  std::string diagnosis; // violated clause when invalid
};
RegularCheck validate_regular(const FormedBundle& fb);

/// All regular formed bundles for the group of vector rank `rank`, built
/// from torsion points of order <= max_order.
std::vector<FormedBundle> enumerate_regular(GroupKind g, long long rank,
                                            long long max_order);

/// Minimal Aut^Q dimension for the group at the given vector rank.
long long group_minimum(GroupKind g, long long rank);

} // namespace ebc

#endif
