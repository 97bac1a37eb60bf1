#pragma once

// Enumeration oracles over the group and over sequence sets, and the
// coefficientwise verifiers. Left sides come from enumeration, right sides
// from the series engine only.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wreath/bijections.hpp"
#include "wreath/core.hpp"
#include "wreath/sequences.hpp"
#include "wreath/series.hpp"

namespace wreath {

enum class Stat { des, maj, inv, len, col, des_inv, maj_inv, col_inv };

std::string to_string(Stat s);
Stat stat_from_string(const std::string& s);

struct StatBinding {
  Stat stat;
  Variable var;
};

/// Σ over Z_r ≀ S_n of the monomial Π var^{stat(γ)}. Work is split into
/// `threads` contiguous index ranges and merged in order, so the result does
/// not depend on the thread count.
TruncatedSeries dist_table(std::uint32_t r, std::uint32_t n, const OrderSpec& order,
                           const std::vector<StatBinding>& bindings, const SeriesSpace& space,
                           unsigned threads = 1);

/// Largest len over Z_r ≀ S_n (any order): n(n-1)/2 plus, when r > 1, the
/// color term Σ_v (v + r - 2).
std::uint32_t max_len(std::uint32_t r, std::uint32_t n);

struct Witness {
  std::vector<std::string> vars;
  Exponents exponents;
  Integer lhs, rhs;
  nlohmann::json context = nlohmann::json::object();
};

struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::optional<Witness> witness;
  nlohmann::json details = nlohmann::json::object();
  double wall_ms = 0;

  /// Keys sorted; wall_ms only when asked, so default output is byte-stable.
  [[nodiscard]] nlohmann::json to_json(bool include_timing = false) const;
};

struct Sides {
  TruncatedSeries lhs, rhs;
};

/// Records the first mismatch (if any) into `report`; returns true on equality.
bool compare_into(VerificationReport& report, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                  const nlohmann::json& context = nlohmann::json::object());

// --- classical r = 1 identities ----------------------------------------------

/// Σ_π t^des q^maj / Π_{j=0}^n (1 - t q^j) against Σ_k [k+1]_q^n t^k.
Sides carlitz_sides(std::uint32_t n, std::uint32_t t_cap, std::uint32_t q_cap);
VerificationReport verify_carlitz(std::uint32_t n_max, std::uint32_t t_cap, std::uint32_t q_cap);

/// Space (t, q, p, u) with caps (t_cap, derived, n_cap(n_cap-1)/2, n_cap).
Sides gg1_sides(std::uint32_t n_cap, std::uint32_t t_cap);
VerificationReport verify_gg1(std::uint32_t n_cap, std::uint32_t t_cap);

/// One t1^{k1} t2^{k2} coefficient of both sides of a two-sided identity.
struct Cell {
  std::uint32_t k1 = 0, k2 = 0;
  TruncatedSeries lhs, rhs;
};

/// Cells over (q1, q2) with caps (n k_cap, n k_cap).
std::vector<Cell> gg2_cells(std::uint32_t n, std::uint32_t k_cap);
VerificationReport verify_gg2(std::uint32_t n, std::uint32_t k_cap);

// --- colored identities ------------------------------------------------------

/// Fiber of η: Σ_{γ_O(f) = η, max f ≤ max_f} t^{max f} q^{n max f - |f|} against
/// t^{des η} q^{maj η} / Π_{i=0}^{n-1} (1 - t q^i). Needs t_cap ≤ max_f.
Sides fiber_sides(const OrderSpec& order, const ColoredPermutation& eta, std::uint32_t max_f, std::uint32_t t_cap);
VerificationReport verify_fiber_identity(const OrderSpec& order, const ColoredPermutation& eta, std::uint32_t max_f,
                                         std::uint32_t t_cap);

/// Σ_{f with composition n̄} p^{Inv f} a^{col f} against
/// Π_{i=n_0}^{n-1} (1 + Σ_{j≥1} a^j p^{j+i}) · [n; n̄]_p.
Sides lemma43_sides(std::uint32_t r, const Composition& comp, const OrderSpec& order);
VerificationReport verify_lemma43(std::uint32_t r, const Composition& comp, const OrderSpec& order);
/// Every canonical composition of n; stops at the first failure.
VerificationReport verify_lemma43_all(std::uint32_t r, std::uint32_t n, const OrderSpec& order);

/// Space (t, q, p, a, u); caps t_cap, n t + n(n-1)/2, max_len, n(r-1), n_cap.
Sides four_variate_sides(std::uint32_t r, std::uint32_t n_cap, std::uint32_t t_cap, const OrderSpec& order,
                         unsigned threads = 1);
VerificationReport verify_four_variate(std::uint32_t r, std::uint32_t n_cap, std::uint32_t t_cap,
                                       const OrderSpec& order, unsigned threads = 1);

struct SixVariateOptions {
  ColumnSet columns = ColumnSet::as_printed;
  /// A-R unless set; anything else needs `exploratory`.
  std::optional<OrderSpec> order;
  bool exploratory = false;
  unsigned threads = 1;
};

/// Cells over (q1, q2, a, b) with caps (n k1_cap, n k2_cap, n(r-1), n(r-1)).
std::vector<Cell> six_variate_cells(std::uint32_t r, std::uint32_t n, std::uint32_t k1_cap, std::uint32_t k2_cap,
                                    const SixVariateOptions& options = {});
VerificationReport verify_six_variate(std::uint32_t r, std::uint32_t n, std::uint32_t k1_cap, std::uint32_t k2_cap,
                                      const SixVariateOptions& options = {});

/// Direct form over (x, y, z): Σ_{[g;f]} x^{|g|} y^{|f|} z^{col f} against
/// [u^n] Π 1/(1 - u x^i y^j z^m) over the columns matching `rule`.
Sides bipartite_gf_sides(std::uint32_t r, std::uint32_t n, std::uint32_t k1, std::uint32_t k2, BipartiteRule rule);
/// Regrouped form over (q1, q2, a, b): x ↦ q1^{-1}, y ↦ q2^{-1}, z ↦ ab with
/// the q1^{n k1} q2^{n k2} prefactor, against extract_u_coefficient_laurent.
Sides bipartite_regrouped_sides(std::uint32_t r, std::uint32_t n, std::uint32_t k1, std::uint32_t k2,
                                BipartiteRule rule);
VerificationReport verify_bipartite_gf(std::uint32_t r, std::uint32_t n, std::uint32_t k1, std::uint32_t k2,
                                       BipartiteRule rule = BipartiteRule::as_defined);

/// The column set whose geometric product counts members under `rule`.
ColumnSet columns_for(BipartiteRule rule);

/// Parameter block describing an order, shared by reports.
nlohmann::json describe_order(const OrderSpec& order);

}  // namespace wreath
