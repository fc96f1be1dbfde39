#pragma once

#include "anticode/bigint.hpp"
#include "anticode/codeset.hpp"
#include "anticode/words.hpp"

#include <optional>
#include <string>

namespace anticode {

/// The structured families this library builds.
///  - F: all-ones prefix of length t, arbitrary weight-(k-t) tail.
///  - A: A_eps with eps = 1 (odd-diameter variant).
///  - A_eps: all-ones prefix of length t, then eps coordinates carrying any
///    nonzero symbol, then a weight-(k-t-eps) tail.
///  - zero_prefix: all-zeros prefix of length t, weight-k tail.
enum class Family { F, A, A_eps, zero_prefix };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

/// Parameters (q, n, k, t, eps) shared by the families. The constructor
/// validates only the shared ranges (2 <= q, 0 <= k <= n, t >= 0 and
/// t <= n, eps >= 0); each family imposes its own constraints on t and
/// eps (F/A/A_eps need k > t and eps <= k - t; zero_prefix needs
/// t <= n - k).
struct FamilyParams {
    int q;
    int n;
    int k;
    int t;
    int eps;

    FamilyParams(int q_, int n_, int k_, int t_, int eps_);

    /// Diameter the family is designed to meet: 2k - 2t - eps.
    int target_diameter() const { return 2 * k - 2 * t - eps; }

    /// Minimum distance of a code this set partners with in the bound:
    /// one more than the target diameter.
    int paired_min_distance() const { return target_diameter() + 1; }

    /// The diameter formula holds when n >= 2k - t - eps.
    bool diameter_applicable() const { return n >= 2 * k - t - eps; }

    bool operator==(const FamilyParams&) const = default;
};

/// |F| = binom(n-t, k-t) (q-1)^{k-t}; more generally for A_eps
/// binom(n-t-eps, k-t-eps) (q-1)^{k-t}. F is the eps = 0 case.
Bigint size_formula(const FamilyParams& p);

/// 2k - 2t - eps when n >= 2k - t - eps; disengaged otherwise.
std::optional<int> diameter_formula(const FamilyParams& p);

/// binom(n-t, k) (q-1)^k words under a zero prefix of length t.
Bigint zero_prefix_size(int q, int t, int k, int n);

/// n - t when n - t <= 2k (and q >= 3); disengaged otherwise.
std::optional<int> zero_prefix_diameter(int q, int t, int k, int n);

/// Materialized families. Every builder checks the enumeration size against
/// `max_words` first and refuses with a resource_limit error beyond it.
CodeSet construct_F(const FamilyParams& p, std::uint64_t max_words = 10'000'000);
CodeSet construct_A_eps(const FamilyParams& p, std::uint64_t max_words = 10'000'000);
CodeSet construct_zero_prefix(int q, int t, int k, int n,
                              std::uint64_t max_words = 10'000'000);

/// Dispatch on the family tag (Family::A forces eps = 1, Family::F eps = 0).
CodeSet construct(Family f, const FamilyParams& p, std::uint64_t max_words = 10'000'000);

/// Size formula for the dispatched family (zero_prefix has its own formula).
Bigint family_size_formula(Family f, const FamilyParams& p);

/// Diameter formula for the dispatched family.
std::optional<int> family_diameter_formula(Family f, const FamilyParams& p);

}  // namespace anticode
