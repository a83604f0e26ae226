#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adem/steenrod.hpp"

namespace adem::pbw {

enum class Mode { Nonrestricted, Restricted };

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

/// Graded dimension profile of a hypothetical g. dims[k] is dim g_k for
/// k = 1..k_max (dims[0] = 0); the parity of g_k is the parity of k.
/// negative_at records the first degree where the PBW induction demanded a
/// negative dimension, which is a contradiction in itself rather than an error.
struct DimProfile {
    int p = 2;
    Mode mode = Mode::Nonrestricted;
    std::vector<long long> dims;
    std::optional<int> negative_at;

    int parity(int k) const { return k & 1; }
    int k_max() const { return static_cast<int>(dims.size()) - 1; }
};

/// Number of PBW monomials of weight k in basis letters of weight < k:
/// odd letters have exponent <= 1; even letters are unbounded in
/// nonrestricted mode and bounded by p - 1 in restricted mode. Computed as
/// [t^k] of the product of the letters' generating functions.
long long monomial_count(const DimProfile& profile, int k);

/// Same count by direct bounded-multiplicity dynamic programming.
long long monomial_count_dp(const DimProfile& profile, int k);

/// dim g_k := dim A(p)_k - d_k, inductively; steenrod_dims[k] = dim A(p)_k
/// for k = 0..k_max.
DimProfile infer_profile(const std::vector<long long>& steenrod_dims, int p, Mode mode, int k_max);

/// Degrees k <= k_max with inferred dim g_k > 0, for odd p.
std::vector<int> minimal_weights(int p, Mode mode, int k_max);

struct Certificate {
    std::string id;
    std::string claim;
    bool pass = false;
    bool load_bearing = false;  // whether the verdict rests on this item
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::string note;
};

struct ObstructionReport {
    int p = 2;
    Mode mode = Mode::Nonrestricted;
    int k_max = 0;
    std::vector<long long> profile;  // inferred dims 0..k_max
    std::optional<int> negative_at;
    std::vector<Certificate> certificates;
    std::string verdict;  // NO_REALISATION or UNRESOLVED

    bool no_realisation() const { return verdict == "NO_REALISATION"; }
};

int default_obstruction_kmax(int p);

/// Runs the graded case analysis for the given prime and enveloping-algebra
/// mode; every certificate is recomputed from steenrod-core at call time.
/// k_max < 0 selects the per-prime default profile depth.
ObstructionReport run_obstruction(int p, Mode mode, int k_max = -1);

}  // namespace adem::pbw
