#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cambmin/weyl.hpp"

namespace cambmin {

/*
 * Sorting words, sortability and the associated fans for a fixed Coxeter
 * word c (a permutation of the generators). The scan below works for any
 * symmetrizable type; completeness of the fan is only expected in finite
 * type, so infinite types are always explored up to a length bound.
 */

struct SortingWord {
    // taken letters as (copy of c, generator index), in scan order
    std::vector<std::pair<std::size_t, int>> letters;
    // per scanned copy, the generators of c that were skipped
    std::vector<std::vector<int>> skips;
    bool sortable = false;

    std::vector<int> word() const;  // flattened reduced word
};

// Greedy left-to-right scan of c^infinity: a letter is taken whenever it
// shortens the part of w not yet expressed. The result is the
// lexicographically leftmost reduced subword.
SortingWord c_sorting_word(const CartanData& cd, const std::vector<int>& cox,
                           const WeylElement& w);

// True iff every generator's taken-copies form a prefix: once skipped,
// a letter stays skipped in all later copies.
bool is_c_sortable(const CartanData& cd, const std::vector<int>& cox, const WeylElement& w);

// The n roots -w^(i)(alpha_i), where w^(i) is the prefix of the sorting
// word through the last occurrence of s_i (so -alpha_i when s_i is absent).
// Throws std::invalid_argument when w is not c-sortable.
std::vector<RootVec> cl_c(const CartanData& cd, const std::vector<int>& cox,
                          const WeylElement& w);

enum class ConeSign { kPlus, kMinus };

struct CambrianCone {
    std::vector<Weight> generators;  // n linearly independent weights
    WeylElement source;              // sortable for c (plus) or c^{-1} (minus)
    ConeSign sign = ConeSign::kPlus;
};

// Plus: cone(nu_c(cl_c(w))). Minus: the antipode built from the reversed
// word, cone(-nu_{c^{-1}}(cl_{c^{-1}}(w))). Generator independence is
// checked; dependence would contradict simpliciality and throws.
CambrianCone cambrian_cone(const CartanData& cd, const std::vector<int>& cox,
                           const WeylElement& w, ConeSign sign);

// All c-sortables of length <= bound, breadth-first by length; children are
// made by appending the letters of c in word order, deduplicated by action.
std::vector<WeylElement> enumerate_sortables(const CartanData& cd,
                                             const std::vector<int>& cox,
                                             std::size_t bound);

// Plus cones first, then the minus cones that are not already present as
// point sets (in finite type the two families coincide entirely).
std::vector<CambrianCone> doubled_fan(const CartanData& cd, const std::vector<int>& cox,
                                      std::size_t bound);

struct FanMembership {
    CambrianCone cone;
    std::vector<Rat> coords;  // nonnegative coordinates over the generators
};

// Minimal-length sortable whose cone contains lambda, scanning the plus
// family first and falling back to the minus family. Boundary points (some
// zero coordinates) count as members. nullopt when nothing is found within
// the length bound.
std::optional<FanMembership> fan_membership(const CartanData& cd,
                                            const std::vector<int>& cox,
                                            const Weight& lam, std::size_t bound);

// For w sortable with the first letter s of cox initial: compares the
// generator rays of s(Cone_c(w)) with those of Cone_{scs}(sw), where scs is
// the rotated word. Returns false and fills *why on mismatch.
bool check_cone_reflection(const CartanData& cd, const std::vector<int>& cox,
                           const WeylElement& w, std::string* why = nullptr);

// Exact fan-axiom test for a pair of full-dimensional simplicial cones in
// rank <= 3: their intersection must be a face of both. Returns false and
// fills *why with a witness ray otherwise.
bool cones_meet_in_common_face(const CambrianCone& a, const CambrianCone& b,
                               std::string* why = nullptr);

// Canonical key for deduplicating cones as point sets: the sorted list of
// primitive integer generator rays.
std::vector<std::vector<long>> cone_ray_key(const CambrianCone& cone);

}  // namespace cambmin
