#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bandix/errors.hpp"

namespace bandix {

/// A word in the Artin generators of the braid group on `strands` strands.
/// The letter +i stands for the generator sigma_i (1 <= i <= strands-1),
/// -i for its inverse. An empty word is allowed; its closure is the
/// `strands`-component unlink.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int strands_, std::vector<int> letters_);

    bool operator==(const BraidWord&) const = default;
};

/// Permutation of {0, ..., n-1} given by its image list.
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    int cycle_count() const;
    /// +1 for even permutations, -1 for odd ones.
    int parity_sign() const;

    bool operator==(const Permutation&) const = default;
};

/// Parses a whitespace/comma separated list of signed nonzero integers.
/// Without an override, the strand count is inferred as max|e| + 1
/// (1 for an empty word).
BraidWord parse_braid(std::string_view text,
                      std::optional<int> strands_override = std::nullopt);

/// Permutation induced on strand start positions by the closure of `w`:
/// the composition of the transpositions (i-1, i) for each letter |e| = i,
/// in word order.
Permutation closure_permutation(const BraidWord& w);

/// Number of components of the closed braid (= cycles of the closure
/// permutation).
int closure_components(const BraidWord& w);

/// Sum of letter signs.
int exponent_sum(const BraidWord& w);

/// Deletes adjacent cancelling pairs e, -e until none remain. The strand
/// count is preserved.
BraidWord free_reduce(const BraidWord& w);

/// Renders the letters back into the input grammar ("1 -2 1").
std::string braid_to_string(const BraidWord& w);

}  // namespace bandix
