#pragma once

#include <string>
#include <vector>

#include "aqncc/bin_matrix.hpp"

namespace aqncc {

/// Cyclic difference matrix over Z_v: for every row pair i < j the multiset
/// of coordinate-wise differences mod v covers Z_v exactly once each.
struct Cdm {
    int v = 0;                            // group order (odd prime here)
    std::vector<std::vector<int>> rows;   // mu x v, entries in [0, v)
    bool askew = false;                   // true when the all-zero row is prepended

    int mu() const { return static_cast<int>(rows.size()); }
};

bool is_odd_prime(int p);

/// p x p circulant permutation matrix: row y has its single one at column
/// (x + y) mod p.
BinMatrix circulant(int x, int p);

/// The multiplicative-row family: rows (0, a, 2a, ..., (p-1)a) mod p for
/// a = 1..p-1; with askew the all-zero row is prepended, giving a (p,p) CDM.
Cdm cdm_build(int p, bool askew);

/// Exhaustive difference check; throws on malformed shapes or entries.
bool cdm_verify(const Cdm& m);

/// One CDM row expanded into p circulant blocks: a p x p^2 binary matrix.
/// `generator` is the multiplier a of the row it came from (0 for the
/// prepended all-zero row), so layers can be named the way rebalancing
/// reports them.
struct Layer {
    BinMatrix mat;
    int generator = 0;
};

/// Replace every entry x of a verified CDM with circulant(x, v).
std::vector<Layer> expand(const Cdm& m);

/// Isomorphism witness: applying the column permutation
/// (block j, offset c) -> (block j, (p-c) mod p) together with the row
/// permutation y -> (p-y) mod p maps the layer of generator a onto the
/// layer of generator p-a.
Layer mirror_layer(const Layer& layer, int p);

/// Plain-text serialization: "v mu askew" header, then mu rows of v residues.
std::string to_cdm_text(const Cdm& m);
Cdm parse_cdm_text(const std::string& text);

} // namespace aqncc
