#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aqncc/bin_matrix.hpp"
#include "aqncc/cdm.hpp"

#include <nlohmann/json_fwd.hpp>

namespace aqncc {

/// Family + rebalance configuration.
///   p      odd prime (>= 5, or >= 3 askew)
///   i      layers discarded per side: 0 <= i <= (p-5)/2, askew (p-3)/2
///   r      layers moved from the bit side to the phase side;
///          the bit side must retain at least one layer
///   askew  prepend the all-zero layer on the phase side
struct AqnccConfig {
    int p = 0;
    int i = 0;
    int r = 0;
    bool askew = false;
};

int max_discard(int p, bool askew);
int bit_layers_after_discard(const AqnccConfig& cfg);
int max_rebalance(const AqnccConfig& cfg);

/// Throws std::invalid_argument naming the violated bound.
void validate(const AqnccConfig& cfg);

/// The live code: both check matrices plus which layers sit on each side,
/// identified by their CDM-row generators in stacking order.
struct CodePair {
    BinMatrix h1;                  // phase side H1'
    BinMatrix h2;                  // bit side H2'
    AqnccConfig cfg;
    std::vector<int> phase_layers; // generators, top to bottom
    std::vector<int> bit_layers;
};

/// Build the pair at cfg. Non-askew: phase side takes generators 1..(p-1)/2
/// ascending, bit side p-1 down to (p+1)/2 descending, so that positions
/// pair up under a <-> p-a; i layers are dropped from the tail of each side
/// and r layers move tail-first from the bit side (for p=7, r=1 moves the
/// layer of generator 4, r=2 moves 4 then 5). Askew prepends generator 0 on
/// the phase side.
CodePair assemble(const AqnccConfig& cfg);

/// Re-assemble the pair's family at a new rebalance level.
CodePair rebalance(const CodePair& pair, int new_r);

enum class Girth { four, six, eight_or_more, acyclic };
const char* to_string(Girth g);

/// Shortest-cycle class of a parity-check matrix: a 4-cycle is a 2x2 all-ones
/// submatrix; a 6-cycle is a 3x3 submatrix with every row and column weight
/// exactly two.
Girth girth(const BinMatrix& m);

/// Derived code record. k = n - rank_h1 - rank_h2 + c with
/// c = rank(h1 h2^T); every rank is computed by elimination, never assumed.
/// Weight fields are nullopt when the corresponding matrix is irregular.
struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t c = 0;
    std::size_t rank_h1 = 0;
    std::size_t rank_h2 = 0;
    Girth girth = Girth::acyclic;  // min over the two sides
    std::optional<int> row_weight;
    std::optional<int> col_weight_phase;
    std::optional<int> col_weight_bit;
};

CodeParams params(const CodePair& pair);

/// rank(h1 h2^T) == 1 and no 4-cycles on either side.
bool criterion3_holds(const BinMatrix& h1, const BinMatrix& h2);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool required = true;   // criterion 1 is waived for askew families
    bool passed = false;
    std::string detail;
};

struct CriteriaReport {
    int p = 0;
    int i = 0;
    bool askew = false;
    std::array<CriterionResult, 6> criteria;
    bool all_required_passed() const;
};

/// Audit the six design criteria for the family (p, i, askew) across every
/// legal rebalance level.
CriteriaReport check_criteria(int p, int i, bool askew);

nlohmann::json params_json(const CodeParams& cp);
nlohmann::json pair_meta_json(const CodePair& pair, const CodeParams& cp);
nlohmann::json criteria_json(const CriteriaReport& report);

} // namespace aqncc
