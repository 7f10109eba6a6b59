#include "aqncc/code_family.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace aqncc {

int max_discard(int p, bool askew) { return askew ? (p - 3) / 2 : (p - 5) / 2; }

int bit_layers_after_discard(const AqnccConfig& cfg) {
    return (cfg.p - 1) / 2 - cfg.i;
}

int max_rebalance(const AqnccConfig& cfg) { return bit_layers_after_discard(cfg) - 1; }

void validate(const AqnccConfig& cfg) {
    if (!is_odd_prime(cfg.p))
        throw std::invalid_argument("config: p must be an odd prime, got " +
                                    std::to_string(cfg.p));
    if (!cfg.askew && cfg.p < 5)
        throw std::invalid_argument("config: p >= 5 required for the non-askew family");
    const int imax = max_discard(cfg.p, cfg.askew);
    if (cfg.i < 0 || cfg.i > imax)
        throw std::invalid_argument("config: i must satisfy 0 <= i <= " +
                                    std::to_string(imax) + " (" +
                                    (cfg.askew ? "(p-3)/2" : "(p-5)/2") + "), got " +
                                    std::to_string(cfg.i));
    const int rmax = max_rebalance(cfg);
    if (cfg.r < 0 || cfg.r > rmax)
        throw std::invalid_argument(
            "config: r must satisfy 0 <= r <= " + std::to_string(rmax) +
            " (bit side keeps at least one layer), got " + std::to_string(cfg.r));
}

namespace {

BinMatrix stack_layers(const std::vector<Layer>& layers, const std::vector<int>& gens) {
    if (gens.empty()) return BinMatrix(0, layers.front().mat.cols());
    const std::size_t p = layers.front().mat.rows();
    BinMatrix out(gens.size() * p, layers.front().mat.cols());
    std::size_t at = 0;
    for (int g : gens) {
        const Layer* found = nullptr;
        for (const auto& l : layers)
            if (l.generator == g) { found = &l; break; }
        if (!found) throw std::logic_error("stack_layers: missing generator");
        for (std::size_t y = 0; y < p; ++y) out.assign_row(at++, found->mat.row(y));
    }
    return out;
}

struct LayerSplit {
    std::vector<int> phase, bit;
};

LayerSplit split_for(const AqnccConfig& cfg) {
    const int m = (cfg.p - 1) / 2;
    LayerSplit s;
    if (cfg.askew) s.phase.push_back(0);
    for (int a = 1; a <= m - cfg.i; ++a) s.phase.push_back(a);
    for (int a = cfg.p - 1; a >= cfg.p - m + cfg.i; --a) s.bit.push_back(a);
    for (int t = 0; t < cfg.r; ++t) {
        s.phase.push_back(s.bit.back());
        s.bit.pop_back();
    }
    return s;
}

} // namespace

CodePair assemble(const AqnccConfig& cfg) {
    validate(cfg);
    const auto layers = expand(cdm_build(cfg.p, cfg.askew));
    const auto split = split_for(cfg);
    CodePair pair;
    pair.cfg = cfg;
    pair.phase_layers = split.phase;
    pair.bit_layers = split.bit;
    pair.h1 = stack_layers(layers, split.phase);
    pair.h2 = stack_layers(layers, split.bit);
    return pair;
}

CodePair rebalance(const CodePair& pair, int new_r) {
    AqnccConfig cfg = pair.cfg;
    cfg.r = new_r;
    return assemble(cfg);
}

const char* to_string(Girth g) {
    switch (g) {
        case Girth::four: return "4";
        case Girth::six: return "6";
        case Girth::eight_or_more: return ">=8";
        case Girth::acyclic: return "acyclic";
    }
    return "?";
}

namespace {

// Union-find cycle probe used once 4- and 6-cycles are ruled out.
struct Dsu {
    std::vector<std::uint32_t> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

Girth girth(const BinMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t wpr = m.words_per_row();

    // Pass 1: pairwise row intersections. Two or more shared columns is a
    // 2x2 all-ones submatrix; exactly one is an edge in the row-adjacency
    // graph, with the shared column stored for the 6-cycle test.
    std::vector<std::int32_t> shared(rows * rows, -1);
    const std::size_t adj_words = (rows + 63) / 64;
    std::vector<std::uint64_t> adj(rows * adj_words, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        auto ri = m.row_words(i);
        for (std::size_t j = i + 1; j < rows; ++j) {
            auto rj = m.row_words(j);
            std::size_t count = 0;
            std::int32_t col = -1;
            for (std::size_t w = 0; w < wpr; ++w) {
                const std::uint64_t x = ri[w] & rj[w];
                if (x) {
                    count += std::popcount(x);
                    if (count >= 2) return Girth::four;
                    col = static_cast<std::int32_t>(w * 64 + std::countr_zero(x));
                }
            }
            if (count == 1) {
                shared[i * rows + j] = col;
                shared[j * rows + i] = col;
                adj[i * adj_words + (j >> 6)] |= std::uint64_t{1} << (j & 63);
                adj[j * adj_words + (i >> 6)] |= std::uint64_t{1} << (i & 63);
            }
        }
    }

    // Pass 2: a 6-cycle is a row triangle whose three shared columns are
    // pairwise distinct (equal columns would only form a star).
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = i + 1; j < rows; ++j) {
            const std::int32_t cij = shared[i * rows + j];
            if (cij < 0) continue;
            for (std::size_t w = 0; w < adj_words; ++w) {
                std::uint64_t cand = adj[i * adj_words + w] & adj[j * adj_words + w];
                while (cand) {
                    const std::size_t k = w * 64 + std::countr_zero(cand);
                    cand &= cand - 1;
                    if (k <= j) continue;
                    const std::int32_t cik = shared[i * rows + k];
                    const std::int32_t cjk = shared[j * rows + k];
                    if (cik != cij && cjk != cij && cik != cjk) return Girth::six;
                }
            }
        }
    }

    // Pass 3: any remaining cycle is length >= 8; detect with union-find on
    // the bipartite row/column incidence graph.
    Dsu dsu(rows + m.cols());
    for (std::size_t r = 0; r < rows; ++r)
        for (auto c : m.row_support(r))
            if (!dsu.unite(static_cast<std::uint32_t>(r),
                           static_cast<std::uint32_t>(rows + c)))
                return Girth::eight_or_more;
    return Girth::acyclic;
}

namespace {

std::optional<int> constant_row_weight(const BinMatrix& m) {
    if (m.rows() == 0) return 0;
    const int w0 = static_cast<int>(m.row_support(0).size());
    for (std::size_t r = 1; r < m.rows(); ++r)
        if (static_cast<int>(m.row_support(r).size()) != w0) return std::nullopt;
    return w0;
}

std::optional<int> constant_col_weight(const BinMatrix& m) {
    const auto cols = m.col_supports();
    if (cols.empty()) return 0;
    const int w0 = static_cast<int>(cols[0].size());
    for (const auto& c : cols)
        if (static_cast<int>(c.size()) != w0) return std::nullopt;
    return w0;
}

} // namespace

CodeParams params(const CodePair& pair) {
    CodeParams cp;
    cp.n = pair.h1.cols();
    cp.rank_h1 = rank(pair.h1);
    cp.rank_h2 = rank(pair.h2);
    cp.c = rank(mul_transpose(pair.h1, pair.h2));
    cp.k = cp.n + cp.c - cp.rank_h1 - cp.rank_h2;
    const Girth g1 = girth(pair.h1);
    const Girth g2 = girth(pair.h2);
    cp.girth = static_cast<Girth>(std::min(static_cast<int>(g1), static_cast<int>(g2)));
    const auto rw1 = constant_row_weight(pair.h1);
    const auto rw2 = constant_row_weight(pair.h2);
    if (rw1 && rw2 && (pair.h2.rows() == 0 || pair.h1.rows() == 0 || *rw1 == *rw2))
        cp.row_weight = pair.h1.rows() ? rw1 : rw2;
    cp.col_weight_phase = constant_col_weight(pair.h1);
    cp.col_weight_bit = constant_col_weight(pair.h2);
    return cp;
}

bool criterion3_holds(const BinMatrix& h1, const BinMatrix& h2) {
    if (girth(h1) == Girth::four || girth(h2) == Girth::four) return false;
    return rank(mul_transpose(h1, h2)) == 1;
}

bool CriteriaReport::all_required_passed() const {
    for (const auto& c : criteria)
        if (c.required && !c.passed) return false;
    return true;
}

CriteriaReport check_criteria(int p, int i, bool askew) {
    AqnccConfig base{p, i, 0, askew};
    validate(base);

    CriteriaReport rep;
    rep.p = p;
    rep.i = i;
    rep.askew = askew;

    const auto layers = expand(cdm_build(p, askew));
    const int rmax = max_rebalance(base);
    std::vector<CodePair> pairs;
    for (int r = 0; r <= rmax; ++r) {
        AqnccConfig cfg = base;
        cfg.r = r;
        pairs.push_back(assemble(cfg));
    }
    const CodePair& pair0 = pairs.front();

    // 1) isomorphic but not identical, girth six or greater
    auto& c1 = rep.criteria[0];
    c1.id = 1;
    c1.name = "isomorphic non-identical pair with girth >= 6";
    if (askew) {
        c1.required = false;
        c1.passed = true;
        c1.detail = "askew: not required (phase side dominates by construction)";
    } else {
        bool iso = pair0.phase_layers.size() == pair0.bit_layers.size();
        if (iso) {
            for (std::size_t pos = 0; pos < pair0.phase_layers.size() && iso; ++pos) {
                const int bit_gen = pair0.bit_layers[pos];
                const Layer* src = nullptr;
                for (const auto& l : layers)
                    if (l.generator == bit_gen) src = &l;
                const Layer mirrored = mirror_layer(*src, p);
                const Layer* target = nullptr;
                for (const auto& l : layers)
                    if (l.generator == pair0.phase_layers[pos]) target = &l;
                iso = mirrored.generator == target->generator && mirrored.mat == target->mat;
            }
        }
        const bool distinct = !(pair0.h1 == pair0.h2);
        const Girth g1 = girth(pair0.h1), g2 = girth(pair0.h2);
        const bool girth_ok = g1 != Girth::four && g2 != Girth::four;
        c1.passed = iso && distinct && girth_ok;
        c1.detail = std::string("mirror witness ") + (iso ? "maps H2 onto H1" : "FAILED") +
                    "; H1" + (distinct ? " != " : " == ") + "H2; girth(H1)=" +
                    to_string(g1) + " girth(H2)=" + to_string(g2);
    }

    // 2) rk(H1 H2^T) = 1
    auto& c2 = rep.criteria[1];
    c2.id = 2;
    c2.name = "rank(H1 H2^T) = 1";
    const std::size_t c0 = rank(mul_transpose(pair0.h1, pair0.h2));
    c2.passed = c0 == 1;
    c2.detail = "rank = " + std::to_string(c0);

    // 3) every rebalance level keeps rank(H1' H2'^T) = 1 without 4-cycles
    auto& c3 = rep.criteria[2];
    c3.id = 3;
    c3.name = "all rebalance levels keep rank 1 and stay 4-cycle-free";
    c3.passed = true;
    c3.detail = "girths per r:";
    for (int r = 0; r <= rmax; ++r) {
        const auto& pr = pairs[static_cast<std::size_t>(r)];
        const std::size_t cr = rank(mul_transpose(pr.h1, pr.h2));
        const Girth g1 = girth(pr.h1), g2 = girth(pr.h2);
        if (cr != 1 || g1 == Girth::four || g2 == Girth::four) c3.passed = false;
        c3.detail += " r=" + std::to_string(r) + ":(" + to_string(g1) + "," +
                     to_string(g2) + ",c=" + std::to_string(cr) + ")";
    }

    // 4) rank sum invariant over r
    auto& c4 = rep.criteria[3];
    c4.id = 4;
    c4.name = "rank(H1') + rank(H2') constant over r";
    c4.passed = true;
    std::size_t sum0 = 0;
    c4.detail = "sums:";
    for (int r = 0; r <= rmax; ++r) {
        const auto& pr = pairs[static_cast<std::size_t>(r)];
        const std::size_t s = rank(pr.h1) + rank(pr.h2);
        if (r == 0) sum0 = s;
        if (s != sum0) c4.passed = false;
        c4.detail += " " + std::to_string(s);
    }

    // 5) constant row and column weights at r = 0
    auto& c5 = rep.criteria[4];
    c5.id = 5;
    c5.name = "H1 and H2 row- and column-regular";
    {
        const auto rw1 = constant_row_weight(pair0.h1);
        const auto rw2 = constant_row_weight(pair0.h2);
        const auto cw1 = constant_col_weight(pair0.h1);
        const auto cw2 = constant_col_weight(pair0.h2);
        c5.passed = rw1 && rw2 && cw1 && cw2;
        auto show = [](const std::optional<int>& w) {
            return w ? std::to_string(*w) : std::string("irregular");
        };
        c5.detail = "row weights " + show(rw1) + "/" + show(rw2) + ", column weights " +
                    show(cw1) + "/" + show(cw2);
    }

    // 6) each moved block R has constant column weight
    auto& c6 = rep.criteria[5];
    c6.id = 6;
    c6.name = "moved block R column-regular for every r";
    c6.passed = true;
    c6.detail = "column weights:";
    for (int r = 1; r <= rmax; ++r) {
        const auto& pr = pairs[static_cast<std::size_t>(r)];
        std::vector<int> moved(pr.phase_layers.begin() + static_cast<long>(pair0.phase_layers.size()),
                               pr.phase_layers.end());
        const BinMatrix block = stack_layers(layers, moved);
        const auto cw = constant_col_weight(block);
        if (!cw) c6.passed = false;
        c6.detail += " r=" + std::to_string(r) + ":" +
                     (cw ? std::to_string(*cw) : std::string("irregular"));
    }
    if (rmax == 0) c6.detail += " (no movable layers)";

    return rep;
}

nlohmann::json params_json(const CodeParams& cp) {
    nlohmann::json j;
    j["n"] = cp.n;
    j["k"] = cp.k;
    j["c"] = cp.c;
    j["rank_h1"] = cp.rank_h1;
    j["rank_h2"] = cp.rank_h2;
    j["girth"] = to_string(cp.girth);
    auto weight = [](const std::optional<int>& w) {
        return w ? nlohmann::json(*w) : nlohmann::json("irregular");
    };
    j["row_weight"] = weight(cp.row_weight);
    j["col_weight_phase"] = weight(cp.col_weight_phase);
    j["col_weight_bit"] = weight(cp.col_weight_bit);
    return j;
}

nlohmann::json pair_meta_json(const CodePair& pair, const CodeParams& cp) {
    nlohmann::json j;
    j["p"] = pair.cfg.p;
    j["i"] = pair.cfg.i;
    j["r"] = pair.cfg.r;
    j["askew"] = pair.cfg.askew;
    j["phase_layers"] = pair.phase_layers;
    j["bit_layers"] = pair.bit_layers;
    j["params"] = params_json(cp);
    return j;
}

nlohmann::json criteria_json(const CriteriaReport& rep) {
    nlohmann::json j;
    j["p"] = rep.p;
    j["i"] = rep.i;
    j["askew"] = rep.askew;
    j["all_required_passed"] = rep.all_required_passed();
    j["criteria"] = nlohmann::json::array();
    for (const auto& c : rep.criteria) {
        j["criteria"].push_back({{"id", c.id},
                                 {"name", c.name},
                                 {"required", c.required},
                                 {"passed", c.passed},
                                 {"detail", c.detail}});
    }
    return j;
}

} // namespace aqncc
