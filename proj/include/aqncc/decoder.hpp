#pragma once

#include <cstdint>
#include <vector>

#include "aqncc/bin_matrix.hpp"

namespace aqncc {

struct DecodeOutcome {
    BitVector estimate;       // length n error estimate
    bool converged = false;   // H * estimate^T == syndrome
    int iterations_used = 0;
};

struct BpOptions {
    int max_iter = 100;
    /// Magnitudes fed to atanh are clamped to 1 - clamp_eps to avoid
    /// infinities in the check-node update.
    double clamp_eps = 1e-12;
};

/// Sum-product decoder over the Tanner graph of a fixed check matrix,
/// flooding schedule, syndrome form: check node j flips the sign of its
/// outgoing messages when syndrome bit j is one. The graph is built once;
/// decode() is const and safe to call from many threads at once when each
/// thread uses its own Scratch.
class SumProductDecoder {
public:
    explicit SumProductDecoder(const BinMatrix& h, BpOptions opts = {});

    std::size_t n_vars() const { return n_; }
    std::size_t n_checks() const { return m_; }

    struct Scratch {
        std::vector<double> v2c, c2v, tanh_buf, posterior, prefix;
        BitVector estimate;
    };
    Scratch make_scratch() const;

    DecodeOutcome decode(const BitVector& syndrome, double prior_p) const;
    DecodeOutcome decode(const BitVector& syndrome, double prior_p, Scratch& s) const;

private:
    std::size_t n_ = 0, m_ = 0;
    std::vector<std::uint32_t> edge_var_;   // variable of each edge, grouped by check
    std::vector<std::uint32_t> check_ptr_;  // m_+1 offsets into edge_var_
    std::vector<std::uint32_t> var_edges_;  // edge ids grouped by variable
    std::vector<std::uint32_t> var_ptr_;    // n_+1 offsets into var_edges_
    std::size_t max_check_deg_ = 0;
    BpOptions opts_;
};

/// One-shot convenience wrapper around SumProductDecoder.
/// Requires syndrome.size() == h.rows() and 0 < prior_p < 0.5.
DecodeOutcome bp_syndrome_decode(const BinMatrix& h, const BitVector& syndrome,
                                 double prior_p, int max_iter = 100);

} // namespace aqncc
