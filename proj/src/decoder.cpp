#include "aqncc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aqncc {

SumProductDecoder::SumProductDecoder(const BinMatrix& h, BpOptions opts)
    : n_(h.cols()), m_(h.rows()), opts_(opts) {
    check_ptr_.assign(m_ + 1, 0);
    for (std::size_t j = 0; j < m_; ++j) {
        const auto support = h.row_support(j);
        check_ptr_[j + 1] = check_ptr_[j] + static_cast<std::uint32_t>(support.size());
        max_check_deg_ = std::max(max_check_deg_, support.size());
        edge_var_.insert(edge_var_.end(), support.begin(), support.end());
    }
    // group edge ids by variable
    var_ptr_.assign(n_ + 1, 0);
    for (auto v : edge_var_) ++var_ptr_[v + 1];
    for (std::size_t v = 0; v < n_; ++v) var_ptr_[v + 1] += var_ptr_[v];
    var_edges_.resize(edge_var_.size());
    std::vector<std::uint32_t> cursor(var_ptr_.begin(), var_ptr_.end() - 1);
    for (std::uint32_t e = 0; e < edge_var_.size(); ++e)
        var_edges_[cursor[edge_var_[e]]++] = e;
}

SumProductDecoder::Scratch SumProductDecoder::make_scratch() const {
    Scratch s;
    s.v2c.resize(edge_var_.size());
    s.c2v.resize(edge_var_.size());
    s.tanh_buf.resize(edge_var_.size());
    s.posterior.resize(n_);
    s.prefix.resize(max_check_deg_ + 1);
    s.estimate = BitVector(n_);
    return s;
}

DecodeOutcome SumProductDecoder::decode(const BitVector& syndrome, double prior_p) const {
    Scratch s = make_scratch();
    return decode(syndrome, prior_p, s);
}

DecodeOutcome SumProductDecoder::decode(const BitVector& syndrome, double prior_p,
                                        Scratch& s) const {
    if (syndrome.size() != m_)
        throw std::invalid_argument("bp_syndrome_decode: syndrome length != check count");
    if (!(prior_p > 0.0 && prior_p < 0.5))
        throw std::invalid_argument("bp_syndrome_decode: prior must lie in (0, 0.5)");

    DecodeOutcome out;
    out.estimate = BitVector(n_);

    // Iteration 0: the prior favors "no error", so the initial hard decision
    // is the zero word; it reproduces the syndrome iff the syndrome is zero.
    if (!syndrome.any()) {
        out.converged = true;
        out.iterations_used = 0;
        return out;
    }

    const double prior_llr = std::log((1.0 - prior_p) / prior_p);
    const double clamp = 1.0 - opts_.clamp_eps;
    std::fill(s.v2c.begin(), s.v2c.end(), prior_llr);
    auto& prefix = s.prefix;

    for (int iter = 1; iter <= opts_.max_iter; ++iter) {
        // check-node update, tanh product with the syndrome sign rule
        for (std::size_t j = 0; j < m_; ++j) {
            const std::uint32_t begin = check_ptr_[j], end = check_ptr_[j + 1];
            const double sign = syndrome.get(j) ? -1.0 : 1.0;
            prefix[0] = 1.0;
            for (std::uint32_t e = begin; e < end; ++e) {
                s.tanh_buf[e] = std::tanh(0.5 * s.v2c[e]);
                prefix[e - begin + 1] = prefix[e - begin] * s.tanh_buf[e];
            }
            double suffix = 1.0;
            for (std::uint32_t e = end; e-- > begin;) {
                double t = sign * prefix[e - begin] * suffix;
                t = std::clamp(t, -clamp, clamp);
                s.c2v[e] = 2.0 * std::atanh(t);
                suffix *= s.tanh_buf[e];
            }
        }

        // variable-node update and hard decision; a posterior of exactly
        // zero decides "no error"
        for (std::size_t v = 0; v < n_; ++v) {
            double total = prior_llr;
            for (std::uint32_t k = var_ptr_[v]; k < var_ptr_[v + 1]; ++k)
                total += s.c2v[var_edges_[k]];
            s.posterior[v] = total;
            for (std::uint32_t k = var_ptr_[v]; k < var_ptr_[v + 1]; ++k) {
                const std::uint32_t e = var_edges_[k];
                s.v2c[e] = total - s.c2v[e];
            }
            s.estimate.set(v, total < 0.0);
        }

        bool match = true;
        for (std::size_t j = 0; j < m_ && match; ++j) {
            bool parity = false;
            for (std::uint32_t e = check_ptr_[j]; e < check_ptr_[j + 1]; ++e)
                parity ^= s.estimate.get(edge_var_[e]);
            match = parity == syndrome.get(j);
        }
        if (match) {
            out.estimate = s.estimate;
            out.converged = true;
            out.iterations_used = iter;
            return out;
        }
    }

    out.estimate = s.estimate;
    out.converged = false;
    out.iterations_used = opts_.max_iter;
    return out;
}

DecodeOutcome bp_syndrome_decode(const BinMatrix& h, const BitVector& syndrome,
                                 double prior_p, int max_iter) {
    BpOptions opts;
    opts.max_iter = max_iter;
    SumProductDecoder dec(h, opts);
    return dec.decode(syndrome, prior_p);
}

} // namespace aqncc
