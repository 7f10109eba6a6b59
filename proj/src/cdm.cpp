#include "aqncc/cdm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aqncc {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

BinMatrix circulant(int x, int p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("circulant: p must be an odd prime");
    if (x < 0 || x >= p) throw std::invalid_argument("circulant: residue out of range [0, p)");
    BinMatrix m(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    for (int y = 0; y < p; ++y) m.set(y, (x + y) % p, true);
    return m;
}

Cdm cdm_build(int p, bool askew) {
    if (!is_odd_prime(p))
        throw std::invalid_argument("cdm_build: p must be an odd prime");
    if (!askew && p < 5)
        throw std::invalid_argument("cdm_build: p >= 5 required unless askew");
    Cdm m;
    m.v = p;
    m.askew = askew;
    if (askew) m.rows.emplace_back(p, 0);
    for (int a = 1; a < p; ++a) {
        std::vector<int> row(p);
        for (int j = 0; j < p; ++j) row[j] = (a * j) % p;
        m.rows.push_back(std::move(row));
    }
    return m;
}

bool cdm_verify(const Cdm& m) {
    if (m.v <= 0) throw std::invalid_argument("cdm_verify: order must be positive");
    for (const auto& row : m.rows) {
        if (static_cast<int>(row.size()) != m.v)
            throw std::invalid_argument("cdm_verify: row length differs from order");
        for (int e : row)
            if (e < 0 || e >= m.v)
                throw std::invalid_argument("cdm_verify: entry not reduced mod v");
    }
    std::vector<char> seen(static_cast<std::size_t>(m.v));
    for (std::size_t i = 0; i + 1 < m.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < m.rows.size(); ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int l = 0; l < m.v; ++l) {
                const int d = ((m.rows[i][l] - m.rows[j][l]) % m.v + m.v) % m.v;
                if (seen[d]) return false;
                seen[d] = 1;
            }
        }
    }
    return true;
}

std::vector<Layer> expand(const Cdm& m) {
    if (!cdm_verify(m))
        throw std::invalid_argument("expand: input fails the cyclic difference check");
    const int p = m.v;
    std::vector<Layer> layers;
    layers.reserve(m.rows.size());
    for (std::size_t idx = 0; idx < m.rows.size(); ++idx) {
        Layer layer;
        layer.generator = m.askew ? static_cast<int>(idx) : static_cast<int>(idx) + 1;
        layer.mat = BinMatrix(static_cast<std::size_t>(p),
                              static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
        for (int block = 0; block < p; ++block) {
            const int x = m.rows[idx][block];
            for (int y = 0; y < p; ++y)
                layer.mat.set(y, block * p + (x + y) % p, true);
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

Layer mirror_layer(const Layer& layer, int p) {
    const auto pp = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
    if (layer.mat.rows() != static_cast<std::size_t>(p) || layer.mat.cols() != pp)
        throw std::invalid_argument("mirror_layer: shape is not p x p^2");
    Layer out;
    out.generator = (p - layer.generator) % p;
    out.mat = BinMatrix(layer.mat.rows(), layer.mat.cols());
    for (int y = 0; y < p; ++y) {
        const int src_row = (p - y) % p;
        for (auto c : layer.mat.row_support(src_row)) {
            const int block = static_cast<int>(c) / p;
            const int offset = static_cast<int>(c) % p;
            out.mat.set(y, block * p + (p - offset) % p, true);
        }
    }
    return out;
}

std::string to_cdm_text(const Cdm& m) {
    std::string out = std::to_string(m.v) + " " + std::to_string(m.mu()) + " " +
                      (m.askew ? "1" : "0") + "\n";
    for (const auto& row : m.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

Cdm parse_cdm_text(const std::string& text) {
    std::istringstream in(text);
    Cdm m;
    int mu = 0, askew = 0;
    if (!(in >> m.v >> mu >> askew) || m.v <= 0 || mu < 0 || (askew != 0 && askew != 1))
        throw std::invalid_argument("cdm: malformed header");
    m.askew = askew == 1;
    m.rows.assign(static_cast<std::size_t>(mu), std::vector<int>(static_cast<std::size_t>(m.v)));
    for (auto& row : m.rows)
        for (auto& e : row)
            if (!(in >> e)) throw std::invalid_argument("cdm: unexpected end of input");
    int extra;
    if (in >> extra) throw std::invalid_argument("cdm: trailing tokens");
    return m;
}

} // namespace aqncc
