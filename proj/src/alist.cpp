#include "aqncc/alist.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace aqncc {

std::string to_alist(const BinMatrix& m) {
    const auto cols = m.col_supports();
    const auto rows = m.row_supports();
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : cols) max_col = std::max(max_col, c.size());
    for (const auto& r : rows) max_row = std::max(max_row, r.size());

    std::string out;
    auto line = [&out](auto&&... xs) {
        bool first = true;
        ((out += (first ? "" : " "), out += std::to_string(xs), first = false), ...);
        out += '\n';
    };
    line(m.cols(), m.rows());
    line(max_col, max_row);

    auto degrees = [&out](const auto& lists) {
        for (std::size_t i = 0; i < lists.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(lists[i].size());
        }
        out += '\n';
    };
    degrees(cols);
    degrees(rows);

    auto supports = [&out](const auto& lists, std::size_t pad) {
        for (const auto& lst : lists) {
            for (std::size_t k = 0; k < pad; ++k) {
                if (k) out += ' ';
                out += std::to_string(k < lst.size() ? lst[k] + 1 : 0);
            }
            out += '\n';
        }
    };
    supports(cols, max_col);
    supports(rows, max_row);
    return out;
}

namespace {

class TokenReader {
public:
    explicit TokenReader(const std::string& text) : in_(text) {}
    long next() {
        long v;
        if (!(in_ >> v)) throw std::invalid_argument("alist: unexpected end of input");
        return v;
    }
    bool exhausted() {
        long v;
        return !(in_ >> v);
    }

private:
    std::istringstream in_;
};

} // namespace

BinMatrix parse_alist(const std::string& text) {
    TokenReader tok(text);
    const long n = tok.next(), m = tok.next();
    if (n < 0 || m < 0) throw std::invalid_argument("alist: negative dimension");
    const long max_col = tok.next(), max_row = tok.next();
    if (max_col < 0 || max_row < 0) throw std::invalid_argument("alist: negative degree");

    std::vector<long> col_deg(n), row_deg(m);
    for (auto& d : col_deg) d = tok.next();
    for (auto& d : row_deg) d = tok.next();

    BinMatrix mat(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long c = 0; c < n; ++c) {
        if (col_deg[c] > max_col) throw std::invalid_argument("alist: column degree exceeds maximum");
        for (long k = 0; k < max_col; ++k) {
            const long r = tok.next();
            if (k < col_deg[c]) {
                if (r < 1 || r > m) throw std::invalid_argument("alist: row index out of range");
                mat.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c), true);
            } else if (r != 0) {
                throw std::invalid_argument("alist: expected zero padding in column list");
            }
        }
    }
    for (long r = 0; r < m; ++r) {
        if (row_deg[r] > max_row) throw std::invalid_argument("alist: row degree exceeds maximum");
        for (long k = 0; k < max_row; ++k) {
            const long c = tok.next();
            if (k < row_deg[r]) {
                if (c < 1 || c > n) throw std::invalid_argument("alist: column index out of range");
                if (!mat.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c - 1)))
                    throw std::invalid_argument("alist: row list disagrees with column list");
            } else if (c != 0) {
                throw std::invalid_argument("alist: expected zero padding in row list");
            }
        }
    }
    std::size_t ones = 0;
    for (long c = 0; c < n; ++c) ones += static_cast<std::size_t>(col_deg[c]);
    if (ones != mat.count_ones())
        throw std::invalid_argument("alist: degree lists disagree with supports");
    for (long r = 0; r < m; ++r) {
        if (static_cast<std::size_t>(row_deg[r]) != mat.row_support(static_cast<std::size_t>(r)).size())
            throw std::invalid_argument("alist: row degree disagrees with supports");
    }
    if (!tok.exhausted()) throw std::invalid_argument("alist: trailing tokens");
    return mat;
}

BinMatrix read_alist_file(const std::filesystem::path& path) {
    return parse_alist(read_text_file(path));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    auto dir = path.parent_path();
    if (!dir.empty()) std::filesystem::create_directories(dir);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open file for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw std::runtime_error("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace aqncc
