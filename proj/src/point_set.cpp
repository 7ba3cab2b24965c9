#include "capset/point_set.hpp"

#include "capset/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace capset {

std::uint32_t encode_point(std::span<const std::uint8_t> coords, int p) {
    std::uint32_t code = 0;
    for (auto c : coords) {
        if (c >= p) throw DomainError("encode_point: coordinate " + std::to_string(c) + " not below " + std::to_string(p));
        code = code * static_cast<std::uint32_t>(p) + c;
    }
    return code;
}

std::vector<std::uint8_t> decode_point(std::uint32_t code, int n, int p) {
    std::vector<std::uint8_t> coords(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % static_cast<std::uint32_t>(p));
        code /= static_cast<std::uint32_t>(p);
    }
    return coords;
}

PointSet::PointSet(int p, int n) : p_(p), n_(n) {
    if (p < 2) throw DomainError("PointSet: p must be at least 2");
    if (n < 0) throw DomainError("PointSet: negative dimension");
    double size = 1;
    for (int i = 0; i < n; ++i) size *= p;
    if (size > 1e9) throw DomainError("PointSet: F_p^n too large to enumerate");
}

PointSet::PointSet(int p, int n, std::vector<std::uint32_t> codes) : PointSet(p, n) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    if (!codes.empty() && codes.back() >= universe_size())
        throw DomainError("PointSet: point code " + std::to_string(codes.back()) + " out of range");
    codes_ = std::move(codes);
}

PointSet PointSet::whole_space(int p, int n) {
    PointSet s(p, n);
    s.codes_.resize(s.universe_size());
    for (std::uint32_t i = 0; i < s.codes_.size(); ++i) s.codes_[i] = i;
    return s;
}

std::uint32_t PointSet::universe_size() const {
    std::uint32_t size = 1;
    for (int i = 0; i < n_; ++i) size *= static_cast<std::uint32_t>(p_);
    return size;
}

bool PointSet::contains(std::uint32_t code) const {
    return std::binary_search(codes_.begin(), codes_.end(), code);
}

void PointSet::insert(std::uint32_t code) {
    if (code >= universe_size()) throw DomainError("PointSet: point code out of range");
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) codes_.insert(it, code);
}

PointSet PointSet::complement() const {
    PointSet out(p_, n_);
    for (std::uint32_t c = 0; c < universe_size(); ++c)
        if (!contains(c)) out.codes_.push_back(c);
    return out;
}

PointSet read_point_set(std::istream& in, int p, int expected_n) {
    std::vector<std::uint32_t> codes;
    int n = expected_n;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::uint8_t> coords;
        long value;
        while (fields >> value) {
            if (value < 0 || value >= p)
                throw DomainError("point set line " + std::to_string(line_no) + ": digit " + std::to_string(value) +
                                  " outside [0," + std::to_string(p - 1) + "]");
            coords.push_back(static_cast<std::uint8_t>(value));
        }
        if (!fields.eof()) throw DomainError("point set line " + std::to_string(line_no) + ": not a digit list");
        if (coords.empty()) continue;
        if (n < 0) n = static_cast<int>(coords.size());
        if (static_cast<int>(coords.size()) != n)
            throw DomainError("point set line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                              " coordinates, got " + std::to_string(coords.size()));
        codes.push_back(encode_point(coords, p));
    }
    if (n < 0) throw DomainError("point set: no points and no dimension given");
    return PointSet(p, n, std::move(codes));
}

void write_point_set(std::ostream& out, const PointSet& set) {
    out << "# " << set.size() << " points in F_" << set.p() << "^" << set.n() << "\n";
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto x = set.point(i);
        for (std::size_t j = 0; j < x.size(); ++j) out << (j ? " " : "") << static_cast<int>(x[j]);
        out << "\n";
    }
}

}  // namespace capset
