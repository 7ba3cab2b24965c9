#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace capset {

/// Encodes a point of F_p^n as a base-p integer, first coordinate most significant.
std::uint32_t encode_point(std::span<const std::uint8_t> coords, int p);
std::vector<std::uint8_t> decode_point(std::uint32_t code, int n, int p);

/// A set of points of F_p^n, stored as sorted distinct base-p codes.
class PointSet {
public:
    PointSet(int p, int n);
    PointSet(int p, int n, std::vector<std::uint32_t> codes);

    static PointSet whole_space(int p, int n);

    int p() const { return p_; }
    int n() const { return n_; }
    std::size_t size() const { return codes_.size(); }
    bool empty() const { return codes_.empty(); }
    const std::vector<std::uint32_t>& codes() const { return codes_; }
    std::vector<std::uint8_t> point(std::size_t i) const { return decode_point(codes_[i], n_, p_); }
    bool contains(std::uint32_t code) const;
    std::uint32_t universe_size() const;

    void insert(std::uint32_t code);
    PointSet complement() const;

    bool operator==(const PointSet&) const = default;

private:
    int p_;
    int n_;
    std::vector<std::uint32_t> codes_;
};

/// Reads one point per line as n whitespace-separated digits in [0, p-1]. '#' starts a
/// comment; blank lines are skipped. n is taken from the first point when expected_n < 0.
PointSet read_point_set(std::istream& in, int p = 3, int expected_n = -1);
void write_point_set(std::ostream& out, const PointSet& set);

}  // namespace capset
