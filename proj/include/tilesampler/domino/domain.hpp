// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::domino {

/// A unit face of the square lattice; face (x, y) spans [x, x+1] x [y, y+1].
struct Face {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Face&, const Face&) = default;
};

/**
 * Simply-connected union of faces inside an n x n bounding box.
 *
 * Vertex (i, j) is column i, row j with the origin at the bottom-left; the
 * vertex grid is (n+1) x (n+1). Construction rejects disconnected domains,
 * domains with holes and domains with an odd number of faces.
 */
class Domain {
  public:
    Domain() = default;

    explicit Domain(Grid2<std::uint8_t> faces) : faces_(std::move(faces))
    {
        if (faces_.width() != faces_.height()) throw InvalidDomain("domain face grid must be square");
        n_ = faces_.width();
        if (n_ <= 0) throw InvalidDomain("domain side must be positive");
        validate();
    }

    int n() const noexcept { return n_; }
    int vertex_side() const noexcept { return n_ + 1; }
    int face_count() const noexcept { return face_count_; }

    bool contains(int x, int y) const noexcept { return faces_.get_or(x, y, 0) != 0; }
    bool contains(Face f) const noexcept { return contains(f.x, f.y); }

    /// True when at least one of the four faces around vertex (i, j) is in the domain.
    bool has_vertex(int i, int j) const noexcept
    {
        return contains(i - 1, j - 1) || contains(i, j - 1) || contains(i - 1, j) || contains(i, j);
    }

    const Grid2<std::uint8_t>& faces() const noexcept { return faces_; }

    /// Bottom-most, then left-most face.
    Face reference_face() const noexcept
    {
        for (int y = 0; y < n_; ++y)
            for (int x = 0; x < n_; ++x)
                if (contains(x, y)) return {x, y};
        return {};
    }

    friend bool operator==(const Domain& a, const Domain& b) { return a.faces_ == b.faces_; }

  private:
    void validate()
    {
        face_count_ = 0;
        for (auto f : faces_.data()) face_count_ += f ? 1 : 0;
        if (face_count_ == 0) throw InvalidDomain("domain has no faces");
        if (face_count_ % 2 != 0) {
            throw OddFaceCount("domain has an odd number of faces (" + std::to_string(face_count_) + ")");
        }
        // Edge-connectivity of the faces.
        const Face start = reference_face();
        if (flood(start, true, 0) != face_count_) throw InvalidDomain("domain faces are not edge-connected");
        // No holes: the complement, seen inside a one-cell margin, is edge-connected.
        const int outside = (n_ + 2) * (n_ + 2) - face_count_;
        if (flood({-1, -1}, false, 1) != outside) throw InvalidDomain("domain is not simply connected");
    }

    // Counts cells reachable from `start` whose membership equals `inside`, within a margin.
    int flood(Face start, bool inside, int margin) const
    {
        const int lo = -margin;
        const int hi = n_ + margin;
        const int side = hi - lo;
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(side * side), 0);
        auto slot = [&](int x, int y) -> std::uint8_t& { return seen[static_cast<std::size_t>((y - lo) * side + (x - lo))]; };
        std::queue<Face> work;
        work.push(start);
        slot(start.x, start.y) = 1;
        int count = 0;
        constexpr int dx[4] = {1, -1, 0, 0};
        constexpr int dy[4] = {0, 0, 1, -1};
        while (!work.empty()) {
            const Face f = work.front();
            work.pop();
            ++count;
            for (int k = 0; k < 4; ++k) {
                const int x = f.x + dx[k];
                const int y = f.y + dy[k];
                if (x < lo || y < lo || x >= hi || y >= hi) continue;
                if (contains(x, y) != inside || slot(x, y)) continue;
                slot(x, y) = 1;
                work.push({x, y});
            }
        }
        return count;
    }

    int n_ = 0;
    int face_count_ = 0;
    Grid2<std::uint8_t> faces_;
};

/// w x h rectangle in the bottom-left corner of a max(w, h) box.
inline Domain rectangle(int w, int h)
{
    if (w <= 0 || h <= 0) throw InvalidDomain("rectangle sides must be positive");
    const int n = std::max(w, h);
    Grid2<std::uint8_t> faces(n, n, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) faces(x, y) = 1;
    return Domain(std::move(faces));
}

inline Domain square(int n) { return rectangle(n, n); }

/// Aztec diamond of the given order in a 2*order box.
inline Domain aztec_diamond(int order)
{
    if (order <= 0) throw InvalidDomain("aztec diamond order must be positive");
    const int n = 2 * order;
    Grid2<std::uint8_t> faces(n, n, 0);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            // centre (x + 1/2, y + 1/2) within L1 distance `order` of (order, order)
            faces(x, y) = std::abs(2 * x + 1 - n) + std::abs(2 * y + 1 - n) <= n ? 1 : 0;
    return Domain(std::move(faces));
}

/// Reads "n" then n rows of '0'/'1', the first row being the top (y = n - 1).
inline Domain read_domain(std::istream& in)
{
    int n = 0;
    if (!(in >> n) || n <= 0) throw InvalidDomain("domain file: expected positive side length");
    Grid2<std::uint8_t> faces(n, n, 0);
    for (int row = 0; row < n; ++row) {
        std::string line;
        if (!(in >> line) || static_cast<int>(line.size()) != n) {
            throw InvalidDomain("domain file: row " + std::to_string(row) + " must have " + std::to_string(n) + " characters");
        }
        for (int x = 0; x < n; ++x) {
            if (line[static_cast<std::size_t>(x)] != '0' && line[static_cast<std::size_t>(x)] != '1') {
                throw InvalidDomain("domain file: characters must be '0' or '1'");
            }
            faces(x, n - 1 - row) = line[static_cast<std::size_t>(x)] == '1' ? 1 : 0;
        }
    }
    return Domain(std::move(faces));
}

inline void write_domain(std::ostream& out, const Domain& d)
{
    out << d.n() << '\n';
    for (int y = d.n() - 1; y >= 0; --y) {
        for (int x = 0; x < d.n(); ++x) out << (d.contains(x, y) ? '1' : '0');
        out << '\n';
    }
}

}  // namespace tilesampler::domino
