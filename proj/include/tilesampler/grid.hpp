// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace tilesampler {

/// Dense 2D array indexed (x, y), stored row-major in y.
template <class T>
class Grid2 {
  public:
    Grid2() = default;
    Grid2(int width, int height, T fill = T{})
        : width_(width), height_(height),
          data_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill)
    {
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    bool contains(int x, int y) const noexcept
    {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    T& operator()(int x, int y) noexcept
    {
        assert(contains(x, y));
        return data_[index(x, y)];
    }
    const T& operator()(int x, int y) const noexcept
    {
        assert(contains(x, y));
        return data_[index(x, y)];
    }

    // Out-of-range reads return `fallback`.
    T get_or(int x, int y, T fallback = T{}) const noexcept
    {
        return contains(x, y) ? data_[index(x, y)] : fallback;
    }

    std::size_t index(int x, int y) const noexcept
    {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    std::vector<T>& data() noexcept { return data_; }
    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Grid2&, const Grid2&) = default;

  private:
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

}  // namespace tilesampler
