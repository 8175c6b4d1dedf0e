// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "tilesampler/errors.hpp"

namespace tilesampler::sweep {

/// Fixed set of worker threads running one band-partitioned job at a time.
class WorkerPool {
  public:
    explicit WorkerPool(int workers)
    {
        for (int w = 0; w < workers; ++w) threads_.emplace_back([this, w] { loop(w); });
    }

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    ~WorkerPool()
    {
        {
            std::lock_guard lock(mutex_);
            stop_ = true;
        }
        wake_.notify_all();
        for (auto& t : threads_) t.join();
    }

    int size() const noexcept { return static_cast<int>(threads_.size()); }

    /// Runs job(w) on every worker w and returns once all have finished.
    /// Concurrent callers are served one at a time.
    void run(const std::function<void(int)>& job)
    {
        std::lock_guard caller(run_mutex_);
        std::unique_lock lock(mutex_);
        job_ = &job;
        pending_ = size();
        ++generation_;
        wake_.notify_all();
        done_.wait(lock, [this] { return pending_ == 0; });
        job_ = nullptr;
    }

  private:
    void loop(int w)
    {
        unsigned long seen = 0;
        for (;;) {
            const std::function<void(int)>* job = nullptr;
            {
                std::unique_lock lock(mutex_);
                wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
                job = job_;
            }
            (*job)(w);
            {
                std::lock_guard lock(mutex_);
                if (--pending_ == 0) done_.notify_one();
            }
        }
    }

    std::vector<std::thread> threads_;
    std::mutex run_mutex_;
    std::mutex mutex_;
    std::condition_variable wake_;
    std::condition_variable done_;
    const std::function<void(int)>* job_ = nullptr;
    int pending_ = 0;
    unsigned long generation_ = 0;
    bool stop_ = false;
};

/**
 * Execution strategy for per-site kernels. MultiThreaded splits the row range
 * into contiguous bands, one per worker; each call is a barrier.
 */
class Backend {
  public:
    enum class Kind { Sequential, MultiThreaded };

    static Backend sequential() { return Backend(); }

    static Backend threads(int workers)
    {
        if (workers < 1) throw InvalidInput("worker count must be at least 1");
        Backend b;
        b.kind_ = Kind::MultiThreaded;
        b.pool_ = std::make_shared<WorkerPool>(workers);
        return b;
    }

    Kind kind() const noexcept { return kind_; }
    int workers() const noexcept { return pool_ ? pool_->size() : 1; }
    std::string name() const
    {
        return kind_ == Kind::Sequential ? "seq" : "threads(" + std::to_string(workers()) + ")";
    }

    /// Calls body(begin, end) over a partition of [0, rows).
    template <class Body>
    void for_rows(int rows, Body&& body) const
    {
        if (!pool_ || rows <= 1) {
            body(0, rows);
            return;
        }
        const int w = pool_->size();
        const std::function<void(int)> job = [&](int k) {
            const int begin = static_cast<int>(static_cast<long long>(rows) * k / w);
            const int end = static_cast<int>(static_cast<long long>(rows) * (k + 1) / w);
            if (begin < end) body(begin, end);
        };
        pool_->run(job);
    }

  private:
    Backend() = default;

    Kind kind_ = Kind::Sequential;
    std::shared_ptr<WorkerPool> pool_;
};

/// Worker count from TILESAMPLER_THREADS, else the hardware concurrency.
inline int default_thread_count()
{
    if (const char* env = std::getenv("TILESAMPLER_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace tilesampler::sweep
